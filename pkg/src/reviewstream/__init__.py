"""Streaming lockstep-fraud analysis for app review edge streams.

Reviews are modelled as a time-ordered edge stream over a dynamic
bipartite reviewer-app graph. The stream is split into rating-boosting
and rating-sinking sub-streams, each scored by a constant-memory
streaming detector that flags microcluster bursts; suspicious clusters
are ranked and mined for near-identical review pairs.
"""

__version__ = "0.1.0"

from .clusters import (
    FileEmbedder,
    InconsistentRunError,
    LexicalEmbedder,
    MissingEmbeddingError,
    PairAnalysis,
    SimilarityPair,
    SuspiciousCluster,
    build_cluster_report,
    collect_clusters,
    cosine,
    lexical_vector,
    near_identical_pairs,
    pairwise_similarity,
    rank_clusters,
)
from .detector import (
    AnomalyRecord,
    Detector,
    DetectorConfig,
    MicroclusterEvent,
    TimeRegressionError,
    evaluate_burst,
    run_detector,
)
from .ingest import (
    AppCatalog,
    AppRecord,
    BeforeOriginError,
    LineError,
    ReviewEdge,
    parse_apps,
    parse_reviews,
    to_tick,
)
from .partition import PartitionResult, SubstreamLabel, classify, partition_stream
from .sketch import CountMinSketch, derive_row_seeds
from .stats import (
    DegenerateSamplesError,
    EcdfPoints,
    EmptySampleError,
    SharedReviewerEdge,
    StreamSummary,
    TooSmallError,
    WelchResult,
    ecdf,
    shared_reviewer_graph,
    summarize,
    welch_t,
)
from .synth import (
    Injection,
    SynthResult,
    SynthSpec,
    TruthRecord,
    gen_background,
    gen_stream,
    inject_lockstep,
)

__all__ = [
    "__version__",
    "AnomalyRecord",
    "AppCatalog",
    "AppRecord",
    "BeforeOriginError",
    "CountMinSketch",
    "Detector",
    "DetectorConfig",
    "DegenerateSamplesError",
    "EcdfPoints",
    "EmptySampleError",
    "FileEmbedder",
    "InconsistentRunError",
    "Injection",
    "LexicalEmbedder",
    "LineError",
    "MicroclusterEvent",
    "MissingEmbeddingError",
    "PairAnalysis",
    "PartitionResult",
    "ReviewEdge",
    "SharedReviewerEdge",
    "SimilarityPair",
    "StreamSummary",
    "SubstreamLabel",
    "SuspiciousCluster",
    "SynthResult",
    "SynthSpec",
    "TimeRegressionError",
    "TooSmallError",
    "TruthRecord",
    "WelchResult",
    "build_cluster_report",
    "classify",
    "collect_clusters",
    "cosine",
    "derive_row_seeds",
    "ecdf",
    "evaluate_burst",
    "gen_background",
    "gen_stream",
    "inject_lockstep",
    "lexical_vector",
    "near_identical_pairs",
    "pairwise_similarity",
    "parse_apps",
    "parse_reviews",
    "partition_stream",
    "rank_clusters",
    "run_detector",
    "shared_reviewer_graph",
    "summarize",
    "to_tick",
    "welch_t",
]
