"""Command-line entry point wiring the stages into a reproducible pipeline.

Subcommands: ingest, score, clusters, pairs, stats (ttest/cdf/network),
synth, and pipeline. Every stage reads and writes plain files so stages
can be rerun independently; `pipeline` chains them and records a run
manifest with input digests and the full effective configuration.

Exit codes: 0 success; 2 data failure (parse error rate above the
threshold, or inconsistent stage inputs); 3 configuration failure
(bad flags or config file, missing input files, invalid parameters).
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import logging
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Sequence

from . import __version__
from .clusters import (
    FileEmbedder,
    InconsistentRunError,
    LexicalEmbedder,
    MissingEmbeddingError,
    build_cluster_report,
    collect_clusters,
    pairwise_similarity,
    rank_clusters,
)
from .detector import (
    AnomalyRecord,
    DetectorConfig,
    read_events_jsonl,
    read_scores_csv,
    run_detector,
    write_events_jsonl,
    write_scores_csv,
)
from .ingest import (
    BeforeOriginError,
    LineError,
    parse_apps,
    parse_reviews,
    write_app_catalog_csv,
    write_line_errors,
    write_reviews_jsonl,
)
from .partition import SubstreamLabel, partition_stream
from .stats import (
    DegenerateSamplesError,
    TooSmallError,
    ecdf,
    shared_reviewer_graph,
    summarize,
    welch_t,
)
from .synth import RNG_ALGORITHM, SynthSpec, gen_stream, write_truth_jsonl

logger = logging.getLogger("reviewstream")

EXIT_OK = 0
EXIT_DATA = 2
EXIT_CONFIG = 3


class ConfigFailure(Exception):
    """Maps to exit code 3."""


class DataFailure(Exception):
    """Maps to exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: A003 - argparse API
        raise ConfigFailure(message)


def _require_file(path: str, what: str) -> Path:
    p = Path(path)
    if not p.is_file():
        raise ConfigFailure(f"{what} file not found: {path}")
    return p


def _sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _check_error_rate(
    n_valid: int, errors: Sequence[LineError], threshold: float, what: str
) -> None:
    total = n_valid + len(errors)
    if total == 0:
        return
    rate = len(errors) / total
    if rate > threshold:
        raise DataFailure(
            f"{what}: {len(errors)} of {total} records rejected "
            f"({rate:.2%} > {threshold:.2%})"
        )


def _load_reviews(path: Path, fmt: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_reviews(fh, format=fmt)


def _load_catalog(path: Path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_apps(fh)


def _print_json(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


# ---------------------------------------------------------------------------
# Configuration merging: defaults < JSON config file < explicit flags.

_CONFIG_KEYS = (
    "origin", "period", "burst_factor", "decay", "filter_threshold",
    "min_prior", "rows", "cols", "sketch_seed",
    "provider", "tau", "top", "embeddings", "max_error_rate", "format",
)

_CONFIG_DEFAULTS = {
    "origin": None,
    "period": 86_400,
    "burst_factor": 2.0,
    "decay": 0.6,
    "filter_threshold": 1000.0,
    "min_prior": 1.0,
    "rows": 2,
    "cols": 1024,
    "sketch_seed": 7,
    "provider": "lexical",
    "tau": None,
    "top": 50,
    "embeddings": None,
    "max_error_rate": 0.01,
    "format": "jsonl",
}


def _effective_config(args: argparse.Namespace) -> dict:
    effective = dict(_CONFIG_DEFAULTS)
    config_path = getattr(args, "config", None)
    if config_path:
        path = _require_file(config_path, "config")
        try:
            loaded = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ConfigFailure(f"config file {path} is not valid JSON: {exc}")
        if not isinstance(loaded, dict):
            raise ConfigFailure(f"config file {path} must hold a JSON object")
        unknown = set(loaded) - set(_CONFIG_KEYS)
        if unknown:
            raise ConfigFailure(f"unknown config keys: {sorted(unknown)}")
        effective.update(loaded)
    for key in _CONFIG_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            effective[key] = value
    return effective


def _detector_config(effective: dict) -> DetectorConfig:
    if effective["origin"] is None:
        raise ConfigFailure(
            "origin is required (tick 1 anchor, seconds); pass --origin or "
            "set it in the config file"
        )
    config = DetectorConfig(
        origin=int(effective["origin"]),
        period=int(effective["period"]),
        burst_factor=float(effective["burst_factor"]),
        decay=float(effective["decay"]),
        filter_threshold=float(effective["filter_threshold"]),
        min_prior=float(effective["min_prior"]),
        rows=int(effective["rows"]),
        cols=int(effective["cols"]),
        sketch_seed=int(effective["sketch_seed"]),
    )
    try:
        config.validate()
    except ValueError as exc:
        raise ConfigFailure(str(exc))
    return config


def _provider(effective: dict):
    name = effective["provider"]
    if name == "lexical":
        provider = LexicalEmbedder()
    elif name == "file":
        if not effective["embeddings"]:
            raise ConfigFailure("provider 'file' requires --embeddings <path>")
        provider = FileEmbedder.load(_require_file(effective["embeddings"], "embeddings"))
    else:
        raise ConfigFailure(f"unknown provider {name!r}")
    tau = effective["tau"]
    tau = provider.default_tau if tau is None else float(tau)
    if not 0.0 < tau <= 1.0:
        raise ConfigFailure(f"tau must be in (0, 1], got {tau}")
    return provider, tau


def _parse_column_ref(ref: str, default_column: str = "score") -> tuple[Path, str]:
    path_part, sep, column = ref.rpartition(":")
    if sep and column and "/" not in column and "\\" not in column:
        return _require_file(path_part, "csv"), column
    return _require_file(ref, "csv"), default_column


def _read_csv_column(path: Path, column: str) -> list[float]:
    with open(path, "r", encoding="utf-8") as fh:
        rows = [line for line in fh if not line.startswith("#")]
    reader = csv.reader(rows)
    header = next(reader, None)
    if header is None or column not in header:
        raise DataFailure(f"{path}: no column {column!r}")
    idx = header.index(column)
    values = []
    for row in reader:
        if not row:
            continue
        try:
            values.append(float(row[idx]))
        except (IndexError, ValueError):
            raise DataFailure(f"{path}: bad value in column {column!r}: {row}")
    return values


# ---------------------------------------------------------------------------
# Subcommands.

def cmd_ingest(args: argparse.Namespace) -> int:
    reviews_path = _require_file(args.reviews, "reviews")
    edges, errors = _load_reviews(reviews_path, args.format)
    if args.errors:
        Path(args.errors).unlink(missing_ok=True)
        write_line_errors(errors, args.errors, source=str(reviews_path))
    _check_error_rate(len(edges), errors, args.max_error_rate, "reviews")
    write_reviews_jsonl(edges, args.out)
    _print_json({"reviews": len(edges), "errors": len(errors)})
    return EXIT_OK


def _run_substreams(partitioned, config: DetectorConfig):
    """Run the boost and sink detectors concurrently."""
    with ThreadPoolExecutor(max_workers=2) as pool:
        boost_future = pool.submit(
            run_detector, partitioned.boost, config, SubstreamLabel.BOOST
        )
        sink_future = pool.submit(
            run_detector, partitioned.sink, config, SubstreamLabel.SINK
        )
        boost_records, boost_events = boost_future.result()
        sink_records, sink_events = sink_future.result()
    return boost_records + sink_records, boost_events + sink_events


def _score_stream(edges, catalog, config: DetectorConfig):
    ordered = sorted(edges, key=lambda e: e.timestamp)  # stable: ties keep input order
    partitioned = partition_stream(ordered, catalog)
    try:
        records, events = _run_substreams(partitioned, config)
    except BeforeOriginError as exc:
        raise ConfigFailure(f"{exc}; lower --origin to at or before the first timestamp")
    return partitioned, records, events


def cmd_score(args: argparse.Namespace) -> int:
    effective = _effective_config(args)
    config = _detector_config(effective)
    reviews_path = _require_file(args.reviews, "reviews")
    catalog_path = _require_file(args.catalog, "catalog")
    logger.info("effective config: %s", json.dumps(config.to_dict(), sort_keys=True))
    edges, review_errors = _load_reviews(reviews_path, effective["format"])
    catalog, catalog_errors = _load_catalog(catalog_path)
    _check_error_rate(len(edges), review_errors, effective["max_error_rate"], "reviews")
    _check_error_rate(len(catalog), catalog_errors, effective["max_error_rate"], "catalog")
    partitioned, records, events = _score_stream(edges, catalog, config)
    write_scores_csv(records, config, args.out_scores)
    write_events_jsonl(events, args.out_events)
    _print_json(partitioned.counts())
    return EXIT_OK


def _records_from_files(reviews_path: Path, scores_path: Path):
    edges, _ = _load_reviews(reviews_path, "jsonl")
    by_id = {e.review_id: e for e in edges}
    rows, config = read_scores_csv(scores_path)
    records = []
    for row in rows:
        edge = by_id.get(row.review_id)
        if edge is None:
            raise DataFailure(
                f"score row {row.review_id!r} has no matching review; "
                "scores and reviews files do not belong together"
            )
        records.append(AnomalyRecord(edge, row.substream, row.tick, row.score))
    return records, config


def cmd_clusters(args: argparse.Namespace) -> int:
    effective = _effective_config(args)
    provider, tau = _provider(effective)
    reviews_path = _require_file(args.reviews, "reviews")
    scores_path = _require_file(args.scores, "scores")
    events_path = _require_file(args.events, "events")
    records, _ = _records_from_files(reviews_path, scores_path)
    events = read_events_jsonl(events_path)
    try:
        clusters = collect_clusters(events, records)
    except InconsistentRunError as exc:
        raise DataFailure(str(exc))
    ranked = rank_clusters(clusters, effective["top"]) if clusters else []
    try:
        report = build_cluster_report(ranked, provider, tau)
    except MissingEmbeddingError as exc:
        raise DataFailure(str(exc))
    Path(args.out).write_text(
        json.dumps(report, sort_keys=True, indent=1) + "\n", encoding="utf-8"
    )
    _print_json({"clusters": len(clusters), "reported": len(report), "tau": tau})
    return EXIT_OK


def cmd_pairs(args: argparse.Namespace) -> int:
    effective = _effective_config(args)
    provider, tau = _provider(effective)
    reviews_path = _require_file(args.reviews, "reviews")
    edges, _ = _load_reviews(reviews_path, "jsonl")
    try:
        analysis = pairwise_similarity(edges, provider, tau)
    except MissingEmbeddingError as exc:
        raise DataFailure(str(exc))
    result = {
        "provider": provider.name,
        "tau": tau,
        "evaluated": analysis.evaluated_count,
        "textless": analysis.textless_count,
        "flagged": sorted(analysis.flagged_review_ids),
        "pairs": [
            {"a": p.review_id_a, "b": p.review_id_b, "similarity": p.similarity}
            for p in analysis.pairs
        ],
    }
    out = json.dumps(result, sort_keys=True, indent=1) + "\n"
    if args.out:
        Path(args.out).write_text(out, encoding="utf-8")
        _print_json({"pairs": len(analysis.pairs), "flagged": len(analysis.flagged_review_ids)})
    else:
        sys.stdout.write(out)
    return EXIT_OK


def cmd_stats_ttest(args: argparse.Namespace) -> int:
    path_a, col_a = _parse_column_ref(args.a)
    path_b, col_b = _parse_column_ref(args.b)
    sample_a = _read_csv_column(path_a, col_a)
    sample_b = _read_csv_column(path_b, col_b)
    try:
        result = welch_t(sample_a, sample_b)
    except (TooSmallError, DegenerateSamplesError) as exc:
        raise DataFailure(str(exc))
    out = result.to_dict()
    out["p"] = result.p_two_sided if args.two_sided else result.p_one_sided
    _print_json(out)
    return EXIT_OK


def cmd_stats_cdf(args: argparse.Namespace) -> int:
    path, column = _parse_column_ref(args.scores, default_column=args.column)
    values = _read_csv_column(path, column)
    if not values:
        raise DataFailure(f"{path}: no values in column {column!r}")
    points = ecdf(values)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["value", "fraction"])
    for value, fraction in points.rows():
        writer.writerow([repr(value), repr(fraction)])
    if args.out:
        Path(args.out).write_text(buf.getvalue(), encoding="utf-8")
    else:
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def cmd_stats_network(args: argparse.Namespace) -> int:
    reviews_path = _require_file(args.reviews, "reviews")
    edges, _ = _load_reviews(reviews_path, "jsonl")
    graph = shared_reviewer_graph(edges)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["app_a", "app_b", "weight"])
    for item in graph:
        writer.writerow([item.app_a, item.app_b, item.weight])
    if args.out:
        Path(args.out).write_text(buf.getvalue(), encoding="utf-8")
    else:
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def cmd_synth(args: argparse.Namespace) -> int:
    spec_path = _require_file(args.spec, "spec")
    try:
        spec = SynthSpec.from_dict(json.loads(spec_path.read_text(encoding="utf-8")))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ConfigFailure(f"bad synth spec {spec_path}: {exc}")
    logger.info("synth rng=%s seed=%d", RNG_ALGORITHM, spec.seed)
    result = gen_stream(spec)
    write_reviews_jsonl(result.edges, args.out)
    write_truth_jsonl(result.truth, args.truth)
    if args.catalog:
        write_app_catalog_csv(result.catalog, args.catalog)
    _print_json({
        **result.metadata,
        "edges": len(result.edges),
        "injected": sum(1 for t in result.truth if t.injected),
    })
    return EXIT_OK


def cmd_pipeline(args: argparse.Namespace) -> int:
    started = time.monotonic()
    effective = _effective_config(args)
    config = _detector_config(effective)
    provider, tau = _provider(effective)
    top = int(effective["top"])
    reviews_path = _require_file(args.reviews, "reviews")
    catalog_path = _require_file(args.catalog, "catalog")
    logger.info(
        "effective config: %s",
        json.dumps({**config.to_dict(), "provider": provider.name, "tau": tau,
                    "top": top}, sort_keys=True),
    )

    edges, review_errors = _load_reviews(reviews_path, effective["format"])
    catalog, catalog_errors = _load_catalog(catalog_path)
    _check_error_rate(len(edges), review_errors, effective["max_error_rate"], "reviews")
    _check_error_rate(len(catalog), catalog_errors, effective["max_error_rate"], "catalog")

    summary_counts = summarize(edges, catalog)
    partitioned, records, events = _score_stream(edges, catalog, config)

    clusters = collect_clusters(events, records)
    ranked = rank_clusters(clusters, top) if clusters else []
    try:
        report = build_cluster_report(ranked, provider, tau)
    except MissingEmbeddingError as exc:
        raise DataFailure(str(exc))

    boost_scores = [r.score for r in records if r.substream is SubstreamLabel.BOOST]
    sink_scores = [r.score for r in records if r.substream is SubstreamLabel.SINK]
    welch: dict | None = None
    try:
        welch = welch_t(boost_scores, sink_scores).to_dict()
    except (TooSmallError, DegenerateSamplesError):
        welch = None

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    def target(name: str) -> Path:
        path = out_dir / name
        written.append(path)
        return path

    try:
        errors_path = target("parse_errors.jsonl")
        errors_path.unlink(missing_ok=True)
        errors_path.touch()
        write_line_errors(review_errors, errors_path, source=str(reviews_path))
        write_line_errors(catalog_errors, errors_path, source=str(catalog_path))
        write_scores_csv(records, config, target("scores.csv"))
        write_events_jsonl(events, target("events.jsonl"))
        target("clusters.json").write_text(
            json.dumps(report, sort_keys=True, indent=1) + "\n", encoding="utf-8"
        )
        for name, scores in (("cdf_boost.csv", boost_scores), ("cdf_sink.csv", sink_scores)):
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["value", "fraction"])
            if scores:
                for value, fraction in ecdf(scores).rows():
                    writer.writerow([repr(value), repr(fraction)])
            target(name).write_text(buf.getvalue(), encoding="utf-8")
        summary = {
            "counts": summary_counts.to_dict(),
            "partition": partitioned.counts(),
            "events": len(events),
            "clusters_reported": len(report),
            "welch_boost_vs_sink": welch,
        }
        target("summary.json").write_text(
            json.dumps(summary, sort_keys=True, indent=1) + "\n", encoding="utf-8"
        )
        manifest = {
            "tool": "reviewstream",
            "version": __version__,
            "inputs": {
                "reviews": {"path": str(reviews_path), "sha256": _sha256(reviews_path)},
                "catalog": {"path": str(catalog_path), "sha256": _sha256(catalog_path)},
            },
            "config": {
                **config.to_dict(),
                "provider": provider.name,
                "tau": tau,
                "top": top,
                "max_error_rate": effective["max_error_rate"],
                "format": effective["format"],
            },
            "runtime_seconds": round(time.monotonic() - started, 3),
        }
        target("manifest.json").write_text(
            json.dumps(manifest, sort_keys=True, indent=1) + "\n", encoding="utf-8"
        )
    except Exception:
        for path in written:
            path.unlink(missing_ok=True)
        raise
    _print_json(summary)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser.

def _add_config_flags(parser: argparse.ArgumentParser, with_clusters: bool) -> None:
    group = parser.add_argument_group("detector configuration")
    group.add_argument("--config", help="JSON file mirroring these flags; flags override it")
    group.add_argument("--origin", type=int, help="tick 1 anchor, seconds (required)")
    group.add_argument("--period", type=int, help="tick width in seconds (default 86400)")
    group.add_argument("--burst-factor", dest="burst_factor", type=float,
                       help="burst ratio threshold, > 1 (default 2.0)")
    group.add_argument("--decay", type=float, help="per-tick history decay in [0,1] (default 0.6)")
    group.add_argument("--filter-threshold", dest="filter_threshold", type=float,
                       help="score above which a tick is excluded from history (default 1000)")
    group.add_argument("--min-prior", dest="min_prior", type=float,
                       help="denominator guard for the burst ratio (default 1.0)")
    group.add_argument("--rows", type=int, help="sketch hash rows (default 2)")
    group.add_argument("--cols", type=int, help="sketch counters per row (default 1024)")
    group.add_argument("--sketch-seed", dest="sketch_seed", type=int,
                       help="master seed for the per-row hash seeds (default 7)")
    group.add_argument("--max-error-rate", dest="max_error_rate", type=float,
                       help="tolerated parse error fraction before aborting (default 0.01)")
    if with_clusters:
        group.add_argument("--top", type=int, help="clusters to report (default 50)")
        group.add_argument("--tau", type=float,
                           help="near-identical similarity threshold (default per provider)")
        group.add_argument("--provider", choices=["lexical", "file"],
                           help="embedding provider (default lexical)")
        group.add_argument("--embeddings", help="JSONL sidecar of {review_id, vector}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="reviewstream", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"reviewstream {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ingest", help="validate raw reviews into canonical JSONL")
    p.add_argument("--reviews", required=True)
    p.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    p.add_argument("--out", required=True, help="canonical reviews JSONL")
    p.add_argument("--errors", help="sidecar JSONL for rejected lines")
    p.add_argument("--max-error-rate", dest="max_error_rate", type=float, default=0.01)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("score", help="partition a stream and score both sub-streams")
    p.add_argument("--reviews", required=True)
    p.add_argument("--format", choices=["jsonl", "csv"])
    p.add_argument("--catalog", required=True)
    p.add_argument("--out-scores", dest="out_scores", required=True)
    p.add_argument("--out-events", dest="out_events", required=True)
    _add_config_flags(p, with_clusters=False)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("clusters", help="rank suspicious clusters and analyze pairs")
    p.add_argument("--reviews", required=True, help="canonical reviews JSONL (for texts)")
    p.add_argument("--scores", required=True, help="scores CSV from `score`")
    p.add_argument("--events", required=True, help="events JSONL from `score`")
    p.add_argument("--out", required=True, help="cluster report JSON")
    p.add_argument("--top", type=int)
    p.add_argument("--tau", type=float)
    p.add_argument("--provider", choices=["lexical", "file"])
    p.add_argument("--embeddings")
    p.set_defaults(func=cmd_clusters)

    p = sub.add_parser("pairs", help="pairwise near-duplicate analysis of a review file")
    p.add_argument("--reviews", required=True)
    p.add_argument("--tau", type=float)
    p.add_argument("--provider", choices=["lexical", "file"])
    p.add_argument("--embeddings")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("stats", help="statistical comparisons")
    stats_sub = p.add_subparsers(dest="stats_command", required=True, parser_class=_Parser)
    q = stats_sub.add_parser("ttest", help="Welch's t-test over two CSV columns")
    q.add_argument("--a", required=True, help="PATH[:COLUMN], column defaults to 'score'")
    q.add_argument("--b", required=True, help="PATH[:COLUMN]")
    q.add_argument("--two-sided", dest="two_sided", action="store_true")
    q.set_defaults(func=cmd_stats_ttest)
    q = stats_sub.add_parser("cdf", help="empirical CDF of a CSV column")
    q.add_argument("--scores", required=True, help="PATH[:COLUMN]")
    q.add_argument("--column", default="score")
    q.add_argument("--out")
    q.set_defaults(func=cmd_stats_cdf)
    q = stats_sub.add_parser("network", help="shared-reviewer app network")
    q.add_argument("--reviews", required=True)
    q.add_argument("--out")
    q.set_defaults(func=cmd_stats_network)

    p = sub.add_parser("synth", help="generate a synthetic stream with ground truth")
    p.add_argument("--spec", required=True, help="SynthSpec JSON")
    p.add_argument("--out", required=True, help="reviews JSONL")
    p.add_argument("--truth", required=True, help="ground-truth JSONL")
    p.add_argument("--catalog", help="also write the synthetic app catalog CSV")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("pipeline", help="ingest, partition, score, cluster, summarize")
    p.add_argument("--reviews", required=True)
    p.add_argument("--format", choices=["jsonl", "csv"])
    p.add_argument("--catalog", required=True)
    p.add_argument("--out-dir", dest="out_dir", required=True)
    _add_config_flags(p, with_clusters=True)
    p.set_defaults(func=cmd_pipeline)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, stream=sys.stderr,
                        format="%(levelname)s %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except ConfigFailure as exc:
        logger.error("%s", exc)
        return EXIT_CONFIG
    except DataFailure as exc:
        logger.error("%s", exc)
        return EXIT_DATA
    except OSError as exc:
        logger.error("%s", exc)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
