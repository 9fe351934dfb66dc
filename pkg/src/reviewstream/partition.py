"""Split a review edge stream into boosting and sinking sub-streams.

An edge boosts an app when its star score is at or above the app's
overall catalog rating, and sinks it when below. Edges on apps missing
from the catalog are labelled unpartitioned rather than dropped, so the
three outputs always add back up to the input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .ingest import AppCatalog, ReviewEdge


class SubstreamLabel(str, Enum):
    BOOST = "boost"
    SINK = "sink"
    UNPARTITIONED = "unpartitioned"


def classify(edge: ReviewEdge, catalog: AppCatalog) -> SubstreamLabel:
    """Label one edge; ties (score equal to the rating) go to BOOST."""
    record = catalog.get(edge.app_id)
    if record is None:
        return SubstreamLabel.UNPARTITIONED
    if edge.score >= record.overall_rating:
        return SubstreamLabel.BOOST
    return SubstreamLabel.SINK


@dataclass
class PartitionResult:
    boost: list[ReviewEdge] = field(default_factory=list)
    sink: list[ReviewEdge] = field(default_factory=list)
    unpartitioned: list[ReviewEdge] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        return {
            "boost": len(self.boost),
            "sink": len(self.sink),
            "unpartitioned": len(self.unpartitioned),
        }


def partition_stream(
    edges: Iterable[ReviewEdge], catalog: AppCatalog
) -> PartitionResult:
    """Partition an ordered edge stream into disjoint, order-preserving
    boost/sink/unpartitioned sequences whose union is the input."""
    result = PartitionResult()
    buckets = {
        SubstreamLabel.BOOST: result.boost,
        SubstreamLabel.SINK: result.sink,
        SubstreamLabel.UNPARTITIONED: result.unpartitioned,
    }
    for edge in edges:
        buckets[classify(edge, catalog)].append(edge)
    return result
