"""Synthetic review streams with controlled lockstep injections.

Background traffic is Poisson per app per tick, with scores split so
that roughly half the edges boost and half sink against a flat catalog
rating. Injections append bursts of same-app, same-tick reviews written
by a small cycling pool of reviewer ids with near-duplicate texts, so
detector recall and pair analysis have exact ground truth.

Ground-truth labels live in a sidecar, never in the review schema
itself. All randomness flows through one numpy PCG64 generator seeded
from SynthSpec.seed, so a fixed seed reproduces byte-identical output
on any platform.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

import numpy as np

from .ingest import AppCatalog, AppRecord, ReviewEdge

RNG_ALGORITHM = "numpy-pcg64"

BOOST_TEXT_TEMPLATES = (
    "good app",
    "very good app",
    "good earning app",
    "best app",
    "nice app",
)
SINK_TEXT_TEMPLATES = (
    "bad",
    "very bad",
    "bad app",
    "not good",
    "worst app",
)

# Background reviews sample a few of these and append the review id, so
# any two background texts stay well below near-duplicate similarity.
_BACKGROUND_WORDS = (
    "quick", "update", "screen", "works", "offers", "points", "payout",
    "daily", "tasks", "redeem", "coins", "survey", "wallet", "install",
    "reward", "bonus", "cash", "level", "timer", "support",
)

SCORE_MODES = ("boost", "sink")


@dataclass(frozen=True)
class Injection:
    app_id: str
    tick: int
    n_edges: int
    n_reviewers_used: int
    score_mode: str  # "boost" or "sink"


@dataclass(frozen=True)
class SynthSpec:
    n_apps: int
    n_reviewers: int
    ticks: int
    background_rate: float  # expected reviews per app per tick
    injections: tuple[Injection, ...] = ()
    seed: int = 0
    origin: int = 0
    period: int = 86_400
    base_rating: float = 3.5

    def validate(self) -> None:
        if self.n_apps < 1 or self.n_reviewers < 1 or self.ticks < 1:
            raise ValueError("n_apps, n_reviewers and ticks must be positive")
        if self.background_rate < 0:
            raise ValueError(f"background_rate must be >= 0, got {self.background_rate}")
        if self.period <= 0:
            raise ValueError(f"period must be positive, got {self.period}")
        apps = set(app_ids(self))
        for inj in self.injections:
            if not 1 <= inj.tick <= self.ticks:
                raise ValueError(f"injection tick {inj.tick} outside 1..{self.ticks}")
            if inj.app_id not in apps:
                raise ValueError(f"injection app {inj.app_id!r} not in the app set")
            if inj.n_edges < 0 or inj.n_reviewers_used < 1:
                raise ValueError("injection needs n_edges >= 0 and n_reviewers_used >= 1")
            if inj.score_mode not in SCORE_MODES:
                raise ValueError(f"score_mode must be one of {SCORE_MODES}")

    def to_dict(self) -> dict:
        return {
            "n_apps": self.n_apps,
            "n_reviewers": self.n_reviewers,
            "ticks": self.ticks,
            "background_rate": self.background_rate,
            "seed": self.seed,
            "origin": self.origin,
            "period": self.period,
            "base_rating": self.base_rating,
            "injections": [
                {
                    "app_id": inj.app_id,
                    "tick": inj.tick,
                    "n_edges": inj.n_edges,
                    "n_reviewers_used": inj.n_reviewers_used,
                    "score_mode": inj.score_mode,
                }
                for inj in self.injections
            ],
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "SynthSpec":
        injections = tuple(
            Injection(
                app_id=i["app_id"],
                tick=i["tick"],
                n_edges=i["n_edges"],
                n_reviewers_used=i["n_reviewers_used"],
                score_mode=i["score_mode"],
            )
            for i in obj.get("injections", ())
        )
        spec = cls(
            n_apps=obj["n_apps"],
            n_reviewers=obj["n_reviewers"],
            ticks=obj["ticks"],
            background_rate=obj["background_rate"],
            injections=injections,
            seed=obj.get("seed", 0),
            origin=obj.get("origin", 0),
            period=obj.get("period", 86_400),
            base_rating=obj.get("base_rating", 3.5),
        )
        spec.validate()
        return spec


@dataclass(frozen=True)
class TruthRecord:
    review_id: str
    injected: bool
    injection_index: int | None


@dataclass
class SynthResult:
    spec: SynthSpec
    edges: list[ReviewEdge]
    truth: list[TruthRecord]
    catalog: AppCatalog
    metadata: dict = field(default_factory=dict)

    def injected_ids(self, injection_index: int | None = None) -> set[str]:
        return {
            t.review_id
            for t in self.truth
            if t.injected and (injection_index is None or t.injection_index == injection_index)
        }


def app_ids(spec: SynthSpec) -> list[str]:
    return [f"a{i:03d}" for i in range(spec.n_apps)]


def catalog_for(spec: SynthSpec) -> AppCatalog:
    """Flat synthetic catalog: every app carries the same rating."""
    return AppCatalog(
        AppRecord(app_id, spec.base_rating) for app_id in app_ids(spec)
    )


def _tick_timestamp(rng: np.random.Generator, tick: int, origin: int, period: int) -> int:
    # tick n covers (origin + (n-1)*period, origin + n*period]
    return origin + (tick - 1) * period + int(rng.integers(1, period + 1))


def gen_background(spec: SynthSpec) -> list[ReviewEdge]:
    """Poisson background traffic, sorted by timestamp.

    Scores land on either side of the flat catalog rating with equal
    probability, so both sub-streams receive traffic.
    """
    spec.validate()
    rng = np.random.default_rng(spec.seed)
    edges = _background_edges(spec, rng)
    edges.sort(key=lambda e: (e.timestamp, e.review_id))
    return edges


def _background_edges(spec: SynthSpec, rng: np.random.Generator) -> list[ReviewEdge]:
    edges: list[ReviewEdge] = []
    counter = 0
    vocab = _BACKGROUND_WORDS
    for app_id in app_ids(spec):
        for tick in range(1, spec.ticks + 1):
            for _ in range(int(rng.poisson(spec.background_rate))):
                review_id = f"b{counter:07d}"
                counter += 1
                reviewer = f"u{int(rng.integers(spec.n_reviewers)):06d}"
                if rng.random() < 0.5:
                    score = int(rng.integers(4, 6))
                else:
                    score = int(rng.integers(1, 4))
                n_words = int(rng.integers(3, 6))
                words = [vocab[int(rng.integers(len(vocab)))] for _ in range(n_words)]
                words.append(review_id)
                edges.append(ReviewEdge(
                    review_id=review_id,
                    reviewer_id=reviewer,
                    app_id=app_id,
                    timestamp=_tick_timestamp(rng, tick, spec.origin, spec.period),
                    score=score,
                    text=" ".join(words),
                ))
    return edges


def make_injection_edges(
    injection: Injection,
    rng: np.random.Generator,
    origin: int = 0,
    period: int = 86_400,
    injection_index: int = 0,
) -> list[ReviewEdge]:
    """The burst edges for one injection, before merging into a stream.

    Reviewer ids cycle over the first ``n_reviewers_used`` entries of a
    shared pool, so several injections with the same pool size reuse the
    same reviewers (coordinated workers hitting multiple apps). Texts
    cycle over a small template set, giving exact duplicates for pair
    analysis ground truth.
    """
    templates = BOOST_TEXT_TEMPLATES if injection.score_mode == "boost" else SINK_TEXT_TEMPLATES
    score = 5 if injection.score_mode == "boost" else 1
    edges = []
    for j in range(injection.n_edges):
        edges.append(ReviewEdge(
            review_id=f"i{injection_index:02d}x{j:05d}",
            reviewer_id=f"f{j % injection.n_reviewers_used:04d}",
            app_id=injection.app_id,
            timestamp=_tick_timestamp(rng, injection.tick, origin, period),
            score=score,
            text=templates[j % len(templates)],
        ))
    return edges


def inject_lockstep(
    edges: Iterable[ReviewEdge],
    injection: Injection,
    rng: np.random.Generator,
    origin: int = 0,
    period: int = 86_400,
    injection_index: int = 0,
) -> list[ReviewEdge]:
    """Append one injection to a stream and re-sort by timestamp.

    Every input edge is preserved; with ``n_edges == 0`` the stream is
    returned unchanged apart from ordering normalization.
    """
    combined = list(edges)
    combined.extend(make_injection_edges(injection, rng, origin, period, injection_index))
    combined.sort(key=lambda e: (e.timestamp, e.review_id))
    return combined


def gen_stream(spec: SynthSpec) -> SynthResult:
    """Background plus all of the spec's injections, with truth sidecar."""
    spec.validate()
    rng = np.random.default_rng(spec.seed)
    edges = _background_edges(spec, rng)
    truth = [TruthRecord(e.review_id, False, None) for e in edges]
    for index, injection in enumerate(spec.injections):
        burst = make_injection_edges(injection, rng, spec.origin, spec.period, index)
        edges.extend(burst)
        truth.extend(TruthRecord(e.review_id, True, index) for e in burst)
    edges.sort(key=lambda e: (e.timestamp, e.review_id))
    truth.sort(key=lambda t: t.review_id)
    return SynthResult(
        spec=spec,
        edges=edges,
        truth=truth,
        catalog=catalog_for(spec),
        metadata={"rng": RNG_ALGORITHM, "seed": spec.seed},
    )


def write_truth_jsonl(truth: Iterable[TruthRecord], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for record in truth:
            fh.write(json.dumps({
                "review_id": record.review_id,
                "injected": record.injected,
                "injection_index": record.injection_index,
            }, sort_keys=True))
            fh.write("\n")


def read_truth_jsonl(path: str | Path) -> list[TruthRecord]:
    truth: list[TruthRecord] = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            obj = json.loads(line)
            truth.append(TruthRecord(
                review_id=obj["review_id"],
                injected=obj["injected"],
                injection_index=obj["injection_index"],
            ))
    return truth
