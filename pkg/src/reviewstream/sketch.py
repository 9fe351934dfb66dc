"""Decaying count-min sketch.

A fixed grid of ``rows x cols`` float counters. Inserting a key adds its
weight to one counter per row (chosen by a per-row seeded hash); querying
returns the minimum of those counters. With no decay applied the estimate
never underestimates the true count, because every counter a key touches
receives at least that key's full weight.

Counters are floats, not ints: temporal decay multiplies the whole grid
by a factor in [0, 1], which scales counts fractionally. Memory is
exactly ``rows * cols`` counters regardless of how many keys or inserts
pass through.

Hashing is BLAKE2b keyed with an 8-byte per-row seed, so layouts are
deterministic for fixed seeds on every platform. Callers that keep two
sketches with identical geometry and seeds (as the detector does) can
hash once via :meth:`locate` and reuse the slot indices on both.
"""

from __future__ import annotations

from hashlib import blake2b

import numpy as np

_MASK64 = (1 << 64) - 1


def derive_row_seeds(master_seed: int, rows: int) -> tuple[int, ...]:
    """Expand one master seed into per-row hash seeds."""
    return tuple((master_seed + i) & _MASK64 for i in range(rows))


class CountMinSketch:
    __slots__ = ("rows", "cols", "seeds", "counters", "_seed_keys")

    def __init__(self, rows: int = 2, cols: int = 1024, seeds: tuple[int, ...] | None = None):
        if rows < 1 or cols < 1:
            raise ValueError(f"rows and cols must be positive, got {rows}x{cols}")
        if seeds is None:
            seeds = derive_row_seeds(7, rows)
        seeds = tuple(int(s) & _MASK64 for s in seeds)
        if len(seeds) != rows:
            raise ValueError(f"need {rows} seeds, got {len(seeds)}")
        self.rows = rows
        self.cols = cols
        self.seeds = seeds
        self._seed_keys = [s.to_bytes(8, "little") for s in seeds]
        self.counters = np.zeros((rows, cols), dtype=np.float64)

    def locate(self, key: str | bytes) -> tuple[int, ...]:
        """Column index of ``key`` in each row."""
        data = key.encode("utf-8") if isinstance(key, str) else key
        return tuple(
            int.from_bytes(blake2b(data, digest_size=8, key=sk).digest(), "big") % self.cols
            for sk in self._seed_keys
        )

    def insert_at(self, slots: tuple[int, ...], weight: float) -> None:
        if weight < 0:
            raise ValueError(f"weight must be non-negative, got {weight}")
        counters = self.counters
        for row, col in enumerate(slots):
            counters[row, col] += weight

    def estimate_at(self, slots: tuple[int, ...]) -> float:
        counters = self.counters
        return float(min(counters[row, col] for row, col in enumerate(slots)))

    def insert(self, key: str | bytes, weight: float = 1.0) -> None:
        self.insert_at(self.locate(key), weight)

    def estimate(self, key: str | bytes) -> float:
        return self.estimate_at(self.locate(key))

    def decay(self, alpha: float) -> None:
        """Multiply every counter by ``alpha`` in [0, 1]."""
        if not 0.0 <= alpha <= 1.0:
            raise ValueError(f"alpha must be in [0, 1], got {alpha}")
        if alpha != 1.0:
            self.counters *= alpha

    def clear(self) -> None:
        self.counters[:] = 0.0

    @property
    def memory_bytes(self) -> int:
        return self.counters.nbytes
