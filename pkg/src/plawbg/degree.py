"""Degree vectors and exact-binned degree distributions."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, NamedTuple

import numpy as np

from plawbg.errors import EmptyDistributionError
from plawbg.matrix_core import AdjacencyMatrix

DIRECTIONS = ("in", "out")


def _check_direction(direction: str) -> None:
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be 'in' or 'out', got {direction!r}")


class Summary(NamedTuple):
    N: int
    M: int
    d_max: int
    n_d1: int
    N_d: int


@dataclass(frozen=True)
class DegreeDistribution:
    """Ascending degree bins with the number of vertices at each degree.

    Empty bins are never stored, so every count is at least one.
    """

    bins: tuple[int, ...]
    counts: tuple[int, ...]
    direction: str = "out"

    def __post_init__(self):
        bins = tuple(int(b) for b in self.bins)
        counts = tuple(int(c) for c in self.counts)
        if len(bins) != len(counts):
            raise ValueError("bins and counts differ in length")
        if not bins:
            raise EmptyDistributionError("a degree distribution needs at least one bin")
        if bins[0] < 1 or any(b <= a for a, b in zip(bins, bins[1:])):
            raise ValueError("bins must be strictly ascending positive degrees")
        if min(counts) < 1:
            raise ValueError("counts must be positive; empty bins are not stored")
        _check_direction(self.direction)
        object.__setattr__(self, "bins", bins)
        object.__setattr__(self, "counts", counts)

    @property
    def N(self) -> int:
        return sum(self.counts)

    @property
    def M(self) -> int:
        return sum(c * d for d, c in zip(self.bins, self.counts))

    @property
    def d_max(self) -> int:
        return self.bins[-1]

    @property
    def n_d1(self) -> int:
        return self.counts[0] if self.bins[0] == 1 else 0

    @property
    def N_d(self) -> int:
        return len(self.bins)

    def expand(self) -> list[int]:
        """The multiset of degrees, one entry per vertex, ascending."""
        out: list[int] = []
        for d, c in zip(self.bins, self.counts):
            out.extend([d] * c)
        return out


def degree_array(a: AdjacencyMatrix, direction: str) -> np.ndarray:
    """Per-vertex degrees as an int64 array indexed by vertex position."""
    _check_direction(direction)
    axis = 1 if direction == "out" else 0
    return np.asarray(a.matrix.sum(axis=axis), dtype=np.int64).reshape(-1)


def degree_vector(a: AdjacencyMatrix, direction: str) -> dict[Hashable, int]:
    """Map each vertex (by label when available) to its in- or out-degree.

    Out-degree is the row sum of ``A``, in-degree the column sum.
    """
    deg = degree_array(a, direction)
    return {a.label(i): int(d) for i, d in enumerate(deg)}


def degree_distribution(
    degrees: Mapping[Hashable, int] | Iterable[int], direction: str = "out"
) -> DegreeDistribution:
    """Count how many vertices have each distinct nonzero degree."""
    values = degrees.values() if isinstance(degrees, Mapping) else degrees
    arr = np.fromiter((int(d) for d in values), dtype=np.int64)
    if (arr < 0).any():
        raise ValueError("degrees must be non-negative")
    arr = arr[arr > 0]
    if arr.size == 0:
        raise EmptyDistributionError(
            "no vertex has nonzero degree; power-law analysis is impossible"
        )
    bins, counts = np.unique(arr, return_counts=True)
    return DegreeDistribution(tuple(bins.tolist()), tuple(counts.tolist()), direction)


def summary(dist: DegreeDistribution) -> Summary:
    return Summary(dist.N, dist.M, dist.d_max, dist.n_d1, dist.N_d)
