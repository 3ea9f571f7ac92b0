"""Sparse incidence and adjacency matrices.

An incidence matrix ``E`` has one row per edge and one column per vertex;
``-1`` marks the vertex an edge leaves and ``+1`` the vertex it enters.
The adjacency matrix is recovered as ``A = |E < 0|^T @ |E > 0|``, so
``A[u, v]`` counts the directed edges ``u -> v``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Sequence

import numpy as np
import scipy.sparse as sp

from plawbg.errors import StructuralInputError


def _first(mask: np.ndarray) -> int:
    return int(np.flatnonzero(mask)[0])


@dataclass(frozen=True, eq=False)
class IncidenceMatrix:
    """Signed edge x vertex matrix stored as parallel coordinate arrays.

    ``edge[k], vertex[k], sign[k]`` is the k-th stored triple. Construction
    validates the structural invariants and raises
    :class:`StructuralInputError` naming the first offending triple.
    """

    n_edges: int
    n_vertices: int
    edge: np.ndarray = field(repr=False)
    vertex: np.ndarray = field(repr=False)
    sign: np.ndarray = field(repr=False)

    def __post_init__(self):
        edge = np.asarray(self.edge, dtype=np.int64).reshape(-1)
        vertex = np.asarray(self.vertex, dtype=np.int64).reshape(-1)
        sign = np.asarray(self.sign, dtype=np.int64).reshape(-1)
        if not (len(edge) == len(vertex) == len(sign)):
            raise StructuralInputError("edge, vertex and sign arrays differ in length")
        if self.n_edges < 0 or self.n_vertices < 0:
            raise StructuralInputError("matrix dimensions must be non-negative")
        for arr in (edge, vertex, sign):
            arr.setflags(write=False)
        object.__setattr__(self, "edge", edge)
        object.__setattr__(self, "vertex", vertex)
        object.__setattr__(self, "sign", sign)
        self._validate()

    @classmethod
    def from_triples(
        cls, n_edges: int, n_vertices: int, triples: Iterable[tuple[int, int, int]]
    ) -> "IncidenceMatrix":
        rows = list(triples)
        if not rows:
            empty = np.zeros(0, dtype=np.int64)
            return cls(n_edges, n_vertices, empty, empty, empty)
        e, v, s = (np.array(col, dtype=np.int64) for col in zip(*rows))
        return cls(n_edges, n_vertices, e, v, s)

    def _triple(self, k: int) -> tuple[int, int, int]:
        return int(self.edge[k]), int(self.vertex[k]), int(self.sign[k])

    def _fail(self, k: int, why: str):
        raise StructuralInputError(f"invalid incidence entry {self._triple(k)}: {why}")

    def _validate(self):
        e, v, s = self.edge, self.vertex, self.sign
        if len(e) == 0:
            return
        bad = (e < 0) | (e >= self.n_edges)
        if bad.any():
            self._fail(_first(bad), f"edge index outside [0, {self.n_edges})")
        bad = (v < 0) | (v >= self.n_vertices)
        if bad.any():
            self._fail(_first(bad), f"vertex index outside [0, {self.n_vertices})")
        bad = (s != -1) & (s != 1)
        if bad.any():
            self._fail(_first(bad), "sign must be -1 or +1")

        # one -1 and one +1 per edge at most; a self-loop holds both on one vertex
        order = np.lexsort((np.arange(len(e)), s, e))
        es, ss = e[order], s[order]
        repeat = (es[1:] == es[:-1]) & (ss[1:] == ss[:-1])
        if repeat.any():
            k = int(order[_first(repeat) + 1])
            which = "leaving" if s[k] < 0 else "entering"
            self._fail(k, f"edge has more than one {which} entry")

    def __len__(self) -> int:
        return len(self.edge)

    def triples(self) -> Iterator[tuple[int, int, int]]:
        for k in range(len(self.edge)):
            yield self._triple(k)

    def signed_part(self, sign: int) -> sp.csr_array:
        """``|E < 0|`` for ``sign=-1`` or ``|E > 0|`` for ``sign=+1`` as a 0/1 matrix."""
        mask = self.sign == sign
        n = int(mask.sum())
        return sp.csr_array(
            (np.ones(n, dtype=np.int64), (self.edge[mask], self.vertex[mask])),
            shape=(self.n_edges, self.n_vertices),
        )

    def complete_edges(self) -> int:
        """Number of edge rows holding both a leaving and an entering entry."""
        out = np.zeros(self.n_edges, dtype=bool)
        inn = np.zeros(self.n_edges, dtype=bool)
        out[self.edge[self.sign < 0]] = True
        inn[self.edge[self.sign > 0]] = True
        return int((out & inn).sum())


@dataclass(frozen=True, eq=False)
class AdjacencyMatrix:
    """Square non-negative integer matrix of directed edge multiplicities.

    ``labels`` optionally maps row/column positions back to the original
    vertex identifiers.
    """

    n_vertices: int
    matrix: sp.csr_array = field(repr=False)
    labels: tuple | None = field(default=None, repr=False)

    def __post_init__(self):
        m = sp.csr_array(self.matrix, dtype=np.int64)
        m.sum_duplicates()
        m.eliminate_zeros()
        if m.shape != (self.n_vertices, self.n_vertices):
            raise StructuralInputError(
                f"adjacency shape {m.shape} does not match n_vertices={self.n_vertices}"
            )
        if m.nnz and m.data.min() < 1:
            raise StructuralInputError("adjacency multiplicities must be positive")
        if self.labels is not None and len(self.labels) != self.n_vertices:
            raise StructuralInputError("one label per vertex is required")
        object.__setattr__(self, "matrix", m)

    @property
    def nnz(self) -> int:
        return self.matrix.nnz

    @property
    def total(self) -> int:
        """Sum of all multiplicities, i.e. the number of directed edges."""
        return int(self.matrix.sum())

    @property
    def entries(self) -> dict[tuple[int, int], int]:
        coo = self.matrix.tocoo()
        return {
            (int(u), int(v)): int(k) for u, v, k in zip(coo.row, coo.col, coo.data)
        }

    def __getitem__(self, key: tuple[int, int]) -> int:
        u, v = key
        return int(self.matrix[u, v])

    def label(self, i: int) -> Hashable:
        return i if self.labels is None else self.labels[i]

    def to_dense(self) -> np.ndarray:
        return self.matrix.toarray()


def incidence_to_adjacency(e: IncidenceMatrix) -> AdjacencyMatrix:
    """Convert an incidence matrix into edge multiplicities ``A[u, v]``.

    Edges missing either their leaving or entering entry contribute nothing.
    """
    a = e.signed_part(-1).T @ e.signed_part(+1)
    return AdjacencyMatrix(e.n_vertices, sp.csr_array(a))


def adjacency_from_edge_list(
    pairs: Sequence[tuple[Hashable, Hashable]] | Iterable[tuple[Hashable, Hashable]],
) -> tuple[AdjacencyMatrix, dict[Hashable, int]]:
    """Build an adjacency matrix from ``(source, destination)`` id pairs.

    Vertex ids are assigned indices in first-appearance order. Repeated pairs
    accumulate multiplicity.
    """
    index: dict[Hashable, int] = {}
    src: list[int] = []
    dst: list[int] = []
    for a, b in pairs:
        src.append(index.setdefault(a, len(index)))
        dst.append(index.setdefault(b, len(index)))
    n = len(index)
    m = sp.csr_array(
        (np.ones(len(src), dtype=np.int64), (np.array(src, dtype=np.int64), np.array(dst, dtype=np.int64))),
        shape=(n, n),
    )
    return AdjacencyMatrix(n, m, labels=tuple(index)), index
