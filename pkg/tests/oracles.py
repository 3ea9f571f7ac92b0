"""Independent reference computations used by the test-suite.

Nothing here calls into the code paths it is used to check.
"""
import math
from fractions import Fraction

import numpy as np

from plawbg.matrix_core import IncidenceMatrix


def random_incidence(rng, max_edges=20, max_vertices=10, dangling=0.15):
    """A valid random incidence matrix with self-loops and dangling edges."""
    n_v = int(rng.integers(1, max_vertices + 1))
    n_e = int(rng.integers(0, max_edges + 1))
    triples = []
    for e in range(n_e):
        r = rng.random()
        src, dst = int(rng.integers(n_v)), int(rng.integers(n_v))
        if r < dangling / 2:
            triples.append((e, src, -1))
        elif r < dangling:
            triples.append((e, dst, +1))
        elif r < dangling + 0.05:
            pass  # empty row
        else:
            triples.append((e, src, -1))
            triples.append((e, dst, +1))
    order = rng.permutation(len(triples))
    return IncidenceMatrix.from_triples(n_e, n_v, [triples[i] for i in order])


def dense_adjacency(e: IncidenceMatrix) -> list[list[int]]:
    """|E<0|^T |E>0| by materialising both dense 0/1 matrices and a triple loop."""
    neg = [[0] * e.n_vertices for _ in range(e.n_edges)]
    pos = [[0] * e.n_vertices for _ in range(e.n_edges)]
    for edge, vertex, sign in e.triples():
        (neg if sign < 0 else pos)[edge][vertex] = 1
    a = [[0] * e.n_vertices for _ in range(e.n_vertices)]
    for u in range(e.n_vertices):
        for v in range(e.n_vertices):
            a[u][v] = sum(neg[k][u] * pos[k][v] for k in range(e.n_edges))
    return a


def round_half_up(x: float) -> int:
    # Fraction makes the .5 comparison exact for the float value given
    f = Fraction(x)
    whole = math.floor(f)
    return whole + 1 if f - whole >= Fraction(1, 2) else whole


def model_counts(bins, alpha, scale):
    return [max(1, round_half_up(scale * float(d) ** -alpha)) for d in bins]


def geometric_bins(n_bins, d_max):
    vals = sorted({round_half_up(d_max ** (k / (n_bins - 1))) for k in range(n_bins)})
    return tuple(vals)


def enumerate_fit(dist, alpha, grid):
    """Brute-force minimum over anchors plus every grid point.

    Returns ``(squared residual, key, bins, counts)`` of the winner, with ties
    broken by ``(N_d, d_max', scale_c, kind)`` as the optimizer documents.
    """
    N, M = sum(dist.counts), sum(d * c for d, c in zip(dist.bins, dist.counts))
    n1 = dist.counts[0]
    cands = [
        ((dist.N_d, dist.d_max, float(n1), 1), geometric_bins(dist.N_d, dist.d_max)),
        ((dist.N_d, dist.d_max, float(n1), 2), tuple(dist.bins)),
    ]
    for nd in grid.n_bins:
        for dm in grid.d_max:
            bins = geometric_bins(nd, dm)
            for s in grid.scales:
                cands.append(((nd, dm, float(s), 0), bins))
    best = None
    for key, bins in cands:
        counts = model_counts(bins, alpha, key[2])
        n = sum(counts)
        m = sum(c * d for c, d in zip(counts, bins))
        sq = (N - n) ** 2 + (M - m) ** 2
        if best is None or (sq, key) < best[:2]:
            best = (sq, key, bins, counts)
    return best


def perfect_distribution(n1, bins):
    """Counts round(n1 * d**-alpha) with alpha = log(n1)/log(d_max), the estimator's own fixed point."""
    alpha = math.log(n1) / math.log(bins[-1])
    return [max(1, round_half_up(n1 * float(d) ** -alpha)) for d in bins], alpha


def random_distribution(rng, max_degree=60, max_bins=12, max_count=40):
    """Random observed distribution that always contains degree 1 and d_max > 1."""
    k = int(rng.integers(1, max_bins))
    rest = rng.choice(np.arange(2, max_degree + 1), size=k, replace=False)
    bins = [1] + sorted(int(b) for b in rest)
    counts = [int(rng.integers(2, max_count + 1))] + [int(rng.integers(1, max_count + 1)) for _ in rest]
    return bins, counts
