"""Power-law background models fitted to observed vertex and edge totals.

The exponent comes from a one-line estimator, ``log(n(d_1)) / log(d_max)``.
With the exponent held fixed, a discrete search chooses the bins and scale
of an ideal ("perfect") power law whose totals ``N = sum n(d_i)`` and
``M = sum n(d_i) * d_i`` best match the observed ones.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from plawbg import kernels
from plawbg.degree import DegreeDistribution
from plawbg.errors import (
    DegenerateDistributionError,
    EstimatorPreconditionError,
    ParameterError,
)

log = logging.getLogger(__name__)

OPTIMIZERS = ("exhaustive", "annealing")
N_SCALES = 64
DMAX_OCTAVES = (-2, -1, 0, 1, 2)
COOLING = 0.995

# candidate kinds, in tie-break order
GRID, GEOMETRIC_ANCHOR, OBSERVED_ANCHOR = 0, 1, 2


@dataclass(frozen=True)
class PowerLawModel:
    alpha: float
    scale_c: float
    bins: tuple[int, ...]
    counts: tuple[int, ...]
    model_N: int
    model_M: int

    def __post_init__(self):
        if not self.alpha > 0:
            raise DegenerateDistributionError(f"model exponent must be > 0, got {self.alpha}")
        if len(self.bins) < 2 or self.bins[-1] <= 1:
            raise DegenerateDistributionError("a power-law model needs N_d > 1 and d_max > 1")
        if len(self.bins) != len(self.counts):
            raise ValueError("bins and counts differ in length")

    @property
    def N_d(self) -> int:
        return len(self.bins)

    @property
    def d_max(self) -> int:
        return self.bins[-1]


@dataclass(frozen=True)
class FitConfig:
    optimizer: str = "exhaustive"
    max_bins: int = 16
    seed: int = 0
    iteration_budget: int = 100_000
    tolerance: float = 0.0

    def __post_init__(self):
        if self.optimizer not in OPTIMIZERS:
            raise ParameterError(f"optimizer must be one of {OPTIMIZERS}, got {self.optimizer!r}")
        if self.max_bins < 2:
            raise ParameterError("max_bins must be at least 2")
        if self.iteration_budget < 1:
            raise ParameterError("iteration_budget must be at least 1")
        if self.tolerance < 0:
            raise ParameterError("tolerance must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise ParameterError("seed must fit in an unsigned 64-bit integer")


def estimate_alpha(dist: DegreeDistribution) -> float:
    """First-order exponent estimate ``log(n(d_1)) / log(d_max)``."""
    if dist.d_max <= 1:
        raise DegenerateDistributionError(
            "d_max = 1: log(d_max) is zero and the exponent is undefined"
        )
    if dist.n_d1 < 1:
        raise EstimatorPreconditionError(
            "the exponent estimator needs at least one vertex with degree=1"
        )
    return math.log(dist.n_d1) / math.log(dist.d_max)


def _sq_residual(n, m, N_obs, M_obs) -> int:
    return (int(N_obs) - int(n)) ** 2 + (int(M_obs) - int(m)) ** 2


def objective(model_bins: Sequence[int], model_counts: Sequence[int], N_obs: int, M_obs: int) -> float:
    """Euclidean residual between model and observed vertex/edge totals."""
    n = sum(int(c) for c in model_counts)
    m = sum(int(c) * int(d) for d, c in zip(model_bins, model_counts))
    return math.sqrt(_sq_residual(n, m, N_obs, M_obs))


def geometric_bins(n_bins: int, d_max: int) -> tuple[int, ...]:
    """``n_bins`` log-spaced integer degrees from 1 to ``d_max``, merged after rounding."""
    if n_bins < 2:
        raise ParameterError("need at least two bins")
    if d_max < 2:
        raise ParameterError("d_max must be at least 2")
    out: list[int] = []
    for k in range(n_bins):
        b = math.floor(d_max ** (k / (n_bins - 1)) + 0.5)
        if not out or b > out[-1]:
            out.append(b)
    return tuple(out)


class SearchGrid(NamedTuple):
    n_bins: tuple[int, ...]
    d_max: tuple[int, ...]
    scales: np.ndarray

    @property
    def size(self) -> int:
        return len(self.n_bins) * len(self.d_max) * len(self.scales)


def search_grid(dist: DegreeDistribution, max_bins: int) -> SearchGrid:
    """The discretised (N_d, d_max', scale_c) lattice anchored on the observed data."""
    d_max = sorted({max(2, math.floor(dist.d_max * 2.0**k + 0.5)) for k in DMAX_OCTAVES})
    scales = np.geomspace(1.0, 4.0 * dist.n_d1, N_SCALES)
    return SearchGrid(tuple(range(2, max_bins + 1)), tuple(d_max), scales)


class _Best:
    """Running minimum over candidates ordered by (residual, key)."""

    def __init__(self, N_obs: int, M_obs: int):
        self.N_obs, self.M_obs = N_obs, M_obs
        self.sq: int | None = None
        self.key = None
        self.bins: tuple[int, ...] = ()
        self.evaluated = 0

    def offer(self, sq: int, key, bins) -> None:
        self.evaluated += 1
        if self.sq is None or (sq, key) < (self.sq, self.key):
            self.sq, self.key, self.bins = sq, key, bins

    @property
    def value(self) -> float:
        return math.sqrt(self.sq)


def _anchors(dist: DegreeDistribution):
    c = float(dist.n_d1)
    geo = geometric_bins(dist.N_d, dist.d_max)
    yield (dist.N_d, dist.d_max, c, GEOMETRIC_ANCHOR), geo
    yield (dist.N_d, dist.d_max, c, OBSERVED_ANCHOR), dist.bins


def _eval_one(bins, alpha, scale, N_obs, M_obs) -> int:
    tn, tm = kernels.model_totals(bins, alpha, np.array([scale]))
    return _sq_residual(tn[0], tm[0], N_obs, M_obs)


def _block_residuals(bins, alpha, scales, N_obs, M_obs):
    tn, tm = kernels.model_totals(bins, alpha, scales)
    dn = N_obs - tn
    dm = M_obs - tm
    if max(np.abs(dn).max(), np.abs(dm).max()) >= 2**31:
        dn, dm = dn.astype(object), dm.astype(object)
    return dn * dn + dm * dm


def _exhaustive(dist, alpha, cfg, grid, best: _Best) -> None:
    N_obs, M_obs = best.N_obs, best.M_obs
    remaining = cfg.iteration_budget
    for nd in grid.n_bins:
        for dm in grid.d_max:
            if remaining <= 0:
                log.debug("exhaustive search stopped by iteration budget")
                return
            bins = geometric_bins(nd, dm)
            scales = grid.scales[:remaining]
            sq = _block_residuals(bins, alpha, scales, N_obs, M_obs)
            j = int(np.argmin(sq))  # first minimum = smallest scale
            best.offer(int(sq[j]), (nd, dm, float(scales[j]), GRID), bins)
            best.evaluated += len(scales) - 1
            remaining -= len(scales)
        if best.value < cfg.tolerance:
            return


def _annealing(dist, alpha, cfg, grid, best: _Best) -> None:
    N_obs, M_obs = best.N_obs, best.M_obs
    sizes = (len(grid.n_bins), len(grid.d_max), len(grid.scales))
    log_scales = np.log(grid.scales)
    state = (
        min(max(dist.N_d, 2), cfg.max_bins) - 2,
        grid.d_max.index(dist.d_max),
        int(np.argmin(np.abs(log_scales - math.log(dist.n_d1)))),
    )
    memo: dict[tuple[int, int, int], int] = {}

    def energy(s):
        if s not in memo:
            nd, dm, sc = grid.n_bins[s[0]], grid.d_max[s[1]], float(grid.scales[s[2]])
            bins = geometric_bins(nd, dm)
            memo[s] = _eval_one(bins, alpha, sc, N_obs, M_obs)
            best.offer(memo[s], (nd, dm, sc, GRID), bins)
        return math.sqrt(memo[s])

    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    current = energy(state)
    t0 = current
    for k in range(cfg.iteration_budget):
        if best.value < cfg.tolerance or t0 == 0:
            return
        axis = int(rng.integers(3))
        step = 1 if rng.integers(2) else -1
        idx = state[axis] + step
        u = rng.random()
        if not 0 <= idx < sizes[axis]:
            continue
        proposal = state[:axis] + (idx,) + state[axis + 1:]
        e = energy(proposal)
        delta = e - current
        temp = t0 * COOLING**k
        if delta <= 0 or (temp > 0 and u < math.exp(-delta / temp)):
            state, current = proposal, e


def fit_perfect_power_law(dist: DegreeDistribution, cfg: FitConfig | None = None) -> tuple[PowerLawModel, float]:
    """Fit an ideal power law conserving the observed vertex and edge totals.

    The exponent is fixed at :func:`estimate_alpha`. Two anchor candidates
    (scale ``n(d_1)`` on the observed bins, and on ``N_d`` log-spaced bins up
    to the observed ``d_max``) are always evaluated; the configured optimizer
    then explores the :func:`search_grid` lattice. Ties are broken by the key
    ``(N_d, d_max', scale_c, kind)``.

    Returns the best model and its objective value.
    """
    cfg = cfg or FitConfig()
    alpha = estimate_alpha(dist)
    if alpha <= 0:
        raise DegenerateDistributionError(
            f"n(d_1) = {dist.n_d1} gives exponent {alpha}; a power-law model needs alpha > 0"
        )
    N_obs, M_obs = dist.N, dist.M
    best = _Best(N_obs, M_obs)
    for key, bins in _anchors(dist):
        best.offer(_eval_one(bins, alpha, key[2], N_obs, M_obs), key, bins)

    grid = search_grid(dist, cfg.max_bins)
    if best.value >= cfg.tolerance:
        if cfg.optimizer == "exhaustive":
            _exhaustive(dist, alpha, cfg, grid, best)
        else:
            _annealing(dist, alpha, cfg, grid, best)
    log.debug("%s fit: %d candidates, objective %.6g", cfg.optimizer, best.evaluated, best.value)

    scale = best.key[2]
    counts = tuple(int(c) for c in kernels.power_counts(best.bins, alpha, scale))
    model = PowerLawModel(
        alpha=alpha,
        scale_c=scale,
        bins=tuple(best.bins),
        counts=counts,
        model_N=sum(counts),
        model_M=sum(c * d for c, d in zip(counts, best.bins)),
    )
    return model, best.value
