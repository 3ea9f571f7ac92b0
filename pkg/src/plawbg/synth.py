"""Seeded synthetic degree samples and random graphs.

Every generator call owns one ``numpy.random.PCG64`` stream seeded from the
spec, so identical specs produce identical output.

Power-law magnitudes use the continuous Pareto inverse CDF
``x = x_min * (1 - u) ** (-1 / (alpha - 1))`` rounded half-up to an integer.
Log-normal magnitudes are ``exp(normal(mu, sigma))`` rounded the same way.
Both are floored at ``x_min``.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from plawbg.errors import ParameterError
from plawbg.matrix_core import IncidenceMatrix

KINDS = ("power_law", "log_normal")
# keeps rounded draws exactly representable as int64
MAX_DEGREE = 2**53


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str = "power_law"
    exponent: float = 1.8
    mu: float = 0.0
    sigma: float = 1.0
    n_samples: int = 10_000
    x_min: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.kind == "power_law" and not self.exponent > 1:
            raise ParameterError(
                f"power-law exponent must exceed 1 for the inverse CDF, got {self.exponent}"
            )
        if self.kind == "log_normal" and not self.sigma >= 0:
            raise ParameterError("sigma must be non-negative")
        if self.n_samples < 1:
            raise ParameterError("n_samples must be at least 1")
        if self.x_min < 1:
            raise ParameterError("x_min must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ParameterError("seed must fit in an unsigned 64-bit integer")


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _magnitudes(spec: GeneratorSpec, rng: np.random.Generator) -> np.ndarray:
    if spec.kind == "power_law":
        u = rng.random(spec.n_samples)
        return spec.x_min * (1.0 - u) ** (-1.0 / (spec.exponent - 1.0))
    return np.exp(rng.normal(spec.mu, spec.sigma, spec.n_samples))


def _draw(spec: GeneratorSpec, rng: np.random.Generator) -> np.ndarray:
    x = np.floor(np.minimum(_magnitudes(spec, rng), MAX_DEGREE) + 0.5)
    return np.maximum(x, spec.x_min).astype(np.int64)


def sample_magnitudes(spec: GeneratorSpec) -> np.ndarray:
    """The continuous draws behind :func:`sample_degrees`, before rounding."""
    return _magnitudes(spec, _rng(spec.seed))


def sample_degrees(spec: GeneratorSpec) -> np.ndarray:
    """Draw ``spec.n_samples`` positive integer magnitudes."""
    return _draw(spec, _rng(spec.seed))


def sample_graph(spec: GeneratorSpec) -> IncidenceMatrix:
    """Random directed graph whose out-degrees are drawn by :func:`sample_degrees`.

    Vertex ``v`` gets ``k_v`` outgoing edges; each edge's destination is
    uniform over all vertices (self-loops included). In-degrees are therefore
    close to Poisson, not heavy-tailed.
    """
    rng = _rng(spec.seed)
    out_deg = _draw(spec, rng)
    n = spec.n_samples
    src = np.repeat(np.arange(n, dtype=np.int64), out_deg)
    m = len(src)
    dst = rng.integers(0, n, size=m, dtype=np.int64)
    edges = np.arange(m, dtype=np.int64)
    return IncidenceMatrix(
        n_edges=m,
        n_vertices=n,
        edge=np.concatenate([edges, edges]),
        vertex=np.concatenate([src, dst]),
        sign=np.concatenate([np.full(m, -1, dtype=np.int64), np.ones(m, dtype=np.int64)]),
    )


def matched_log_normal(
    target_M: int, n_samples: int, sigma: float, seed: int, x_min: int = 1
) -> GeneratorSpec:
    """Log-normal spec whose sample total is as close as possible to ``target_M``.

    The normal draws are fixed by the seed and each sample is monotone in
    ``mu``, so bisection on ``mu`` finds the closest achievable total.
    """
    base = GeneratorSpec(kind="log_normal", sigma=sigma, n_samples=n_samples, x_min=x_min, seed=seed)

    def total(mu):
        return int(sample_degrees(replace(base, mu=mu)).sum())

    lo, hi = -20.0, 40.0
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if total(mid) < target_M:
            lo = mid
        else:
            hi = mid
    mu = min((lo, hi), key=lambda m: abs(total(m) - target_M))
    return replace(base, mu=mu)
