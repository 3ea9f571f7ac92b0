"""Aligning observed degree counts with model bins, and judging the fit.

Observed degrees are assigned to model bins by half-open intervals
``[d_i, d_{i+1})``; the last bin extends to infinity, so no vertex is lost.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Hashable, Mapping, NamedTuple, Sequence

from plawbg import kernels
from plawbg.errors import CoverageError, ParameterError
from plawbg.model import PowerLawModel

DEFAULT_RATIO_THRESHOLD = 0.5
DEFAULT_FACTOR = 2.0


@dataclass(frozen=True)
class RebinnedDistribution:
    bins: tuple[int, ...]
    counts: tuple[int, ...]
    source_N: int

    def __post_init__(self):
        if len(self.bins) != len(self.counts):
            raise ValueError("bins and counts differ in length")
        if sum(self.counts) != self.source_N:
            raise ValueError("rebinned counts must sum to source_N")


class BinComparison(NamedTuple):
    degree: int
    observed: int
    model: int
    log10_ratio: float | None


@dataclass(frozen=True)
class FitReport:
    objective_value: float | None
    per_bin: tuple[BinComparison, ...]
    divergence: float
    verdict: str
    flagged_degrees: tuple[int, ...]
    ratio_threshold: float
    no_overlap: bool = False

    @property
    def consistent(self) -> bool:
        return self.verdict == "consistent"


def _bins_of(model_bins) -> tuple[int, ...]:
    bins = model_bins.bins if isinstance(model_bins, PowerLawModel) else model_bins
    bins = tuple(int(b) for b in bins)
    if not bins or any(b <= a for a, b in zip(bins, bins[1:])):
        raise ValueError("model bins must be non-empty and strictly ascending")
    return bins


def rebin(observed, model_bins: PowerLawModel | Sequence[int]) -> RebinnedDistribution:
    """Re-express ``observed`` (anything with ``bins`` and ``counts``) on the model's bins."""
    bins = _bins_of(model_bins)
    occupied = [d for d, c in zip(observed.bins, observed.counts) if c > 0]
    if occupied and occupied[0] < bins[0]:
        raise CoverageError(
            f"observed degree {occupied[0]} lies below the first model bin {bins[0]}"
        )
    counts = kernels.rebin_counts(observed.bins, observed.counts, bins)
    return RebinnedDistribution(bins, tuple(int(c) for c in counts), sum(observed.counts))


def compare(
    rebinned: RebinnedDistribution,
    model: PowerLawModel,
    ratio_threshold: float = DEFAULT_RATIO_THRESHOLD,
    factor: float = DEFAULT_FACTOR,
    objective_value: float | None = None,
) -> FitReport:
    """Per-bin log10(observed / model) and the resulting verdict.

    ``divergence`` is the largest absolute log ratio over bins where both
    counts are positive. Bins where the observed count exceeds ``factor``
    times the model count are reported in ``flagged_degrees``.
    """
    if tuple(rebinned.bins) != tuple(model.bins):
        raise ValueError("rebinned distribution and model must share bins")
    rows = []
    for d, obs, mod in zip(model.bins, rebinned.counts, model.counts):
        ratio = math.log10(obs / mod) if obs > 0 and mod > 0 else None
        rows.append(BinComparison(d, obs, mod, ratio))
    ratios = [abs(r.log10_ratio) for r in rows if r.log10_ratio is not None]
    divergence = max(ratios, default=0.0)
    flagged = tuple(r.degree for r in rows if r.observed > factor * r.model)
    return FitReport(
        objective_value=objective_value,
        per_bin=tuple(rows),
        divergence=divergence,
        verdict="inconsistent" if divergence > ratio_threshold else "consistent",
        flagged_degrees=flagged,
        ratio_threshold=ratio_threshold,
        no_overlap=not ratios,
    )


def filter_high_degree(
    degrees: Mapping[Hashable, int],
    model: PowerLawModel,
    rebinned: RebinnedDistribution,
    factor: float = DEFAULT_FACTOR,
) -> set:
    """Vertices beyond the model's largest degree or in over-populated bins."""
    if not factor > 1:
        raise ParameterError(f"filter factor must exceed 1, got {factor}")
    bins = model.bins
    hot = [obs > factor * mod for obs, mod in zip(rebinned.counts, model.counts)]
    flagged = set()
    for v, d in degrees.items():
        if d < bins[0]:
            continue
        if d > model.d_max or hot[bisect.bisect_right(bins, d) - 1]:
            flagged.add(v)
    return flagged
