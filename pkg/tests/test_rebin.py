import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plawbg.degree import DegreeDistribution
from plawbg.errors import CoverageError, ParameterError
from plawbg.model import PowerLawModel
from plawbg.rebin import compare, filter_high_degree, rebin


def dist(bins, counts):
    return DegreeDistribution(tuple(bins), tuple(counts))


def model(bins, counts, alpha=1.0):
    return PowerLawModel(
        alpha, float(counts[0]), tuple(bins), tuple(counts), sum(counts),
        sum(b * c for b, c in zip(bins, counts)),
    )


def test_identity_binning():
    d = dist([1, 2, 5], [9, 4, 1])
    r = rebin(d, d.bins)
    assert r.counts == d.counts and r.source_N == 14


def test_half_open_intervals():
    assert rebin(dist([1, 2, 3, 4], [5, 3, 2, 1]), [1, 3]).counts == (8, 3)


def test_empty_middle_bin_kept():
    assert rebin(dist([1, 10], [10, 1]), [1, 5, 10]).counts == (10, 0, 1)


def test_last_bin_open_above():
    assert rebin(dist([1, 500], [3, 2]), [1, 10]).counts == (3, 2)


def test_coverage_error():
    with pytest.raises(CoverageError, match="degree 1"):
        rebin(dist([1, 3], [1, 1]), [2, 3])


def test_accepts_model_object():
    m = model([1, 5], [5, 1])
    assert rebin(dist([1, 2, 6], [1, 1, 1]), m).bins == (1, 5)


bin_sets = st.sets(st.integers(2, 200), max_size=12).map(lambda s: [1] + sorted(s))
observed = st.dictionaries(st.integers(1, 300), st.integers(1, 50), min_size=1, max_size=30)


@settings(max_examples=200)
@given(observed, bin_sets)
def test_conservation_idempotence_coarsening(obs, bins):
    d = dist(sorted(obs), [obs[k] for k in sorted(obs)])
    r = rebin(d, bins)
    assert sum(r.counts) == d.N == r.source_N
    assert len(r.counts) == len(bins)
    assert rebin(r, bins) == r
    if len(bins) > 2:
        i = len(bins) // 2
        coarse = rebin(d, bins[:i] + bins[i + 1:])
        merged = list(r.counts[: i - 1]) + [r.counts[i - 1] + r.counts[i]] + list(r.counts[i + 1:])
        assert list(coarse.counts) == merged


def test_compare_exact_match():
    m = model([1, 4, 16], [16, 4, 1])
    rep = compare(rebin(dist(m.bins, m.counts), m), m)
    assert rep.divergence == 0.0 and rep.verdict == "consistent"
    assert rep.flagged_degrees == ()


def test_compare_tenfold_bin():
    m = model([1, 4], [10, 1])
    rep = compare(rebin(dist([1, 4], [10, 10]), m), m, ratio_threshold=0.5)
    assert rep.divergence == pytest.approx(1.0)
    assert rep.verdict == "inconsistent"
    assert rep.flagged_degrees == (4,)
    assert rep.per_bin[1].log10_ratio == pytest.approx(1.0)


def test_compare_skips_empty_bins():
    m = model([1, 5, 10], [10, 2, 1])
    rep = compare(rebin(dist([1, 10], [10, 1]), m), m)
    assert rep.per_bin[1].log10_ratio is None
    assert rep.divergence == 0.0 and not rep.no_overlap


def test_compare_requires_shared_bins():
    m = model([1, 5], [5, 1])
    with pytest.raises(ValueError):
        compare(rebin(dist([1], [3]), [1, 4]), m)


def test_filter_nothing_when_matching():
    m = model([1, 10], [10, 1])
    degrees = {f"v{i}": 1 for i in range(10)} | {"hub": 10, "iso": 0}
    r = rebin(dist([1, 10], [10, 1]), m)
    assert filter_high_degree(degrees, m, r) == set()


def test_filter_beyond_dmax():
    m = model([1, 10], [10, 1])
    degrees = {f"v{i}": 1 for i in range(10)} | {"big": 100}
    r = rebin(dist([1, 100], [10, 1]), m)
    assert filter_high_degree(degrees, m, r) == {"big"}


def test_filter_factor_must_exceed_one():
    m = model([1, 10], [10, 1])
    r = rebin(dist([1], [1]), m)
    with pytest.raises(ParameterError):
        filter_high_degree({}, m, r, factor=1.0)


@settings(max_examples=100)
@given(observed, bin_sets, st.floats(1.01, 5.0))
def test_filter_soundness(obs, bins, factor):
    bins = bins if len(bins) > 1 else [1, 2]
    counts = [max(1, round(50 / b)) for b in bins]
    m = model(bins, counts)
    degrees = {}
    for deg, k in obs.items():
        for j in range(k):
            degrees[f"{deg}-{j}"] = deg
    r = rebin(dist(sorted(obs), [obs[k] for k in sorted(obs)]), m)
    flagged = filter_high_degree(degrees, m, r, factor)
    for v, deg in degrees.items():
        i = max(j for j, b in enumerate(bins) if b <= deg)
        should = deg > m.d_max or r.counts[i] > factor * m.counts[i]
        assert (v in flagged) == should
