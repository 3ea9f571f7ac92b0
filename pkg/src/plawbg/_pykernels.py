"""Pure-Python kernels, used when the compiled extension is unavailable.

The numerics here define the reference behaviour; ``_ckernels.pyx``
mirrors them loop for loop.
"""
import math

import numpy as np


def _count(scale, power):
    c = math.floor(scale * power + 0.5)
    return c if c > 1 else 1


def power_counts(bins, alpha, scale):
    return np.array(
        [_count(scale, float(d) ** -alpha) for d in bins], dtype=np.int64
    )


def model_totals(bins, alpha, scales):
    degrees = [int(d) for d in bins]
    powers = [float(d) ** -alpha for d in degrees]
    tot_n = np.empty(len(scales), dtype=np.int64)
    tot_m = np.empty(len(scales), dtype=np.int64)
    for j, s in enumerate(scales):
        s = float(s)
        sn = sm = 0
        for d, p in zip(degrees, powers):
            c = _count(s, p)
            sn += c
            sm += c * d
        tot_n[j] = sn
        tot_m[j] = sm
    return tot_n, tot_m


def rebin_counts(obs_bins, obs_counts, model_bins):
    # both bin arrays ascending; obs degrees already checked >= model_bins[0]
    edges = [int(b) for b in model_bins]
    out = [0] * len(edges)
    i = 0
    for d, k in zip(obs_bins, obs_counts):
        while i + 1 < len(edges) and edges[i + 1] <= d:
            i += 1
        out[i] += int(k)
    return np.array(out, dtype=np.int64)
