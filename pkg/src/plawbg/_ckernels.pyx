# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in :mod:`plawbg._pykernels`.

Both backends must agree bit-for-bit: counts use ``floor(x + 0.5)`` and
``pow`` from libm, which is what CPython's float ``**`` calls as well.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport floor, pow

cnp.import_array()


def power_counts(const cnp.int64_t[::1] bins, double alpha, double scale):
    cdef Py_ssize_t i, n = bins.shape[0]
    cdef cnp.int64_t c
    out = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] o = out
    for i in range(n):
        c = <cnp.int64_t>floor(scale * pow(<double>bins[i], -alpha) + 0.5)
        o[i] = c if c > 1 else 1
    return out


def model_totals(const cnp.int64_t[::1] bins, double alpha,
                 const double[::1] scales):
    cdef Py_ssize_t i, j, nb = bins.shape[0], ns = scales.shape[0]
    cdef cnp.int64_t c, sn, sm
    cdef double s
    powers = np.empty(nb, dtype=np.float64)
    cdef double[::1] p = powers
    tot_n = np.empty(ns, dtype=np.int64)
    tot_m = np.empty(ns, dtype=np.int64)
    cdef cnp.int64_t[::1] tn = tot_n
    cdef cnp.int64_t[::1] tm = tot_m
    for i in range(nb):
        p[i] = pow(<double>bins[i], -alpha)
    for j in range(ns):
        s = scales[j]
        sn = 0
        sm = 0
        for i in range(nb):
            c = <cnp.int64_t>floor(s * p[i] + 0.5)
            if c < 1:
                c = 1
            sn += c
            sm += c * bins[i]
        tn[j] = sn
        tm[j] = sm
    return tot_n, tot_m


def rebin_counts(const cnp.int64_t[::1] obs_bins,
                 const cnp.int64_t[::1] obs_counts,
                 const cnp.int64_t[::1] model_bins):
    cdef Py_ssize_t i = 0, k, no = obs_bins.shape[0], nm = model_bins.shape[0]
    out = np.zeros(nm, dtype=np.int64)
    cdef cnp.int64_t[::1] o = out
    for k in range(no):
        while i + 1 < nm and model_bins[i + 1] <= obs_bins[k]:
            i += 1
        o[i] += obs_counts[k]
    return out
