"""Backend selection for the numeric kernels.

The compiled Cython module is used when it was built and imports cleanly;
otherwise the pure-Python implementation is used. Set ``PLAWBG_PURE=1`` to
force the fallback.
"""
import os

import numpy as np

from plawbg import _pykernels

if os.environ.get("PLAWBG_PURE"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from plawbg import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"


def use(backend: str) -> str:
    """Switch the active backend (``"cython"`` or ``"python"``); returns the previous one."""
    global _impl, BACKEND
    previous = BACKEND
    if backend == "python":
        _impl = _pykernels
    elif backend == "cython":
        from plawbg import _ckernels

        _impl = _ckernels
    else:
        raise ValueError(f"unknown backend {backend!r}")
    BACKEND = backend
    return previous


def _i64(a):
    return np.ascontiguousarray(a, dtype=np.int64)


def power_counts(bins, alpha, scale, impl=None):
    """Model counts ``max(1, round(scale * d**-alpha))`` for each bin."""
    return (impl or _impl).power_counts(_i64(bins), float(alpha), float(scale))


def model_totals(bins, alpha, scales, impl=None):
    """Vertex and edge totals of the model for every scale in ``scales``.

    Returns two int64 arrays ``(N, M)`` aligned with ``scales``.
    """
    scales = np.ascontiguousarray(scales, dtype=np.float64)
    return (impl or _impl).model_totals(_i64(bins), float(alpha), scales)


def rebin_counts(obs_bins, obs_counts, model_bins, impl=None):
    """Sum observed counts into half-open model intervals ``[d_i, d_i+1)``."""
    return (impl or _impl).rebin_counts(
        _i64(obs_bins), _i64(obs_counts), _i64(model_bins)
    )
