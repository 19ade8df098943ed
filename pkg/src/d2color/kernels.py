"""Backend selection for the hot kernels.

The compiled ``_ckernels`` extension is used when it was built and
``D2COLOR_PURE_PYTHON`` is unset.  It works on int64, so every call checks
its inputs fit and otherwise routes to the arbitrary-precision Python kernel.
"""
from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("D2COLOR_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

# headroom so sums of two int64 values never overflow
_INT64_SAFE = 1 << 61


def _impl(force: str | None):
    if force == "python" or _ckernels is None:
        return _pykernels
    return _ckernels


def max_flow(n_nodes, tails, heads, caps, rcaps, source, sink, *, backend=None):
    """See :func:`d2color._pykernels.max_flow`."""
    impl = _impl(backend)
    if impl is _ckernels and sum(caps) + sum(rcaps) >= _INT64_SAFE:
        impl = _pykernels
    return impl.max_flow(n_nodes, tails, heads, caps, rcaps, source, sink)


def densest_subset(n, adjmask, *, backend=None):
    return _impl(backend).densest_subset(n, adjmask)


def min_linear_subset(n, adjmask, a, b, *, backend=None):
    impl = _impl(backend)
    if impl is _ckernels and (abs(a) * 64 >= _INT64_SAFE or abs(b) * 64 * 64 >= _INT64_SAFE):
        impl = _pykernels
    return impl.min_linear_subset(n, adjmask, a, b)
