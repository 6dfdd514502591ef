"""Selection of the hot-kernel backend.

The numeric inner loops of the pipeline (correlation, per-location
normalization, cuboid max-pooling, descriptor assembly, nearest-centroid
scans, presence pooling) exist twice: a numba ``@njit`` implementation in
:mod:`midfea.kernels_numba` and a vectorized pure-numpy implementation in
:mod:`midfea.kernels_numpy`.  Both compute identical results bit for bit
(same accumulation order, no fast-math).

The active backend is chosen by the ``MIDFEA_BACKEND`` environment
variable: ``numba``, ``numpy``, or ``auto`` (default: numba when
importable, numpy otherwise).  ``use()`` switches at runtime, which the
benchmark uses to compare the two.

The float-valued kernels agree bit for bit across backends (same
accumulation order, no fast-math).  ``nearest_centroid`` computes
distances via BLAS on the numpy path, so its indices can differ between
backends only where two centroids are equidistant to the working
precision; both paths resolve ties to the lowest index.
"""

from __future__ import annotations

import os

from .errors import InvalidArgumentError

_BACKENDS = ("numba", "numpy")
_active: str | None = None


def _numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def _resolve(requested: str) -> str:
    if requested == "auto":
        return "numba" if _numba_available() else "numpy"
    if requested not in _BACKENDS:
        raise InvalidArgumentError(
            f"unknown backend {requested!r}; expected one of "
            f"{('auto',) + _BACKENDS}")
    if requested == "numba" and not _numba_available():
        raise InvalidArgumentError("numba backend requested but numba is not importable")
    return requested


def use(name: str) -> str:
    """Activate a backend by name ('auto', 'numba', or 'numpy')."""
    global _active
    _active = _resolve(name)
    return _active


def current() -> str:
    """Name of the active backend, resolving the env flag on first use."""
    global _active
    if _active is None:
        _active = _resolve(os.environ.get("MIDFEA_BACKEND", "auto"))
    return _active


def kernels():
    """The active kernel module."""
    if current() == "numba":
        from . import kernels_numba
        return kernels_numba
    from . import kernels_numpy
    return kernels_numpy


def warmup() -> None:
    """Force JIT compilation of every kernel (no-op on the numpy path)."""
    import numpy as np

    k = kernels()
    img = np.arange(36, dtype=np.float64).reshape(6, 6)
    filt = np.ones((2, 3, 3), dtype=np.float64)
    stack = k.correlate_bank(img, filt)
    stack = k.depth_normalize(stack, 1e-12)
    stack = k.depth_threshold_mean(stack)
    stack = k.depth_normalize(stack, 1e-12)
    pooled = k.max_pool_pairs(stack)
    desc = k.assemble_patches(pooled)
    pts = desc.reshape(-1, desc.shape[2])
    cents = pts[:2].copy()
    codes = k.nearest_centroid(pts, cents)
    k.pool_presence(codes.reshape(desc.shape[0], desc.shape[1]), 2,
                    np.array([[0, 1, 0, 1]], dtype=np.int64))
    k.cluster_sums(pts, codes, 2)
