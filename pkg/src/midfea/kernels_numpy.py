"""Pure-numpy implementations of the hot kernels.

Accumulations run in the same index order as the numba twins (filter taps
ascending, depth ascending, samples ascending) so the two backends agree
bit for bit; the one exception is ``nearest_centroid``, which goes
through BLAS here and so matches the numba backend only up to exact-tie
boundaries.  Do not reorder loops here without mirroring the change in
:mod:`midfea.kernels_numba`.
"""

from __future__ import annotations

import numpy as np


def correlate_bank(img: np.ndarray, filters: np.ndarray) -> np.ndarray:
    """Valid correlation of ``img`` with every filter.

    ``filters`` has shape (count, side, side); output is
    (h-side+1, w-side+1, count) with taps accumulated in (di, dj) order.
    """
    h, w = img.shape
    count, side, _ = filters.shape
    oh, ow = h - side + 1, w - side + 1
    out = np.empty((oh, ow, count), dtype=np.float64)
    for k in range(count):
        f = filters[k]
        acc = np.zeros((oh, ow), dtype=np.float64)
        for di in range(side):
            for dj in range(side):
                acc += f[di, dj] * img[di:di + oh, dj:dj + ow]
        out[:, :, k] = acc
    return out


def depth_normalize(stack: np.ndarray, eps: float) -> np.ndarray:
    """Scale each per-location depth vector to unit Euclidean norm.

    Vectors with norm below ``eps`` become all-zero.
    """
    h, w, d = stack.shape
    ss = np.zeros((h, w), dtype=np.float64)
    for k in range(d):
        ss += stack[:, :, k] * stack[:, :, k]
    norm = np.sqrt(ss)
    keep = norm >= eps
    safe = np.where(keep, norm, 1.0)
    out = np.empty_like(stack)
    for k in range(d):
        out[:, :, k] = np.where(keep, stack[:, :, k] / safe, 0.0)
    return out


def depth_threshold_mean(stack: np.ndarray) -> np.ndarray:
    """Zero every entry strictly below the mean of its depth vector."""
    h, w, d = stack.shape
    s = np.zeros((h, w), dtype=np.float64)
    for k in range(d):
        s += stack[:, :, k]
    mean = s / d
    out = np.empty_like(stack)
    for k in range(d):
        v = stack[:, :, k]
        out[:, :, k] = np.where(v < mean, 0.0, v)
    return out


def max_pool_pairs(stack: np.ndarray) -> np.ndarray:
    """Max over 2x2 spatial blocks for every unordered pair of maps.

    Output depth is C(d, 2) with pairs in lexicographic (i, j) order;
    trailing odd rows/columns are dropped.
    """
    h, w, d = stack.shape
    oh, ow = h // 2, w // 2
    t = stack[:2 * oh, :2 * ow, :]
    block = np.maximum(
        np.maximum(t[0::2, 0::2, :], t[0::2, 1::2, :]),
        np.maximum(t[1::2, 0::2, :], t[1::2, 1::2, :]),
    )
    out = np.empty((oh, ow, d * (d - 1) // 2), dtype=np.float64)
    idx = 0
    for i in range(d):
        for j in range(i + 1, d):
            out[:, :, idx] = np.maximum(block[:, :, i], block[:, :, j])
            idx += 1
    return out


def assemble_patches(stack: np.ndarray) -> np.ndarray:
    """Concatenate each 2x2 overlapping window across all maps.

    Descriptor layout at (r, c): for map m ascending, the values at
    (r, c), (r, c+1), (r+1, c), (r+1, c+1).  Output (h-1, w-1, 4d).
    """
    h, w, d = stack.shape
    out = np.empty((h - 1, w - 1, 4 * d), dtype=np.float64)
    for k in range(d):
        out[:, :, 4 * k + 0] = stack[:-1, :-1, k]
        out[:, :, 4 * k + 1] = stack[:-1, 1:, k]
        out[:, :, 4 * k + 2] = stack[1:, :-1, k]
        out[:, :, 4 * k + 3] = stack[1:, 1:, k]
    return out


def nearest_centroid(points: np.ndarray, centroids: np.ndarray) -> np.ndarray:
    """Index of the nearest centroid (squared Euclidean) per point row.

    Ties resolve to the lowest index.
    """
    # ||x-c||^2 differs from ||c||^2 - 2 x.c by a per-row constant.
    g = points @ centroids.T
    cn = np.einsum("ij,ij->i", centroids, centroids)
    d2 = cn[None, :] - 2.0 * g
    return np.argmin(d2, axis=1).astype(np.int64)


def pool_presence(codes: np.ndarray, cb_size: int, regions: np.ndarray) -> np.ndarray:
    """Binary presence of each code index inside each region rectangle.

    ``regions`` rows are half-open [r0, r1, c0, c1); empty rectangles
    yield all-zero rows.
    """
    out = np.zeros((regions.shape[0], cb_size), dtype=np.float64)
    for i in range(regions.shape[0]):
        r0, r1, c0, c1 = regions[i]
        block = codes[r0:r1, c0:c1]
        if block.size:
            out[i, np.unique(block)] = 1.0
    return out


def cluster_sums(points: np.ndarray, assign: np.ndarray, k: int):
    """Per-cluster coordinate sums and member counts."""
    dim = points.shape[1]
    sums = np.empty((k, dim), dtype=np.float64)
    for d in range(dim):
        sums[:, d] = np.bincount(assign, weights=points[:, d], minlength=k)
    counts = np.bincount(assign, minlength=k).astype(np.int64)
    return sums, counts
