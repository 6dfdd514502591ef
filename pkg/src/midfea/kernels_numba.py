"""Numba ``@njit`` implementations of the hot kernels.

Loop nests mirror :mod:`midfea.kernels_numpy` exactly (same accumulation
order, fastmath off) so both backends return the same bits.  All kernels
release the GIL, which lets dataset extraction fan out across threads.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def correlate_bank(img, filters):
    h, w = img.shape
    count, side, _ = filters.shape
    oh, ow = h - side + 1, w - side + 1
    out = np.empty((oh, ow, count), dtype=np.float64)
    for k in range(count):
        for r in range(oh):
            for c in range(ow):
                acc = 0.0
                for di in range(side):
                    for dj in range(side):
                        acc += filters[k, di, dj] * img[r + di, c + dj]
                out[r, c, k] = acc
    return out


@njit(cache=True, nogil=True)
def depth_normalize(stack, eps):
    h, w, d = stack.shape
    out = np.empty_like(stack)
    for r in range(h):
        for c in range(w):
            ss = 0.0
            for k in range(d):
                ss += stack[r, c, k] * stack[r, c, k]
            norm = np.sqrt(ss)
            if norm >= eps:
                for k in range(d):
                    out[r, c, k] = stack[r, c, k] / norm
            else:
                for k in range(d):
                    out[r, c, k] = 0.0
    return out


@njit(cache=True, nogil=True)
def depth_threshold_mean(stack):
    h, w, d = stack.shape
    out = np.empty_like(stack)
    for r in range(h):
        for c in range(w):
            s = 0.0
            for k in range(d):
                s += stack[r, c, k]
            mean = s / d
            for k in range(d):
                v = stack[r, c, k]
                out[r, c, k] = 0.0 if v < mean else v
    return out


@njit(cache=True, nogil=True)
def max_pool_pairs(stack):
    h, w, d = stack.shape
    oh, ow = h // 2, w // 2
    block = np.empty((oh, ow, d), dtype=np.float64)
    for r in range(oh):
        for c in range(ow):
            for k in range(d):
                m = stack[2 * r, 2 * c, k]
                if stack[2 * r, 2 * c + 1, k] > m:
                    m = stack[2 * r, 2 * c + 1, k]
                if stack[2 * r + 1, 2 * c, k] > m:
                    m = stack[2 * r + 1, 2 * c, k]
                if stack[2 * r + 1, 2 * c + 1, k] > m:
                    m = stack[2 * r + 1, 2 * c + 1, k]
                block[r, c, k] = m
    out = np.empty((oh, ow, d * (d - 1) // 2), dtype=np.float64)
    idx = 0
    for i in range(d):
        for j in range(i + 1, d):
            for r in range(oh):
                for c in range(ow):
                    a = block[r, c, i]
                    b = block[r, c, j]
                    out[r, c, idx] = a if a > b else b
            idx += 1
    return out


@njit(cache=True, nogil=True)
def assemble_patches(stack):
    h, w, d = stack.shape
    out = np.empty((h - 1, w - 1, 4 * d), dtype=np.float64)
    for r in range(h - 1):
        for c in range(w - 1):
            for k in range(d):
                out[r, c, 4 * k + 0] = stack[r, c, k]
                out[r, c, 4 * k + 1] = stack[r, c + 1, k]
                out[r, c, 4 * k + 2] = stack[r + 1, c, k]
                out[r, c, 4 * k + 3] = stack[r + 1, c + 1, k]
    return out


@njit(cache=True, nogil=True)
def nearest_centroid(points, centroids):
    n, dim = points.shape
    k = centroids.shape[0]
    out = np.empty(n, dtype=np.int64)
    for i in range(n):
        best = 0
        bestd = np.inf
        for j in range(k):
            acc = 0.0
            for t in range(dim):
                diff = points[i, t] - centroids[j, t]
                acc += diff * diff
            if acc < bestd:
                bestd = acc
                best = j
        out[i] = best
    return out


@njit(cache=True, nogil=True)
def pool_presence(codes, cb_size, regions):
    nr = regions.shape[0]
    out = np.zeros((nr, cb_size), dtype=np.float64)
    for i in range(nr):
        r0, r1, c0, c1 = regions[i, 0], regions[i, 1], regions[i, 2], regions[i, 3]
        for r in range(r0, r1):
            for c in range(c0, c1):
                out[i, codes[r, c]] = 1.0
    return out


@njit(cache=True, nogil=True)
def cluster_sums(points, assign, k):
    n, dim = points.shape
    sums = np.zeros((k, dim), dtype=np.float64)
    counts = np.zeros(k, dtype=np.int64)
    for i in range(n):
        a = assign[i]
        counts[a] += 1
        for d in range(dim):
            sums[a, d] += points[i, d]
    return sums, counts
