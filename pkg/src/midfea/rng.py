"""Deterministic seeded random numbers.

Every stochastic choice in the package (patch sampling, k-means seeding,
projection matrices, synthetic data, classifier shuffles) flows through
:class:`SeededRng` so that a single 64-bit seed reproduces a run bit for
bit on any platform.

Algorithm ``splitmix64-ctr``: a counter-mode generator.  The state is a
pair ``(key, counter)`` of 64-bit unsigned integers.  Draw ``i`` of a
block taken at counter ``c`` is::

    t = key + (c + i + 1) * 0x9E3779B97F4A7C15        (mod 2**64)
    t = (t ^ (t >> 30)) * 0xBF58476D1CE4E5B9          (mod 2**64)
    t = (t ^ (t >> 27)) * 0x94D049BB133111EB          (mod 2**64)
    out_i = t ^ (t >> 31)

i.e. the state advances by the golden-ratio increment once per draw and
each output is the xorshift-multiply finalization of the state.  The key
is the same finalization applied to the user seed.  Because draws depend
only on ``(key, counter)``, blocks of any size produce the same stream,
and substreams are cheap: a child generator re-keys with a hashed label.

The raw 64-bit stream is exact integer arithmetic and therefore identical
on every platform.  Floating-point derivations (uniforms, normals) apply
IEEE-754 double operations to that stream in a fixed order.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidArgumentError

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_U64 = np.uint64(0xFFFFFFFFFFFFFFFF)

ALGORITHM = "splitmix64-ctr"


def _mix64(t: np.ndarray | np.uint64) -> np.ndarray | np.uint64:
    t = (t ^ (t >> np.uint64(30))) * _MIX1
    t = (t ^ (t >> np.uint64(27))) * _MIX2
    return t ^ (t >> np.uint64(31))


def _hash_label(label: str) -> np.uint64:
    # FNV-1a over the UTF-8 bytes, then finalized; only has to decorrelate.
    h = np.uint64(0xCBF29CE484222325)
    prime = np.uint64(0x100000001B3)
    for b in label.encode("utf-8"):
        h = (h ^ np.uint64(b)) * prime
    return np.uint64(_mix64(h))


class SeededRng:
    """Counter-mode PRNG (``splitmix64-ctr``), reproducible by seed.

    Instances are cheap; state is two 64-bit integers.  All drawing
    methods advance the counter by the number of raw 64-bit words they
    consume, so interleaving block sizes does not change the stream.
    """

    algorithm = ALGORITHM

    def __init__(self, seed: int, _key: np.uint64 | None = None,
                 _counter: int = 0):
        if seed < 0 or seed > 0xFFFFFFFFFFFFFFFF:
            raise InvalidArgumentError("seed must fit in an unsigned 64-bit int")
        self.seed = int(seed)
        self._key = np.uint64(_mix64(np.uint64(seed))) if _key is None else _key
        self._counter = int(_counter)

    def substream(self, label: str) -> "SeededRng":
        """Independent child generator derived from a string label."""
        child_key = np.uint64(_mix64(self._key ^ _hash_label(label)))
        return SeededRng(self.seed, _key=child_key, _counter=0)

    def raw64(self, n: int) -> np.ndarray:
        """Next ``n`` raw 64-bit words as a uint64 array."""
        if n < 0:
            raise InvalidArgumentError("n must be non-negative")
        idx = np.arange(self._counter + 1, self._counter + n + 1, dtype=np.uint64)
        self._counter += n
        return np.asarray(_mix64(self._key + idx * _GOLDEN), dtype=np.uint64)

    def uniform(self, n: int, lo: float = 0.0, hi: float = 1.0) -> np.ndarray:
        """``n`` doubles uniform on ``[lo, hi)`` (53-bit resolution)."""
        u = (self.raw64(n) >> np.uint64(11)).astype(np.float64) * 2.0 ** -53
        if lo == 0.0 and hi == 1.0:
            return u
        return lo + u * (hi - lo)

    def normal(self, n: int, std: float = 1.0) -> np.ndarray:
        """``n`` centered Gaussians via Box-Muller on raw-word pairs."""
        pairs = (n + 1) // 2
        raw = self.raw64(2 * pairs)
        # u1 in (0, 1] keeps the log finite; u2 in [0, 1).
        u1 = ((raw[0::2] >> np.uint64(11)) + np.uint64(1)).astype(np.float64) * 2.0 ** -53
        u2 = (raw[1::2] >> np.uint64(11)).astype(np.float64) * 2.0 ** -53
        r = np.sqrt(-2.0 * np.log(u1))
        theta = (2.0 * np.pi) * u2
        out = np.empty(2 * pairs, dtype=np.float64)
        out[0::2] = r * np.cos(theta)
        out[1::2] = r * np.sin(theta)
        if std != 1.0:
            out *= std
        return out[:n]

    def integers(self, n: int, bound: int) -> np.ndarray:
        """``n`` int64 values uniform on ``[0, bound)``."""
        if bound <= 0:
            raise InvalidArgumentError("bound must be positive")
        u = self.uniform(n)
        idx = np.minimum((u * bound).astype(np.int64), bound - 1)
        return idx

    def shuffle_indices(self, n: int) -> np.ndarray:
        """Fisher-Yates permutation of ``range(n)``."""
        perm = np.arange(n, dtype=np.int64)
        if n < 2:
            return perm
        draws = self.uniform(n - 1)
        for i in range(n - 1, 0, -1):
            j = min(int(draws[n - 1 - i] * (i + 1)), i)
            perm[i], perm[j] = perm[j], perm[i]
        return perm

    def sample_indices(self, n: int, k: int) -> np.ndarray:
        """``k`` distinct indices from ``range(n)`` (order randomized)."""
        if k > n:
            raise InvalidArgumentError("cannot sample more indices than exist")
        return self.shuffle_indices(n)[:k]

    def choice_weighted(self, weights: np.ndarray) -> int:
        """One index drawn with probability proportional to ``weights``."""
        w = np.asarray(weights, dtype=np.float64)
        total = float(w.sum())
        if not np.isfinite(total) or total <= 0.0:
            raise InvalidArgumentError("weights must sum to a positive finite value")
        u = float(self.uniform(1)[0]) * total
        return int(np.searchsorted(np.cumsum(w), u, side="right").clip(0, len(w) - 1))
