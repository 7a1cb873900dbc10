"""Deterministic random number generation shared by the whole toolkit.

Everything random in this package (corpus sampling, noise injection,
splits, bootstrap resampling) draws from a single counter-based
generator, the splitmix64 finalizer applied to ``seed + k * GOLDEN`` for
output index k. That makes streams:

  * portable - no dependence on platform or library RNG internals
  * reproducible - the k-th draw is a pure function of (seed, k)
  * vectorizable - a whole stream materializes as one numpy expression
    that agrees bit-for-bit with the scalar generator

Substreams are derived from string tags with ``derive_seed`` so
independent pipeline stages never share a stream by accident.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
# FNV-1a 64-bit parameters, used only to absorb tag bytes in derive_seed.
_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def mix64(z: int) -> int:
    """splitmix64 finalizer: avalanche a 64-bit value."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


def derive_seed(seed: int, *tags: object) -> int:
    """Derive an independent substream seed from string-convertible tags.

    Each tag is absorbed byte-wise with FNV-1a, then avalanched, so
    ("a", "bc") and ("ab", "c") land on different substreams.
    """
    state = mix64(seed)
    for tag in tags:
        acc = _FNV_OFFSET
        for byte in str(tag).encode("utf-8"):
            acc = ((acc ^ byte) * _FNV_PRIME) & _MASK
        state = mix64(state ^ acc)
    return state


def stream_u64(seed: int, count: int, offset: int = 0) -> np.ndarray:
    """Vectorized draw of `count` outputs starting at stream position
    `offset`. Identical to `count` successive SplitMix64.next_u64 calls.
    """
    idx = np.arange(offset + 1, offset + count + 1, dtype=np.uint64)
    z = (np.uint64(seed & _MASK) + idx * np.uint64(_GOLDEN))
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


class SplitMix64:
    """Scalar counter-based generator over the same stream as stream_u64."""

    __slots__ = ("_seed", "_counter")

    def __init__(self, seed: int):
        self._seed = seed & _MASK
        self._counter = 0

    @property
    def position(self) -> int:
        """Number of 64-bit outputs consumed so far."""
        return self._counter

    def next_u64(self) -> int:
        self._counter += 1
        return mix64(self._seed + self._counter * _GOLDEN)

    def uniform(self) -> float:
        """Float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def randint(self, n: int) -> int:
        """Integer in [0, n). Plain modulo; bias is < n / 2**64."""
        if n <= 0:
            raise ValueError(f"randint upper bound must be positive, got {n}")
        return self.next_u64() % n

    def randint_range(self, lo: int, hi: int) -> int:
        """Integer in [lo, hi] inclusive."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.randint(hi - lo + 1)

    def uniform_range(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.uniform()

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates, descending, one draw per position."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, items: list, k: int) -> list:
        """k distinct items via a partial Fisher-Yates over a copy."""
        if k > len(items):
            raise ValueError(f"cannot sample {k} from {len(items)} items")
        pool = list(items)
        for i in range(k):
            j = i + self.randint(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]

    def choice(self, items: list):  # noqa: ANN201
        if not items:
            raise ValueError("cannot choose from an empty list")
        return items[self.randint(len(items))]
