"""Deterministic random stream used by every sampler in this package.

The algorithm is fixed so results reproduce across runs, thread counts
and reimplementations:

* raw stream: splitmix64.  Output i (0-based) for seed s is
  ``mix64((s + (i + 1) * 0x9E3779B97F4A7C15) mod 2**64)`` where mix64 is
  the standard three-stage finalizer (shifts 30/27/31, multipliers
  0xBF58476D1CE4E5B9 and 0x94D049BB133111EB).
* bounded draws: rejection sampling.  For bound k, draw raw 64-bit words
  until one is below ``2**64 - (2**64 mod k)``, then reduce mod k.
* shuffles: Fisher-Yates from the top: for i = n-1 down to 1 swap
  position i with position ``randrange(i + 1)``.
* derived streams: substream ``index`` of master seed s starts at seed
  ``s XOR mix64(index)``.

Because output i depends only on (seed, i), blocks of raw words are
produced vectorized with numpy; the values are identical to the scalar
definition above.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_BLOCK = 512


def mix64(z: int) -> int:
    """splitmix64 finalizer on a 64-bit value."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


def derive_seed(master: int, index: int) -> int:
    """Seed of the index-th derived substream (index 0 is the master itself)."""
    return (master ^ mix64(index)) & _MASK64


class SplitMix64:
    """splitmix64 stream with bounded draws and Fisher-Yates shuffling."""

    __slots__ = ("seed", "_drawn", "_buf", "_pos")

    def __init__(self, seed: int):
        self.seed = seed & _MASK64
        self._drawn = 0  # raw words handed out so far
        self._buf: list[int] = []
        self._pos = 0

    def _refill(self):
        start = np.uint64((self.seed + (self._drawn + 1) * _GAMMA) & _MASK64)
        with np.errstate(over="ignore"):
            z = start + np.arange(_BLOCK, dtype=np.uint64) * np.uint64(_GAMMA)
            z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
            z = z ^ (z >> np.uint64(31))
        self._buf = z.tolist()
        self._pos = 0

    def next_u64(self) -> int:
        if self._pos >= len(self._buf):
            self._refill()
        value = self._buf[self._pos]
        self._pos += 1
        self._drawn += 1
        return value

    def randrange(self, bound: int) -> int:
        """Uniform int in [0, bound) by rejection on raw 64-bit words."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]

    def permutation(self, n: int) -> list[int]:
        items = list(range(n))
        self.shuffle(items)
        return items
