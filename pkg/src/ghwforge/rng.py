"""Portable seeded generator so random searches replay bit-for-bit anywhere.

xorshift64* (Vigna 2014) on 64-bit unsigned state ``x``::

    x ^= x >> 12
    x ^= x << 25   (mod 2^64)
    x ^= x >> 27
    output = x * 0x2545F4914F6CDD1D   (mod 2^64)

The initial state is one splitmix64 step applied to the seed::

    z = (seed + 0x9E3779B97F4A7C15) mod 2^64
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2^64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2^64
    state = z ^ (z >> 31)      (replaced by 0x9E3779B97F4A7C15 if zero)

``below(n)`` rejects outputs ``>= 2^64 - (2^64 mod n)`` and returns ``r mod n``.
"""

from __future__ import annotations

from typing import Sequence

MASK = (1 << 64) - 1
_MULT = 0x2545F4914F6CDD1D
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(seed: int) -> int:
    z = (seed + _GOLDEN) & MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int) -> None:
        self.state = splitmix64(seed & MASK) or _GOLDEN

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK
        x ^= x >> 27
        self.state = x
        return (x * _MULT) & MASK

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n

    def sample(self, population: Sequence, size: int) -> list:
        """``size`` distinct items via a partial Fisher-Yates shuffle."""
        pool = list(population)
        if size > len(pool):
            raise ValueError("sample larger than population")
        for i in range(size):
            j = i + self.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:size]

    def choice(self, seq: Sequence):
        return seq[self.below(len(seq))]
