"""Seeded random instances.

The stream is SplitMix64 (Steele, Lea and Flood 2014) so that a seed gives
the same instance in any language.  Recipe, all arithmetic mod 2**64:

1. ``r_i, t_i`` for ``i = 0..n-1``, each drawn by ``below(bound)``.
2. Fisher-Yates shuffle of the job list, ``i`` from ``n-1`` down to ``1``,
   swapping ``i`` with ``below(i)``.
3. The first ``floor(zero_r * n)`` jobs get ``r = 0``.

``below(b)`` draws an integer uniform in ``0..b`` by rejecting outputs
``>= 2**64 - (2**64 % (b + 1))`` and returning ``x % (b + 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Instance

MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        span = bound + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            x = self.next()
            if x < limit:
                return x % span


@dataclass(frozen=True)
class GenSpec:
    n: int
    m: int
    r_max: int
    t_max: int
    zero_r_fraction: Fraction = Fraction(0)
    seed: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.r_max < 0 or self.t_max < 0:
            raise ValueError("duration bounds must be >= 0")
        frac = Fraction(self.zero_r_fraction)
        if not 0 <= frac <= 1:
            raise ValueError("zero_r_fraction must lie in [0, 1]")
        object.__setattr__(self, "zero_r_fraction", frac)
        if not 0 <= self.seed <= MASK:
            raise ValueError("seed must fit in 64 unsigned bits")


def generate(spec: GenSpec) -> Instance:
    rng = SplitMix64(spec.seed)
    jobs = []
    for _ in range(spec.n):
        r = rng.below(spec.r_max)
        t = rng.below(spec.t_max)
        jobs.append([r, t])
    for i in range(spec.n - 1, 0, -1):
        j = rng.below(i)
        jobs[i], jobs[j] = jobs[j], jobs[i]
    zeros = int(spec.zero_r_fraction * spec.n)
    for job in jobs[:zeros]:
        job[0] = 0
    return Instance(jobs, spec.m)
