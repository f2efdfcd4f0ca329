"""SplitMix64, the portable generator behind every seeded campaign.

State update and output (all arithmetic mod 2**64)::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

Sample ``i`` of a campaign with seed ``s`` draws from a generator whose
initial state is ``mix64(s ^ mix64(i))``, where ``mix64`` is the output
finalizer above applied without the increment.  Each sample therefore owns
its stream and results do not depend on how samples are split across
workers.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["SplitMix64", "mix64", "sample_rng", "parse_probability"]

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def bernoulli(self, p: Fraction) -> bool:
        """True with probability ``p``: compares one 64-bit draw against ``p * 2**64``."""
        return self.next_u64() * p.denominator < p.numerator << 64

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection of the biased top range."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound

    def shuffle(self, items: list) -> None:
        # Fisher-Yates from the top
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def sample_rng(seed: int, index: int) -> SplitMix64:
    return SplitMix64(mix64((seed & MASK64) ^ mix64(index)))


def parse_probability(p) -> Fraction:
    """Accept a ``Fraction``, an ``int`` pair, or a ``"NUM/DEN"`` string; must lie in (0, 1)."""
    if isinstance(p, tuple):
        p = Fraction(*p)
    elif isinstance(p, str):
        if "/" not in p:
            raise ValueError(f"probability must be written NUM/DEN, got {p!r}")
        num, den = p.split("/", 1)
        p = Fraction(int(num), int(den))
    else:
        p = Fraction(p)
    if not 0 < p < 1:
        raise ValueError(f"probability must lie strictly between 0 and 1, got {p}")
    return p
