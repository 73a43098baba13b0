"""Seeded genericity protocol.

The papers' "generic point" quantifiers are realized by explicit membership
tests: a sample is drawn from a seeded PRNG, tested against the degeneracy
conditions of the operation at hand, and discarded (with a logged reason) if
it fails.  Identical seeds reproduce identical sample streams.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateSampleError

MAX_RESAMPLES = 50


@dataclass
class DiscardLog:
    entries: list[tuple[str, str]] = field(default_factory=list)

    def add(self, witness: str, reason: str) -> None:
        self.entries.append((witness, reason))


class GenericSampler:
    """Rational samples with numerators/denominators uniform in [-100, 100]."""

    def __init__(self, seed: int):
        self.seed = seed
        self.rng = random.Random(seed)
        self.discards = DiscardLog()

    def fraction(self) -> Fraction:
        return Fraction(self.rng.randint(-100, 100), self.rng.randint(1, 100))

    def point(self) -> tuple[Fraction, Fraction]:
        return self.fraction(), self.fraction()

    def nonzero_int(self, lo: int = -9, hi: int = 9) -> int:
        while True:
            v = self.rng.randint(lo, hi)
            if v != 0:
                return v

    def sample_until(self, admissible, describe="sample", max_tries: int = MAX_RESAMPLES):
        """Draw points until `admissible(point)` returns (True, _) or the retry
        budget runs out; inadmissible draws are logged with their reason."""
        for _ in range(max_tries):
            p = self.point()
            ok, reason = admissible(p)
            if ok:
                return p
            self.discards.add(f"({p[0]},{p[1]})", reason)
        raise DegenerateSampleError(f"no admissible {describe} after {max_tries} tries")
