"""Seeded random scalars for law checks and fuzzing."""

from __future__ import annotations

import random
from fractions import Fraction

from .rings import QUATERNION, RATFUNC, RATIONAL, Domain, Quaternion, RatFunc


def random_rational(rng: random.Random, height: int = 5) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def _random_int_poly(rng: random.Random, degree: int, height: int) -> list[int]:
    return [rng.randint(-height, height) for _ in range(degree + 1)]


def random_scalar(domain: Domain, rng: random.Random, nonzero: bool = False, size: int = 1):
    """Draw a small random element; ``size`` scales degrees and heights."""
    while True:
        if domain is RATIONAL:
            value = random_rational(rng, 4 * size)
        elif domain is QUATERNION:
            value = Quaternion(*(random_rational(rng, 3 * size) for _ in range(4)))
        elif domain is RATFUNC:
            num = _random_int_poly(rng, rng.randint(0, 2 * size), 3)
            if rng.random() < 0.5:
                den = [1]
            else:
                den = _random_int_poly(rng, rng.randint(1, size), 3)
                if not any(den):
                    den = [1]
            value = RatFunc(num, den)
        else:
            raise ValueError(f"unknown domain {domain!r}")
        if value or not nonzero:
            return value
