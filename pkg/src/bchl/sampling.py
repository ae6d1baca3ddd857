"""Seeded random parameter points for identity testing.

Points are exact fractions k/m with 1 <= k < m <= 50 and random sign, so
every modulus lies in (0, 1).  Absolute values are kept pairwise distinct,
which keeps pole locations separated in the residue engine; remaining
genericity conditions (pole collisions, vanishing recursion denominators)
are handled by rejection: the caller retries with fresh draws.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .ct_engine import GenericityError
from .ring import ParameterPoint


def random_fraction(rng: random.Random, max_den: int = 50) -> Fraction:
    den = rng.randint(2, max_den)
    num = rng.randint(1, den - 1)
    sign = rng.choice((1, -1))
    return Fraction(sign * num, den)


def distinct_fractions(rng: random.Random, count: int, max_den: int = 50) -> list[Fraction]:
    """Fractions with pairwise distinct absolute values."""
    seen = set()
    out = []
    while len(out) < count:
        q = random_fraction(rng, max_den)
        if abs(q) not in seen:
            seen.add(abs(q))
            out.append(q)
    return out


def sample_symmetric_point(rng: random.Random, scaling_distinct: bool = False) -> ParameterPoint:
    vals = distinct_fractions(rng, 7 if scaling_distinct else 5)
    t, t0, t1, t2, t3 = vals[:5]
    if scaling_distinct:
        return ParameterPoint.symmetric(t, t0, t1, t2, t3, a=vals[5], b=vals[6])
    return ParameterPoint.symmetric(t, t0, t1, t2, t3)


def sample_nonsymmetric_point(rng: random.Random) -> ParameterPoint:
    t, a, b, c, d = distinct_fractions(rng, 5)
    return ParameterPoint.nonsymmetric(t, a, b, c, d)


def sample_application_point(rng: random.Random) -> tuple[Fraction, Fraction, Fraction]:
    """(s, a, b) with s a square root of the active t."""
    s, a, b = distinct_fractions(rng, 3, max_den=12)
    return s, a, b


def with_retries(rng: random.Random, sampler, body, attempts: int = 25):
    """Run body(point) on fresh sampled points until it stops raising
    GenericityError.  The rng stream makes the whole procedure
    deterministic for a fixed seed."""
    last = None
    for _ in range(attempts):
        point = sampler(rng)
        try:
            return body(point)
        except GenericityError as exc:
            last = exc
    raise GenericityError(f"no generic point found after {attempts} attempts: {last}")
