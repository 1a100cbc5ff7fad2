"""Seeded generators for polynomials, hypothesis-satisfying instances and the
shipped twist families. Used by the law suite, the CLI and the tests."""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra.rings import QUATERNION, RATFUNC, RATIONAL, Domain, Quaternion
from .algebra.sampling import random_rational, random_scalar
from .algebra.twist import (
    DEFAULT_STABILITY_BOUND,
    Twist,
    derivation_twist,
    identity_twist,
    inner_twist,
    interchanges,
    shift_difference_twist,
    shift_twist,
)
from .dynamics import constant_adjusted
from .skewpoly import SkewPoly

U_DEFAULT = Quaternion(1, 1, 0, 0)


def shipped_twists(domain: Domain) -> dict[str, Twist]:
    """Named twist families per domain, including one non-commuting quaternion pair."""
    if domain is RATIONAL:
        return {"identity": identity_twist(RATIONAL)}
    if domain is RATFUNC:
        return {
            "identity": identity_twist(RATFUNC),
            "shift": shift_twist(),
            "shift-difference": shift_difference_twist(),
            "derivative": derivation_twist(),
        }
    if domain is QUATERNION:
        i, j = Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0)
        return {
            "identity": identity_twist(QUATERNION),
            "inner-sigma": inner_twist(u=U_DEFAULT),
            "inner-delta": inner_twist(c=i),
            "inner-commuting": inner_twist(u=U_DEFAULT, c=U_DEFAULT),
            "inner-mixed": inner_twist(u=U_DEFAULT, c=j),
        }
    raise ValueError(f"unknown domain {domain!r}")


def random_integral(domain: Domain, rng: random.Random, height: int = 2):
    """A small element with integer entries, which keeps formal powers compact."""
    if domain is RATIONAL:
        return Fraction(rng.randint(-height, height))
    if domain is QUATERNION:
        return Quaternion(*(rng.randint(-height, height) for _ in range(4)))
    from .algebra.rings import RatFunc

    return RatFunc([rng.randint(-height, height) for _ in range(rng.randint(1, 2))])


def random_poly(tw: Twist, rng: random.Random, degree: int, integral: bool = False) -> SkewPoly:
    """A polynomial of exact degree ``degree`` (nonzero leading coefficient)."""
    draw = random_integral if integral else random_scalar
    coeffs = [draw(tw.domain, rng) for _ in range(degree)]
    lead = draw(tw.domain, rng)
    while not lead:
        lead = draw(tw.domain, rng)
    return SkewPoly(tw, coeffs + [lead])


def fixed_point_instance(tw: Twist, rng: random.Random, degree: int = 2, integral: bool = False):
    """``(f, a)`` with ``f = g - (g(a) - a)`` for random ``g`` and ``a``, so ``f(a) = a``."""
    draw = random_integral if integral else random_scalar
    a = draw(tw.domain, rng)
    g = random_poly(tw, rng, degree, integral)
    return constant_adjusted(g, a), a


def interchange_proposals(tw: Twist, a, rng: random.Random):
    """Candidate partners ``b`` for ``a``: one random draw plus structured guesses.

    The structured guesses cover the solution families of the interchange
    equation for the shipped commuting twists, e.g. ``lambda (a + 1) - 1``
    for shift/difference and ``a + mu`` for derivations.
    """
    dom = tw.domain
    lam = random_rational(rng, 4)
    mu = random_rational(rng, 4)
    if not lam:
        lam = Fraction(1)
    c_lam, c_mu = _embed(dom, lam), _embed(dom, mu)
    yield random_scalar(dom, rng)
    yield c_lam * a
    yield a + c_mu
    yield c_lam * a + c_mu
    yield c_lam * (a + dom.one()) - dom.one()
    yield c_mu


def interchanging_pair(tw: Twist, rng: random.Random, stability_bound: int = DEFAULT_STABILITY_BOUND,
                       nonzero: bool = True, allow_equal: bool = False, max_tries: int = 200):
    """Rejection-sample ``(a, b)`` with ``a`` interchanging with ``b``.

    Returns ``None`` if no pair is accepted within ``max_tries`` draws of ``a``.
    """
    for _ in range(max_tries):
        a = random_scalar(tw.domain, rng)
        for b in interchange_proposals(tw, a, rng):
            if nonzero and not b:
                continue
            if not allow_equal and b == a:
                continue
            if interchanges(tw, a, b, stability_bound):
                return a, b
    return None


def _embed(domain: Domain, q: Fraction):
    if domain is RATIONAL:
        return q
    if domain is QUATERNION:
        return Quaternion(q)
    from .algebra.rings import RatFunc

    return RatFunc([q])
