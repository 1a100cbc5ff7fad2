"""Formal and pointwise iteration, plus bounded checks of the fixed-point
and periodicity results for skew polynomials.

Every "for all n" statement is attested only up to an explicit bound, and
each report records the bounds it used.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields

from .algebra.literals import format_scalar
from .algebra.twist import DEFAULT_STABILITY_BOUND, conjugate, genpow, genpows, interchanges
from .errors import HypothesisError, ResourceError
from .skewpoly import SkewPoly, compose, poly_eval, poly_genpows

DEFAULT_MAX_COEFFS = 4096

MODE_THEOREM = "theorem-applies"
MODE_OBSERVED = "periodic-without-hypothesis"
MODE_NOT_PERIODIC = "not-periodic"


def formal_powers(f: SkewPoly, n: int, max_coeffs: int | None = DEFAULT_MAX_COEFFS):
    """Yield ``f^{o0} = x, f^{o1}, ..., f^{on}`` where ``f^{o(k+1)} = f o f^{ok}``.

    Raises :class:`ResourceError` before building a power with more than
    ``max_coeffs`` coefficients.
    """
    g = SkewPoly.x(f.twist)
    yield g
    d = f.degree
    for k in range(1, n + 1):
        if max_coeffs is not None and d > 1 and g.degree * d + 1 > max_coeffs:
            raise ResourceError(
                f"f^o{k} would have {g.degree * d + 1} coefficients (ceiling {max_coeffs})"
            )
        g = compose(f, g)
        yield g


def formal_power(f: SkewPoly, n: int, max_coeffs: int | None = DEFAULT_MAX_COEFFS) -> SkewPoly:
    if n < 0:
        raise ValueError("formal power needs n >= 0")
    for g in formal_powers(f, n, max_coeffs):
        pass
    return g


def formal_values(f: SkewPoly, a, n: int, max_coeffs: int | None = DEFAULT_MAX_COEFFS) -> list:
    """``[f^{o0}(a), ..., f^{on}(a)]``."""
    return [poly_eval(g, a) for g in formal_powers(f, n, max_coeffs)]


def naive_iterates(f: SkewPoly, a, n: int) -> list:
    out = [a]
    for _ in range(n):
        out.append(poly_eval(f, out[-1]))
    return out


def naive_iterate(f: SkewPoly, a, n: int):
    if n < 0:
        raise ValueError("iteration count must be >= 0")
    return naive_iterates(f, a, n)[-1]


@dataclass(frozen=True)
class OrbitReport:
    point: object
    formal: tuple
    naive: tuple
    agree_upto: int
    interchange_flags: tuple
    stability_bound: int

    def to_json(self) -> dict:
        return {
            "point": format_scalar(self.point),
            "steps": len(self.formal) - 1,
            "stability_bound": self.stability_bound,
            "formal": [format_scalar(v) for v in self.formal],
            "naive": [format_scalar(v) for v in self.naive],
            "agree_upto": self.agree_upto,
            "interchange_flags": list(self.interchange_flags),
        }


def formal_orbit(
    f: SkewPoly,
    a,
    N: int,
    stability_bound: int = DEFAULT_STABILITY_BOUND,
    max_coeffs: int | None = DEFAULT_MAX_COEFFS,
) -> OrbitReport:
    formal = formal_values(f, a, N, max_coeffs)
    naive = naive_iterates(f, a, N)
    agree = -1
    for u, v in zip(formal, naive):
        if u != v:
            break
        agree += 1
    flags = tuple(interchanges(f.twist, a, v, stability_bound) for v in formal)
    return OrbitReport(a, tuple(formal), tuple(naive), agree, flags, stability_bound)


def check_lemma_good(f: SkewPoly, a, N: int) -> bool:
    """Given ``f(a) = a``, check ``f^[n](a) == a^[n]`` for ``1 <= n <= N``."""
    if poly_eval(f, a) != a:
        raise HypothesisError("f(a) != a")
    polys = poly_genpows(f, N)
    powers = genpows(f.twist, a, N)
    return all(poly_eval(polys[n], a) == powers[n] for n in range(1, N + 1))


def check_fixed_point(f: SkewPoly, a, N: int, max_coeffs: int | None = DEFAULT_MAX_COEFFS) -> bool:
    """Given ``f(a) = a``, check ``f^{on}(a) == a`` for ``1 <= n <= N``."""
    if poly_eval(f, a) != a:
        raise HypothesisError("f(a) != a")
    values = formal_values(f, a, N, max_coeffs)
    return all(v == a for v in values[1:])


def check_phew(tw, a, b, N: int, stability_bound: int | None = None) -> bool:
    """Check ``(a^b)^[n] b == sigma(a^[n]) b + delta(a^[n])`` for ``0 <= n <= N``.

    Requires ``b != 0`` and that ``a`` interchanges with ``b`` (stability
    tested up to ``stability_bound``, default ``N``).
    """
    if not b:
        raise HypothesisError("b must be nonzero")
    if not interchanges(tw, a, b, N if stability_bound is None else stability_bound):
        raise HypothesisError("a does not interchange with b")
    lhs = genpows(tw, conjugate(tw, a, b), N)
    rhs = genpows(tw, a, N)
    return all(lhs[n] * b == tw.sigma(rhs[n]) * b + tw.delta(rhs[n]) for n in range(N + 1))


def check_cor1(f: SkewPoly, a, N: int, stability_bound: int = DEFAULT_STABILITY_BOUND) -> bool:
    """Given that ``a`` interchanges with ``f(a)``, check ``f^[n](a) == f(a)^[n]`` for ``1 <= n <= N``."""
    b = poly_eval(f, a)
    if not interchanges(f.twist, a, b, stability_bound):
        raise HypothesisError("a does not interchange with f(a)")
    polys = poly_genpows(f, N)
    powers = genpows(f.twist, b, N)
    return all(poly_eval(polys[n], a) == powers[n] for n in range(1, N + 1))


def check_thm1(
    f: SkewPoly,
    a,
    n: int,
    stability_bound: int = DEFAULT_STABILITY_BOUND,
    max_coeffs: int | None = DEFAULT_MAX_COEFFS,
) -> bool:
    """Check ``f^{on}(a) == f^{*n}(a)`` when ``a`` interchanges with either prefix of length ``n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    tw = f.twist
    naive = naive_iterates(f, a, n)
    if all(interchanges(tw, a, v, stability_bound) for v in naive[:n]):
        formal = formal_values(f, a, n, max_coeffs)
    else:
        formal = formal_values(f, a, n, max_coeffs)
        if not all(interchanges(tw, a, v, stability_bound) for v in formal[:n]):
            raise HypothesisError("a interchanges with neither the formal nor the naive prefix")
    return formal[n] == naive[n]


@dataclass
class PeriodicityCertificate:
    r: int
    bound: int
    stability_bound: int
    hypothesis_return: bool
    hypothesis_interchange_prefix: bool
    conclusion_periodic_upto: bool
    conclusion_orbit_interchange: bool
    orbit_checked_upto: int
    mode: str
    values: list = field(default_factory=list, repr=False)

    @property
    def sound(self) -> bool:
        """False only if both hypotheses hold but a bounded conclusion fails."""
        if self.hypothesis_return and self.hypothesis_interchange_prefix:
            return self.conclusion_periodic_upto and self.conclusion_orbit_interchange
        return True

    def to_json(self) -> dict:
        out = {fl.name: getattr(self, fl.name) for fl in fields(self)}
        out["values"] = [format_scalar(v) for v in self.values]
        return out


def verify_periodicity(
    f: SkewPoly,
    a,
    r: int,
    N: int,
    stability_bound: int = DEFAULT_STABILITY_BOUND,
    max_coeffs: int | None = DEFAULT_MAX_COEFFS,
) -> PeriodicityCertificate:
    """Check the hypotheses of the r-periodicity theorem and its conclusions up to ``n <= N``.

    ``values`` in the certificate holds ``f^{ok}(a)`` for every ``k`` that was
    computed. When ``f^{or}(a) != a`` the point is already not r-periodic and
    only the first ``r`` formal powers are built.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if N < 1:
        raise ValueError("bound N must be >= 1")
    tw = f.twist
    values = formal_values(f, a, r, max_coeffs)
    hyp_return = values[r] == a
    hyp_prefix = all(interchanges(tw, a, v, stability_bound) for v in values[:r])
    if hyp_return:
        gen = formal_powers(f, r * N, max_coeffs)
        values = [poly_eval(g, a) for g in gen]
        periodic = all(values[n * r] == a for n in range(1, N + 1))
    else:
        periodic = False
    last = len(values) - 1
    orbit_ok = all(interchanges(tw, a, v, stability_bound) for v in values[1:])
    if hyp_return and hyp_prefix:
        mode = MODE_THEOREM
    elif hyp_return and periodic:
        mode = MODE_OBSERVED
    else:
        mode = MODE_NOT_PERIODIC
    return PeriodicityCertificate(
        r=r,
        bound=N,
        stability_bound=stability_bound,
        hypothesis_return=hyp_return,
        hypothesis_interchange_prefix=hyp_prefix,
        conclusion_periodic_upto=periodic,
        conclusion_orbit_interchange=orbit_ok,
        orbit_checked_upto=last,
        mode=mode,
        values=values,
    )


def constant_adjusted(g: SkewPoly, a) -> SkewPoly:
    """``g - (g(a) - a)``, which has ``a`` as a fixed point."""
    shift = poly_eval(g, a) - a
    return g - SkewPoly.constant(g.twist, shift)


__all__ = [
    "DEFAULT_MAX_COEFFS",
    "MODE_NOT_PERIODIC",
    "MODE_OBSERVED",
    "MODE_THEOREM",
    "OrbitReport",
    "PeriodicityCertificate",
    "check_cor1",
    "check_fixed_point",
    "check_lemma_good",
    "check_phew",
    "check_thm1",
    "constant_adjusted",
    "formal_orbit",
    "formal_power",
    "formal_powers",
    "formal_values",
    "genpow",
    "naive_iterate",
    "naive_iterates",
    "verify_periodicity",
]
