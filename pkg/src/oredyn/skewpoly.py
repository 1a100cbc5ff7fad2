"""The skew polynomial ring D[x, sigma, delta].

Polynomials are stored by left coefficients, ``f = sum f_i x^i``, and
multiply through the commutation rule ``x a = sigma(a) x + delta(a)``.
"""

from __future__ import annotations

from fractions import Fraction

from flint import fmpq, fmpq_poly

from .algebra.literals import format_scalar, parse_scalar
from .algebra.rings import QUATERNION, RATIONAL, Quaternion, domain_of
from .algebra.twist import Twist, conjugate, genpows
from .errors import DomainMismatchError, HypothesisError

#: Degree of the zero polynomial.
NEG_INF = float("-inf")


class SkewPoly:
    """An immutable element of ``D[x, sigma, delta]``.

    >>> from oredyn.algebra import RatFunc, shift_difference_twist
    >>> tw = shift_difference_twist()
    >>> x, t = SkewPoly.x(tw), RatFunc.t()
    >>> x * SkewPoly.constant(tw, t) == SkewPoly(tw, [1, t + 1])
    True
    """

    __slots__ = ("twist", "coeffs")

    def __init__(self, twist: Twist, coeffs=()):
        dom = twist.domain
        cs = [dom.from_int(c) if isinstance(c, int) else dom.check(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.twist = twist
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, twist: Twist, coeffs: list) -> SkewPoly:
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.twist = twist
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def x(cls, twist: Twist) -> SkewPoly:
        dom = twist.domain
        return cls._raw(twist, [dom.zero(), dom.one()])

    @classmethod
    def constant(cls, twist: Twist, c) -> SkewPoly:
        return cls(twist, [c])

    @classmethod
    def one(cls, twist: Twist) -> SkewPoly:
        return cls._raw(twist, [twist.domain.one()])

    @classmethod
    def zero(cls, twist: Twist) -> SkewPoly:
        return cls._raw(twist, [])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.twist.domain.zero()

    def coeff(self, i: int):
        return self.coeffs[i] if i < len(self.coeffs) else self.twist.domain.zero()

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.twist.domain.one()

    def _same(self, other: SkewPoly):
        if not isinstance(other, SkewPoly):
            raise TypeError(f"expected SkewPoly, got {type(other).__name__}")
        if other.twist is not self.twist and other.twist != self.twist:
            raise DomainMismatchError("polynomials live in rings with different twists")

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.twist == other.twist and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return poly_add(self, other)

    def __neg__(self):
        return SkewPoly._raw(self.twist, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return poly_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, SkewPoly):
            return poly_mul(self, other)
        return NotImplemented

    def __rmul__(self, c):
        # scalar * f multiplies every coefficient on the left
        dom = self.twist.domain
        c = dom.from_int(c) if isinstance(c, int) else dom.check(c)
        return SkewPoly._raw(self.twist, [c * fi for fi in self.coeffs])

    def __call__(self, a):
        return poly_eval(self, a)

    def to_json(self) -> list[str]:
        return [format_scalar(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, twist: Twist, items) -> SkewPoly:
        if not isinstance(items, list):
            raise ValueError("polynomial must be a JSON array of scalar literals")
        return cls(twist, [parse_scalar(twist.domain, s) for s in items])

    def __repr__(self):
        return f"SkewPoly({self.to_json()!r}, {self.twist.sigma_kind}/{self.twist.delta_kind})"


def _check_scalar(f: SkewPoly, a):
    if not isinstance(a, f.twist.domain.cls):
        raise DomainMismatchError(f"point is {domain_of(a).name}, ring is over {f.twist.domain.name}")


def poly_add(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    f._same(g)
    a, b = f.coeffs, g.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return SkewPoly._raw(f.twist, out)


def sigma_lift(f: SkewPoly) -> SkewPoly:
    """Apply sigma to every coefficient."""
    tw = f.twist
    if tw.sigma_is_identity:
        return f
    return SkewPoly._raw(tw, [tw.sigma(c) for c in f.coeffs])


def delta_lift(f: SkewPoly) -> SkewPoly:
    """Apply delta to every coefficient."""
    tw = f.twist
    if tw.delta_is_zero:
        return SkewPoly.zero(tw)
    return SkewPoly._raw(tw, [tw.delta(c) for c in f.coeffs])


def _x_times(tw: Twist, h: list) -> list:
    """Coefficients of ``x * h`` given those of ``h``."""
    zero = tw.domain.zero()
    if tw.sigma_is_identity:
        out = [zero] + list(h)
    else:
        out = [zero] + [tw.sigma(c) for c in h]
    if not tw.delta_is_zero:
        for k, c in enumerate(h):
            out[k] = out[k] + tw.delta(c)
    return out


def _to_flint(cs) -> fmpq_poly:
    return fmpq_poly([fmpq(c.numerator, c.denominator) for c in cs])


def _from_flint(p: fmpq_poly) -> list[Fraction]:
    return [Fraction(int(c.p), int(c.q)) for c in p.coeffs()]


def _quaternion_convolve(fc, gc) -> list[Quaternion]:
    # central x: multiply the four component polynomials with flint
    a = [fmpq_poly([getattr(q, m) for q in fc]) for m in "wxyz"]
    b = [fmpq_poly([getattr(q, m) for q in gc]) for m in "wxyz"]
    w = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]
    x = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2]
    y = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1]
    z = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]
    n = len(fc) + len(gc) - 1
    zero = fmpq(0)
    parts = []
    for p in (w, x, y, z):
        cs = p.coeffs()
        parts.append(cs + [zero] * (n - len(cs)))
    return [Quaternion._raw(*cs) for cs in zip(*parts)]


def poly_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Product ``f g``, expanding ``x^i g`` one factor of ``x`` at a time."""
    f._same(g)
    tw = f.twist
    if not f.coeffs or not g.coeffs:
        return SkewPoly.zero(tw)
    if tw.sigma_is_identity and tw.delta_is_zero:
        if tw.domain is RATIONAL:
            return SkewPoly._raw(tw, _from_flint(_to_flint(f.coeffs) * _to_flint(g.coeffs)))
        if tw.domain is QUATERNION:
            return SkewPoly._raw(tw, _quaternion_convolve(f.coeffs, g.coeffs))
    out = [tw.domain.zero()] * (len(f.coeffs) + len(g.coeffs) - 1)
    if tw.sigma_is_identity and tw.delta_is_zero:
        gc = g.coeffs
        for i, fi in enumerate(f.coeffs):
            if fi:
                for j, gj in enumerate(gc):
                    out[i + j] += fi * gj
        return SkewPoly._raw(tw, out)
    row = list(g.coeffs)  # x^i g
    last = len(f.coeffs) - 1
    for i, fi in enumerate(f.coeffs):
        if fi:
            for k, c in enumerate(row):
                if c:
                    out[k] += fi * c
        if i < last:
            row = _x_times(tw, row)
    return SkewPoly._raw(tw, out)


def poly_right_divide(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """``(q, r)`` with ``f = q g + r`` and ``deg r < deg g``; ``g`` must be monic."""
    f._same(g)
    tw = f.twist
    if not g.is_monic():
        raise ValueError("right division needs a monic divisor")
    d = g.degree
    n = len(f.coeffs) - 1
    zero = tw.domain.zero()
    if n < d:
        return SkewPoly.zero(tw), f
    # rows[k] = x^k g, leading coefficient sigma^k(1) = 1
    rows = [list(g.coeffs)]
    for _ in range(n - d):
        rows.append(_x_times(tw, rows[-1]))
    r = list(f.coeffs)
    q = [zero] * (n - d + 1)
    for m in range(n, d - 1, -1):
        c = r[m]
        if not c:
            continue
        k = m - d
        q[k] = c
        for idx, gc in enumerate(rows[k]):
            if gc:
                r[idx] = r[idx] - c * gc
    return SkewPoly._raw(tw, q), SkewPoly._raw(tw, r[:d])


def poly_eval(f: SkewPoly, a):
    """``f(a) = sum f_i a^[i]``."""
    _check_scalar(f, a)
    tw = f.twist
    total = tw.domain.zero()
    if not f.coeffs:
        return total
    for fi, p in zip(f.coeffs, genpows(tw, a, len(f.coeffs) - 1)):
        if fi:
            total = total + fi * p
    return total


def eval_via_remainder(f: SkewPoly, a):
    """``f(a)`` as the remainder of right division by ``x - a``."""
    _check_scalar(f, a)
    tw = f.twist
    divisor = SkewPoly._raw(tw, [-a, tw.domain.one()])
    _, r = poly_right_divide(f, divisor)
    return r.coeff(0)


def product_eval(p: SkewPoly, q: SkewPoly, a):
    """``(pq)(a)`` through the product formula: ``p(a^{q(a)}) q(a)``, or 0 when ``q(a) = 0``."""
    p._same(q)
    _check_scalar(p, a)
    qa = poly_eval(q, a)
    if not qa:
        return p.twist.domain.zero()
    return poly_eval(p, conjugate(p.twist, a, qa)) * qa


def poly_genpows(f: SkewPoly, n: int) -> list[SkewPoly]:
    """``[f^[0], ..., f^[n]]`` with ``f^[k+1] = sigma(f^[k]) f + delta(f^[k])``."""
    out = [SkewPoly.one(f.twist)]
    for _ in range(n):
        p = out[-1]
        out.append(poly_mul(sigma_lift(p), f) + delta_lift(p))
    return out


def poly_genpow(f: SkewPoly, n: int) -> SkewPoly:
    if n < 0:
        raise ValueError("generalized power needs n >= 0")
    return poly_genpows(f, n)[-1]


def compose(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Formal composition ``f o g = sum f_i g^[i]``."""
    f._same(g)
    tw = f.twist
    if not f.coeffs:
        return SkewPoly.zero(tw)
    out = []
    for fi, gp in zip(f.coeffs, poly_genpows(g, len(f.coeffs) - 1)):
        if not fi:
            continue
        term = gp.coeffs
        if len(out) < len(term):
            out.extend([tw.domain.zero()] * (len(term) - len(out)))
        for k, c in enumerate(term):
            if c:
                out[k] = out[k] + fi * c
    return SkewPoly._raw(tw, out)


def _require_commuting(tw: Twist):
    if not tw.commuting:
        raise HypothesisError("sigma and delta do not commute on this twist")


def check_extend_endo(f: SkewPoly, g: SkewPoly) -> bool:
    """Whether the coefficientwise sigma is multiplicative on ``f, g``."""
    f._same(g)
    _require_commuting(f.twist)
    return sigma_lift(poly_mul(f, g)) == poly_mul(sigma_lift(f), sigma_lift(g))


def check_extend_deriv(f: SkewPoly, g: SkewPoly) -> bool:
    """Whether the coefficientwise delta satisfies the twisted Leibniz law on ``f, g``."""
    f._same(g)
    _require_commuting(f.twist)
    lhs = delta_lift(poly_mul(f, g))
    rhs = poly_mul(sigma_lift(f), delta_lift(g)) + poly_mul(delta_lift(f), g)
    return lhs == rhs
