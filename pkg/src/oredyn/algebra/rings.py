"""Exact coefficient division rings: Q, Q(t) and the rational quaternions.

Rationals are plain :class:`fractions.Fraction` values. Rational functions and
quaternions are small immutable classes defined here. Every value is kept in
canonical form so that ``==`` is structural equality.

Mixing elements of two different rings raises :class:`DomainMismatchError`.
Python ``int`` is accepted by all three as the image of the integers.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral

from flint import fmpq, fmpq_poly

from ..errors import DomainMismatchError

__all__ = [
    "Domain",
    "RATIONAL",
    "RATFUNC",
    "QUATERNION",
    "DOMAINS",
    "RatFunc",
    "Quaternion",
    "domain_of",
    "scalar_arith",
]


def _fmpq(c) -> fmpq:
    if isinstance(c, fmpq):
        return c
    c = Fraction(c)
    return fmpq(c.numerator, c.denominator)


def _poly(p) -> fmpq_poly:
    if isinstance(p, fmpq_poly):
        return p
    if isinstance(p, (list, tuple)):
        return fmpq_poly([_fmpq(c) for c in p])
    return fmpq_poly([_fmpq(p)])


def _frac(c: fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


_T_PLUS_ONE = fmpq_poly([1, 1])
_Q0 = fmpq(0)


class RatFunc:
    """An element ``num/den`` of Q(t) with ``den`` monic and ``gcd(num, den) = 1``.

    ``num`` and ``den`` may be given as ints, Fractions, coefficient lists
    (constant term first) or :class:`flint.fmpq_poly`.

    >>> t = RatFunc.t()
    >>> (t * t - 1) / (t + 1) == t - 1
    True
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = _poly(num)
        den = _poly(den)
        if den == 0:
            raise ZeroDivisionError("rational function with zero denominator")
        if num == 0:
            num, den = fmpq_poly([]), fmpq_poly([1])
        else:
            g = num.gcd(den)
            if g != 1:
                num, den = num // g, den // g
            lc = den.coeffs()[-1]
            if lc != 1:
                num, den = num / lc, den / lc
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num: fmpq_poly, den: fmpq_poly) -> RatFunc:
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def t(cls) -> RatFunc:
        return cls._raw(fmpq_poly([0, 1]), fmpq_poly([1]))

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Integral):
            return RatFunc._raw(fmpq_poly([int(other)]), fmpq_poly([1]))
        if isinstance(other, (Fraction, Quaternion)):
            raise DomainMismatchError(
                f"cannot combine a rational function with {domain_of(other).name}"
            )
        return NotImplemented

    def numerator_coeffs(self) -> list[Fraction]:
        return [_frac(c) for c in self.num.coeffs()]

    def denominator_coeffs(self) -> list[Fraction]:
        return [_frac(c) for c in self.den.coeffs()]

    def is_polynomial(self) -> bool:
        return self.den == 1

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return RatFunc()
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._raw(self.num**n, self.den**n)

    def shift(self) -> RatFunc:
        """Substitute ``t + 1`` for ``t``."""
        return RatFunc._raw(self.num(_T_PLUS_ONE), self.den(_T_PLUS_ONE))

    def derivative(self) -> RatFunc:
        num = self.num.derivative() * self.den - self.num * self.den.derivative()
        return RatFunc(num, self.den * self.den)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Integral):
            return self.den == 1 and self.num == int(other)
        return NotImplemented

    def __hash__(self):
        return hash((tuple(self.num.coeffs()), tuple(self.den.coeffs())))

    def __reduce__(self):
        return (RatFunc, (self.numerator_coeffs(), self.denominator_coeffs()))

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def __repr__(self):
        from .literals import format_scalar

        return f"RatFunc({format_scalar(self)!r})"


class Quaternion:
    """``w + x i + y j + z k`` with rational components.

    >>> i, j, k = Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1)
    >>> j * k == i and k * j == -i
    True
    """

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0, x=0, y=0, z=0):
        # components are held as flint fmpq; components() hands out Fractions
        self.w = _fmpq(w)
        self.x = _fmpq(x)
        self.y = _fmpq(y)
        self.z = _fmpq(z)

    @classmethod
    def _raw(cls, w, x, y, z) -> Quaternion:
        obj = cls.__new__(cls)
        obj.w, obj.x, obj.y, obj.z = w, x, y, z
        return obj

    @staticmethod
    def _coerce(other):
        if isinstance(other, Quaternion):
            return other
        if isinstance(other, Integral):
            return Quaternion._raw(fmpq(int(other)), _Q0, _Q0, _Q0)
        if isinstance(other, (Fraction, RatFunc)):
            raise DomainMismatchError(f"cannot combine a quaternion with {domain_of(other).name}")
        return NotImplemented

    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (_frac(self.w), _frac(self.x), _frac(self.y), _frac(self.z))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Quaternion._raw(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion._raw(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Quaternion._raw(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a1, b1, c1, d1 = self.w, self.x, self.y, self.z
        a2, b2, c2, d2 = o.w, o.x, o.y, o.z
        return Quaternion._raw(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self

    def scale(self, c) -> Quaternion:
        """Multiply by a rational number (central, so the side does not matter)."""
        c = _fmpq(c)
        return Quaternion._raw(self.w * c, self.x * c, self.y * c, self.z * c)

    def conjugate(self) -> Quaternion:
        return Quaternion._raw(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> Fraction:
        return _frac(self._norm())

    def _norm(self) -> fmpq:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inverse(self) -> Quaternion:
        n = self._norm()
        if not n:
            raise ZeroDivisionError("inverse of zero quaternion")
        r = 1 / n
        return Quaternion._raw(self.w * r, -self.x * r, -self.y * r, -self.z * r)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = Quaternion(1)
        for _ in range(n):
            result = result * self
        return result

    def __bool__(self):
        return bool(self.w or self.x or self.y or self.z)

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return (
                self.w == other.w and self.x == other.x and self.y == other.y and self.z == other.z
            )
        if isinstance(other, Integral):
            return self.w == other and not (self.x or self.y or self.z)
        return NotImplemented

    def __hash__(self):
        return hash((self.w, self.x, self.y, self.z))

    def __reduce__(self):
        return (Quaternion, self.components())

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def __repr__(self):
        from .literals import format_scalar

        return f"Quaternion({format_scalar(self)!r})"


class Domain:
    """A tag for one of the shipped coefficient rings."""

    def __init__(self, name: str, cls: type, commutative: bool):
        self.name = name
        self.cls = cls
        self.commutative = commutative

    def zero(self):
        return self.cls(0)

    def one(self):
        return self.cls(1)

    def from_int(self, n: int):
        return self.cls(n)

    def contains(self, value) -> bool:
        return isinstance(value, self.cls)

    def check(self, value):
        if not isinstance(value, self.cls):
            raise DomainMismatchError(
                f"expected an element of {self.name}, got {type(value).__name__}"
            )
        return value

    def __repr__(self):
        return f"Domain({self.name!r})"

    def __reduce__(self):
        return (_domain_by_name, (self.name,))


RATIONAL = Domain("rational", Fraction, commutative=True)
RATFUNC = Domain("ratfunc", RatFunc, commutative=True)
QUATERNION = Domain("quaternion", Quaternion, commutative=False)
DOMAINS = {d.name: d for d in (RATIONAL, RATFUNC, QUATERNION)}


def _domain_by_name(name: str) -> Domain:
    return DOMAINS[name]


def domain_of(value) -> Domain:
    if isinstance(value, Fraction):
        return RATIONAL
    if isinstance(value, RatFunc):
        return RATFUNC
    if isinstance(value, Quaternion):
        return QUATERNION
    raise DomainMismatchError(f"{type(value).__name__} is not a scalar of any shipped domain")


def scalar_arith(op: str, a, b=None):
    """Dispatch one of ``add, sub, mul, neg, inv, eq`` after checking domain tags."""
    dom = domain_of(a)
    if op in ("neg", "inv"):
        if op == "neg":
            return -a
        if not a:
            raise ZeroDivisionError("inversion of zero")
        return 1 / a if dom is RATIONAL else a.inverse()
    if domain_of(b) is not dom:
        raise DomainMismatchError(f"cannot combine {dom.name} with {domain_of(b).name}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown operation {op!r}")


def inverse(a):
    """Two-sided inverse in any shipped domain."""
    if isinstance(a, Fraction):
        if not a:
            raise ZeroDivisionError("inversion of zero")
        return 1 / a
    return a.inverse()
