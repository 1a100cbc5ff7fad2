import random

import pytest
import sympy as sp
from sympy.algebras.quaternion import Quaternion as SymQuaternion

from oredyn.algebra import QUATERNION, RATFUNC, RATIONAL, Quaternion, RatFunc
from oredyn.instances import shipped_twists
from oredyn.skewpoly import SkewPoly

T = sp.Symbol("t")

ALL_TWISTS = [(d.name, name, tw) for d in (RATIONAL, RATFUNC, QUATERNION) for name, tw in shipped_twists(d).items()]


def twist_id(item):
    return f"{item[0]}-{item[1]}"


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def t():
    return RatFunc.t()


@pytest.fixture
def ijk():
    return Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1)


def to_sympy(value):
    """Independent sympy image of a scalar, used as an arithmetic oracle."""
    if isinstance(value, RatFunc):
        num = sum(sp.Rational(c.numerator, c.denominator) * T**k for k, c in enumerate(value.numerator_coeffs()))
        den = sum(sp.Rational(c.numerator, c.denominator) * T**k for k, c in enumerate(value.denominator_coeffs()))
        return num / den
    if isinstance(value, Quaternion):
        return SymQuaternion(*(sp.Rational(c.numerator, c.denominator) for c in value.components()))
    return sp.Rational(value.numerator, value.denominator)


def sympy_equal(x, y) -> bool:
    if isinstance(x, SymQuaternion):
        return all(sp.simplify(p - q) == 0 for p, q in zip((x.a, x.b, x.c, x.d), (y.a, y.b, y.c, y.d)))
    return sp.simplify(x - y) == 0


def naive_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Oracle: expand x^i a by recursion on i, one commutation at a time."""
    tw = f.twist
    zero = tw.domain.zero()

    def x_pow_times(i, a):
        # x^i a as {power: coefficient}
        if i == 0:
            return {0: a}
        out = {}
        for k, c in x_pow_times(i - 1, tw.sigma(a)).items():
            out[k + 1] = out.get(k + 1, zero) + c
        for k, c in x_pow_times(i - 1, tw.delta(a)).items():
            out[k] = out.get(k, zero) + c
        return out

    acc = {}
    for i, fi in enumerate(f.coeffs):
        for j, gj in enumerate(g.coeffs):
            for k, c in x_pow_times(i, gj).items():
                acc[k + j] = acc.get(k + j, zero) + fi * c
    n = max(acc) + 1 if acc else 0
    return SkewPoly(tw, [acc.get(k, zero) for k in range(n)])


def commutative_oracle(coeffs, a, r, N):
    """Brute force for Q[x]: iterate a by ordinary evaluation in sympy."""
    X = sp.Symbol("X")
    poly = sp.Poly(list(reversed([sp.Rational(c.numerator, c.denominator) for c in coeffs])), X)
    orbit = [sp.Rational(a.numerator, a.denominator)]
    for _ in range(r * N):
        orbit.append(poly.eval(orbit[-1]))
    ret = orbit[r] == orbit[0]
    periodic = ret and all(orbit[n * r] == orbit[0] for n in range(1, N + 1))
    return ret, periodic


ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, title: str, passed: bool, detail: str) -> None:
    line = f"criterion {number:>2} [{'PASS' if passed else 'FAIL'}] {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
