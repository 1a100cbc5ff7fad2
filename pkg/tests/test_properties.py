"""Property tests driven by hypothesis strategies over all three domains."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from oredyn.algebra import QUATERNION, RATFUNC, RATIONAL, Quaternion, RatFunc, conjugate, genpow, interchanges
from oredyn.algebra.literals import format_scalar, parse_scalar
from oredyn.instances import shipped_twists
from oredyn.skewpoly import SkewPoly, compose, eval_via_remainder, poly_eval, poly_right_divide, product_eval

small = st.fractions(min_value=-4, max_value=4, max_denominator=4)
ints = st.integers(-3, 3)

rationals = small
quaternions = st.builds(Quaternion, small, small, small, small)
ratfuncs = st.builds(
    lambda n, d: RatFunc(n, d if any(d) else [1]),
    st.lists(ints, min_size=1, max_size=3),
    st.lists(ints, min_size=1, max_size=2),
)
SCALARS = {RATIONAL: rationals, RATFUNC: ratfuncs, QUATERNION: quaternions}
TWISTS = [tw for d in (RATIONAL, RATFUNC, QUATERNION) for tw in shipped_twists(d).values()]


@st.composite
def twisted(draw, max_degree=3):
    tw = draw(st.sampled_from(TWISTS))
    scal = SCALARS[tw.domain]
    poly = lambda: SkewPoly(tw, draw(st.lists(scal, max_size=max_degree + 1)))  # noqa: E731
    return tw, poly, scal


SETTINGS = settings(max_examples=60, deadline=None)


@SETTINGS
@given(st.one_of(rationals, quaternions, ratfuncs))
def test_scalar_literal_round_trip(v):
    dom = {Fraction: RATIONAL, RatFunc: RATFUNC, Quaternion: QUATERNION}[type(v)]
    assert parse_scalar(dom, format_scalar(v)) == v


@SETTINGS
@given(st.data())
def test_remainder_theorem(data):
    tw, poly, scal = data.draw(twisted())
    f, a = poly(), data.draw(scal)
    fa = poly_eval(f, a)
    assert fa == eval_via_remainder(f, a)
    x_minus_a = SkewPoly(tw, [-a, 1])
    q, r = poly_right_divide(f - SkewPoly.constant(tw, fa), x_minus_a)
    assert not r and q * x_minus_a == f - SkewPoly.constant(tw, fa)


@SETTINGS
@given(st.data())
def test_product_formula_and_degree(data):
    tw, poly, scal = data.draw(twisted(2))
    p, q, a = poly(), poly(), data.draw(scal)
    assert product_eval(p, q, a) == poly_eval(p * q, a)
    assert (p * q).degree == p.degree + q.degree


@SETTINGS
@given(st.data())
def test_composition_units_and_evaluation(data):
    tw, poly, scal = data.draw(twisted(2))
    f, a = poly(), data.draw(scal)
    x = SkewPoly.x(tw)
    assert compose(f, x) == f == compose(x, f)
    assert compose(f, SkewPoly.constant(tw, a)) == SkewPoly.constant(tw, poly_eval(f, a))


@SETTINGS
@given(st.data())
def test_x_power_evaluates_to_genpow(data):
    tw, _, scal = data.draw(twisted())
    a, n = data.draw(scal), data.draw(st.integers(0, 5))
    xn = SkewPoly(tw, [0] * n + [1])
    assert poly_eval(xn, a) == genpow(tw, a, n)


@SETTINGS
@given(st.data())
def test_self_conjugate_power(data):
    tw, _, scal = data.draw(twisted())
    a = data.draw(scal.filter(bool))
    assert interchanges(tw, a, a)
    c = conjugate(tw, a, a)
    for n in range(5):
        assert genpow(tw, c, n) * a == genpow(tw, a, n + 1)
