from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from pavoid.errors import PoleAtZero
from pavoid.ratfunc import (IntPoly, RatFunc, poly_gcd, rf_arith, rf_equal, series,
                            substitute_z_power)

Z = sympy.Symbol("z")

coeffs = st.lists(st.integers(-6, 6), min_size=1, max_size=6)
nonzero = coeffs.filter(lambda c: any(c))
ratfuncs = st.builds(RatFunc, coeffs, nonzero)


def to_sympy(f: RatFunc):
    num = sum(c * Z ** i for i, c in enumerate(f.num.coeffs))
    den = sum(c * Z ** i for i, c in enumerate(f.den.coeffs))
    return num / den


def test_canonical_form():
    f = RatFunc([0, 2, -2], [-4, 4])  # 2z(1-z) / (-4(1-z))
    assert f.num.coeffs == (0, -1) and f.den.coeffs == (2,)
    assert RatFunc([3], [6]) == RatFunc([1], [2])
    assert RatFunc([0], [5]) == RatFunc.zero()


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RatFunc([1], [0])
    with pytest.raises(ZeroDivisionError):
        RatFunc.const(1) / RatFunc.zero()


def test_geometric_series():
    assert series(RatFunc.geometric(3), 10) == [0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0]
    assert series(RatFunc([1], [1, -1]), 4) == [1, 1, 1, 1, 1]


def test_series_fraction_and_pole():
    assert series(RatFunc([1], [2, -1]), 2) == [Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]
    with pytest.raises(PoleAtZero):
        series(RatFunc([1], [0, 1]), 3)


def test_parse():
    f = RatFunc.parse("1/((1-z)*(1-z^2))")
    assert f.den.coeffs == (1, -1, -1, 1)
    assert RatFunc.parse("z/2 + 1/3") == RatFunc([2, 3], [6])


def test_substitution():
    f = RatFunc([1], [1, -1])
    assert substitute_z_power(f, 3) == RatFunc([1], [1, 0, 0, -1])


def test_json_round_trip():
    f = RatFunc.parse("-z*(z^7 - 2*z^5 + z^3 + z^2 - z - 1)/((z-1)^4*(z+1)^2*(z^2+z+1))")
    assert RatFunc.from_json(f.to_json()) == f


def test_intpoly():
    p = IntPoly([1, -1])
    assert (p ** 3).coeffs == (1, -3, 3, -1)
    assert p(5) == -4
    assert str(IntPoly([0, 2, 0, -1])) == "2*z - z^3"


def test_gcd():
    a = (IntPoly([1, -1]) ** 2 * IntPoly([1, 1])).coeffs
    b = (IntPoly([1, -1]) * IntPoly([2, 1])).coeffs
    assert poly_gcd(a, b) == (-1, 1)


@settings(max_examples=150, deadline=None)
@given(ratfuncs, ratfuncs, st.sampled_from(["add", "sub", "mul", "div"]))
def test_field_ops_match_sympy(a, b, op):
    if op == "div" and b.is_zero():
        return
    got = rf_arith(a, b, op)
    sa, sb = to_sympy(a), to_sympy(b)
    want = {"add": sa + sb, "sub": sa - sb, "mul": sa * sb, "div": sa / sb}[op]
    assert sympy.cancel(to_sympy(got) - want) == 0


@settings(max_examples=150, deadline=None)
@given(ratfuncs, ratfuncs)
def test_equality_is_structural(a, b):
    assert (a == b) == rf_equal(a, b)
    assert rf_equal(a * b / b, a) if not b.is_zero() else True


@settings(max_examples=40, deadline=None)
@given(ratfuncs.filter(lambda f: f.den.coeffs[0] != 0))
def test_series_matches_sympy(f):
    got = series(f, 8)
    want = sympy.series(to_sympy(f), Z, 0, 9).removeO()
    for i, c in enumerate(got):
        assert sympy.Rational(c.numerator, c.denominator) == want.coeff(Z, i)


@settings(max_examples=100, deadline=None)
@given(ratfuncs)
def test_lowest_denominator_coefficient_positive(f):
    assert next(c for c in f.den.coeffs if c) > 0
