from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qwalk.series import INF, Laurent, Series, T, newton_fixed_point, solve_fixed_point

X = Laurent.monomial(1, 1, 0)
Y = Laurent.monomial(1, 0, 1)
ORDER = 12

small = st.integers(-5, 5)
laurents = st.dictionaries(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), small,
                           max_size=4).map(Laurent)


@st.composite
def series(draw, order=ORDER, unit=False):
    coeffs = draw(st.dictionaries(st.integers(0, order - 1), laurents, max_size=5))
    if unit:
        coeffs[0] = Laurent.const(draw(st.sampled_from([1, 4, 9])))
    return Series(coeffs, order)


@given(series(), series())
def test_addition_commutes(f, g):
    assert (f + g).agrees(g + f)


@given(series(), series(), series())
@settings(max_examples=30)
def test_multiplication_is_associative(f, g, h):
    assert ((f * g) * h).agrees(f * (g * h))


@given(series(unit=True))
@settings(max_examples=40)
def test_inverse(f):
    one = f * f.inverse()
    assert one.agrees(Series.const(1), ORDER)


@given(series(unit=True))
@settings(max_examples=40)
def test_sqrt_squares_back(f):
    r = f.sqrt()
    assert (r * r).agrees(f)


def test_sqrt_of_one_minus_4t_is_catalan():
    r = Series({0: 1, 1: -4}).truncate(10).sqrt()
    cat = ((1 - r) * Fraction(1, 2)).shift(-1)
    assert cat.scalars(9) == [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_fixed_point_residual_is_zero():
    g = solve_fixed_point(lambda u: T * (2 + u ** 3), 20)
    assert g.prec == 20
    assert (g - T * (2 + g ** 3)).is_zero(20)
    assert g.scalars(8) == [0, 2, 0, 0, 8, 0, 0, 96]


def test_newton_matches_iteration():
    a = solve_fixed_point(lambda u: 1 + T * u * u, 16)
    b = newton_fixed_point(lambda u: u - 1 - T * u * u, lambda u: 1 - 2 * T * u, 16,
                           Series({0: 1}, 1))
    assert a.agrees(b, 16)


def test_fixed_point_detects_non_contracting_map():
    with pytest.raises(ArithmeticError):
        solve_fixed_point(lambda u: u + 1, 5)


def test_precision_tracks_minimum():
    f = Series({0: 1}, 5)
    g = Series({0: 2}, 8)
    assert (f + g).prec == 5
    assert (f * g).prec == 5
    assert Series.const(3).prec == INF


def test_exact_division_needs_precision():
    with pytest.raises(ValueError):
        Series.const(1) / Series({0: 1, 1: 1})


def test_substitutions():
    f = Series({1: X * Y + 2 * X, 2: Laurent.monomial(3, -1, 2)}, 5)
    assert f.swap_xy().swap_xy().agrees(f)
    assert f.at_1().scalars(3) == [0, 3, 3]
    assert f.at_y0().agrees(Series({1: 2 * X}, 5))


def test_compose_with_t_series():
    g = Series({1: X}, 6)            # x t
    f = Series({0: X * X}, 6)        # x^2
    assert f.compose(g, "x").agrees(Series({2: X * X}, 6))


def test_positive_and_negative_parts():
    f = Series({0: X + 1 + Laurent.monomial(1, -1, 0)}, 3)
    pos, zero, neg = f.split_x()
    assert (pos + zero + neg).agrees(f)
    assert f.positive_part().agrees(Series({0: X + 1}, 3))
    assert f.negative_part().agrees(Series({0: 1 + Laurent.monomial(1, -1, 0)}, 3))


def test_first_mismatch_reports_location():
    a = Series({2: 3 * X}, 5)
    b = Series({2: 4 * X}, 5)
    assert a.first_mismatch(b) == (2, 1, 0, 3, 4)


def test_json_round_trip():
    f = Series({0: 1, 3: Laurent({(1, -2): Fraction(1, 3)})}, 7)
    assert Series.from_json(f.to_json()).agrees(f)
