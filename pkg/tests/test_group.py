import pytest
from hypothesis import given, settings, strategies as st

from qwalk.group import (TABLE2, Fraction2, RationalMap, XV, YV, compose, generators,
                         finite_group_survey, group_order, has_generators, kernel_invariance_check,
                         maps_equal, match_table2, survey_csv, swap_variables)
from qwalk.stepset import CANONICAL, StepSet, all_triples

constructible = [s for s in all_triples() if has_generators(s)]


def test_normalisation_removes_common_factors():
    f = Fraction2.make(2 * XV * YV + 2 * XV, -4 * XV)
    assert str(f) == "(-y - 1)/(2)"
    assert str(Fraction2.make(XV ** 2 - 1, XV - 1)) == "x + 1"


@pytest.mark.parametrize("s", constructible, ids=str)
def test_generators_are_involutions(s):
    ident = RationalMap.identity()
    for tau in generators(s):
        assert maps_equal(compose(tau, tau), ident)


@pytest.mark.parametrize("s", constructible, ids=str)
def test_kernel_invariance(s):
    assert kernel_invariance_check(s)


@pytest.mark.parametrize("k,order", [(5, 6), (6, 6), (7, 6), (8, 4), (9, 4)])
def test_finite_orders(k, order):
    res = group_order(CANONICAL[k])
    assert res.finite and res.order == order


@pytest.mark.parametrize("k", [10, 11])
def test_infinite_groups_exceed_bounds_with_growing_degree(k):
    res = group_order(CANONICAL[k], 200, 64)
    assert not res.finite
    assert res.max_degree_seen > 64
    assert res.monotone_growth()


def test_kreweras_generators():
    tx, ty = generators(CANONICAL[5])
    assert str(tx) == "((1)/(x*y), y)"
    assert str(ty) == "(x, (1)/(x*y))"


def test_maps_equal_distinguishes():
    a = RationalMap(Fraction2.make(XV), Fraction2.make(YV))
    b = RationalMap(Fraction2.make(XV), Fraction2.make(YV + 1))
    assert maps_equal(a, a)
    assert not maps_equal(a, b)
    assert not maps_equal(a, b, prefilter=False)


def test_swap_variables_is_involution():
    for _, tx, _ in TABLE2:
        assert maps_equal(swap_variables(swap_variables(tx)), tx)


def test_every_table_row_is_matched_with_its_order():
    matches, _ = match_table2(completeness=False)
    assert len(matches) == 11
    for m in matches:
        assert m.members and m.ok, (m.row, m.orders)
    assert StepSet.of("NE", "S", "W") in matches[7].members


@pytest.mark.slow
def test_table_covers_every_finite_group():
    _, uncovered = match_table2()
    assert uncovered == []


def test_survey_consistency_on_triples():
    rows = finite_group_survey()
    assert len(rows) == 56
    assert all(r.consistent is not False for r in rows)
    csv_text = survey_csv(rows)
    assert csv_text.splitlines()[0].startswith("steps,singular,group_order_or_bound")
