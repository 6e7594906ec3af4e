import pytest

from qwalk.closedforms import (asymptotic, axis_symmetric as ax, iterated_kernel as ik, kreweras,
                               reverse_kreweras as rk, report_passed, singular, table, tandem,
                               verify_class)
from qwalk.enumeration import complete_series, count_totals, count_walks, slice
from qwalk.series import Laurent, Series
from qwalk.stepset import CANONICAL, all_triples, is_singular, parse_stepset

N = 21


def oracle(k, n=N - 1):
    return count_walks(CANONICAL[k], n)


# -- registry ---------------------------------------------------------------------

@pytest.mark.parametrize("k", range(1, 12))
def test_verify_class_passes(k):
    report = verify_class(k)
    assert report["class"] == k
    failed = [c["name"] for c in report["checks"] if not c["pass"]]
    assert not failed
    assert report_passed(report)


def test_report_shape():
    check = verify_class(7)["checks"][0]
    assert set(check) >= {"name", "order_tested", "pass", "first_mismatch"}


# -- singular classes ---------------------------------------------------------------

@pytest.mark.parametrize("s", [s for s in all_triples() if is_singular(s)
                               and count_totals(s, 1)[1] > 0], ids=str)
def test_grammar_matches_counts(s):
    g = singular.grammar_system(s, 12)
    for resid in g.residuals().values():
        assert resid.is_zero(12)
    assert g.S.agrees(complete_series(count_walks(s, 11)))


def test_grammar_without_trailing_m_undercounts():
    s = CANONICAL[2]
    assert not singular.printed_grammar_series(s, 8).agrees(complete_series(count_walks(s, 7)))


def test_row2_complete_series_example():
    q = table.table_row_series(2, 12)[1]
    assert q.agrees(complete_series(count_walks(parse_stepset("NE,SW,N"), 11)))


def test_row1_t3_coefficient():
    assert table.table_row_series(1, 5)[0].scalars(4)[3] == 27


def test_rows_2_and_3_counting_series_are_exchanged():
    w2 = table.table_row_series(2, 31)[0]
    w3 = table.table_row_series(3, 31)[0]
    t2 = Series.from_list(count_totals(CANONICAL[2], 30))
    t3 = Series.from_list(count_totals(CANONICAL[3], 30))
    assert not w2.agrees(t2) and not w3.agrees(t3)
    assert w2.agrees(t3) and w3.agrees(t2)


@pytest.mark.parametrize("k", [1, 4, 5, 6, 7])
def test_counting_series_rows(k):
    w = table.table_row_series(k, 31)[0]
    assert w.scalars(31) == count_totals(CANONICAL[k], 30)


# -- Kreweras ------------------------------------------------------------------------

def test_kreweras_axis_start():
    q = kreweras.kreweras_axis(4)
    x = Laurent.monomial(1, 1, 0)
    assert q.agrees(Series({0: 1, 2: x, 3: 2}, 4))


def test_kreweras_axis_matches_oracle():
    assert kreweras.kreweras_axis(N).agrees(slice(oracle(5), "xaxis"))


def test_kreweras_origin_erratum():
    origin = slice(oracle(5), "origin")
    assert kreweras.kreweras_origin(N).agrees(origin)
    mm = kreweras.kreweras_origin_printed(N).first_mismatch(origin)
    assert mm is not None and mm[0] == 1


def test_kreweras_counting_radical_coefficient():
    totals = Series.from_list(count_totals(CANONICAL[5], 30))
    assert kreweras.kreweras_counting_radical(31).agrees(totals)
    assert not kreweras.kreweras_counting_radical(31, level_coefficient=-1).agrees(totals)


# -- reverse Kreweras -----------------------------------------------------------------

def test_reverse_kreweras_axis_and_complete():
    w = oracle(6)
    assert rk.axis_series(N).agrees(slice(w, "xaxis"))
    assert rk.complete_series(N).agrees(complete_series(w))
    assert not rk.complete_series(N, printed=True).agrees(complete_series(w))


def test_reverse_kreweras_origin_is_kreweras_origin():
    assert rk.origin_series(N).agrees(slice(oracle(6), "origin"))
    assert rk.origin_series(8).scalars(7) == [1, 0, 0, 2, 0, 0, 16]


def test_reverse_kreweras_derivation_residuals():
    w = oracle(6)
    sl = rk.Slices(complete_series(w), slice(w, "xaxis"), slice(w, "origin"), slice(w, "diagonal"))
    fac = rk.factorization(N + 3)
    assert rk.composite_identity_residual(sl, N).is_zero(N)
    assert rk.diagonal_identity_residual(sl, N).is_zero(N)
    assert rk.negative_part_identity_residual(sl, N, fac).is_zero(N)
    assert rk.x_part_residual(N, fac).is_zero(N)
    assert rk.y0_part_residual(N, fac).is_zero(N)
    assert rk.plus_part_residual(N, fac).is_zero(N)
    assert not rk.y0_part_residual(N, fac, printed=True).is_zero(N)


def test_reverse_kreweras_counting_radical():
    totals = Series.from_list(count_totals(CANONICAL[6], 30))
    assert rk.counting_radical(31, printed=False).agrees(totals)
    assert not rk.counting_radical(31, printed=True).agrees(totals)


# -- tandem --------------------------------------------------------------------------

def test_hook_counts():
    assert tandem.tandem_count(1, 0, 1) == 1
    assert sum(tandem.tandem_count(5, i, j) for i in range(6) for j in range(6)) == 21
    assert tandem.shape_count(1, 2, 0) == 0
    assert tandem.hook_series(N).agrees(complete_series(oracle(7)))


def test_printed_endpoint_display_swaps_roles():
    assert tandem.printed_endpoint_count(1, 0, 1) != tandem.tandem_count(1, 0, 1)
    assert tandem.printed_endpoint_count(1, 1, 0) == tandem.tandem_count(1, 0, 1)


def test_motzkin():
    assert tandem.motzkin_series(8).scalars(7) == [1, 1, 2, 4, 9, 21, 51]


def test_tableau_of_walk():
    assert tandem.tableau(["N", "SE", "N", "W"]) == [[1, 3], [2], [4]]
    with pytest.raises(ValueError):
        tandem.tableau_shape(["SE"])


# -- classes 8 and 9 -----------------------------------------------------------------

def test_h_coefficient_example():
    assert ax.h_coefficient(1, 2) == 1
    assert ax.h_coefficient(1, 1) == 0


def test_h_parity_erratum():
    h = ax.class8_h_from_axis(slice(oracle(8), "xaxis"))
    assert ax.h_series(N).agrees(h)
    assert not ax.h_series(N, parity="even").agrees(h)
    assert not ax.h_series(N, with_catalan=False).agrees(h)


def test_m_expansion():
    y = Laurent.monomial(1, 0, 1)
    yb = Laurent.monomial(1, 0, -1)
    assert ax.m_series(5).agrees(Series({1: yb, 2: 1, 3: y + yb ** 3, 4: y * y + 3 * yb ** 2}, 5))


def test_class8_complete_and_numerator_erratum():
    q = complete_series(oracle(8))
    assert ax.class8_complete(N).agrees(q)
    assert not ax.class8_complete(N, printed=True).agrees(q)


def test_class9_r_and_complete():
    w = oracle(9)
    assert ax.r_series(N).agrees(slice(w, "yaxis"))
    assert ax.r_series(3).scalars(1) == [1]
    assert ax.class9_complete(N).agrees(complete_series(w))
    assert not ax.class9_complete(N, printed=True).agrees(complete_series(w))


def test_class9_s_support():
    s = ax.s_series(12, full_range=False)
    for n, c in s.items():
        assert n % 2 == 1
        m = (n + 1) // 2
        for (i, j) in c.terms:
            assert i == 0 and 0 <= j <= m and (m - j) % 2 == 0


# -- class 10 ------------------------------------------------------------------------

def test_y1_at_one():
    assert ik.y_plus(5).at_x1().agrees(Series({1: 1, 3: 2}, 5))


def test_iterated_kernel_against_oracle():
    w = oracle(10, 25)
    assert ik.inverse_residual(N).is_zero(N)
    assert all(r.is_zero(N) for r in ik.reciprocal_residuals(8, N).values())
    assert ik.axis_series(N).agrees(slice(w, "xaxis"))
    assert ik.counting_series(26).scalars(26) == count_totals(CANONICAL[10], 25)


def test_iterated_kernel_reports_needed_terms():
    with pytest.raises(ValueError, match="needs 11 terms"):
        ik.iterated_kernel(3, 21)


def test_partial_sums_are_exact_to_twice_the_terms():
    w = oracle(10, 14)
    for terms in range(1, 7):
        assert ik.axis_series(2 * terms, terms).agrees(slice(w, "xaxis"), 2 * terms)


# -- asymptotics --------------------------------------------------------------------

def test_asymptotic_ratio():
    rep = asymptotic.transcendence_asymptotic()
    assert abs(rep.ratios[400] - 1) < 0.05
    assert rep.monotone()
    assert abs(rep.richardson - 1) < 0.01
    # regression values of this implementation
    assert rep.ratios[400] == pytest.approx(1.0003133317121988, rel=1e-12)
    assert rep.richardson == pytest.approx(0.9999983300282873, rel=1e-12)


def test_a_n_positive():
    assert all(ax.h_total(n) > 0 for n in range(1, 60))
    assert [ax.h_total(n) for n in range(1, 6)] == [1, 2, 6, 30, 140]
    h = ax.class8_h_from_axis(slice(oracle(8, 12), "xaxis")).at_x1()
    assert [h.coefficient(2 * n - 1) for n in range(1, 7)] == [ax.h_total(n) for n in range(1, 7)]
