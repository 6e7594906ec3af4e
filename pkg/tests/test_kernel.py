import pytest

from qwalk.closedforms import reverse_kreweras as rk
from qwalk.closedforms.common import kreweras_t
from qwalk.kernel import canonical_factorization, kernel_coeffs, kernel_from_steps, y_roots
from qwalk.series import Laurent, Series
from qwalk.stepset import CANONICAL, StepSet

X = Laurent.monomial(1, 1, 0)


@pytest.mark.parametrize("k", range(1, 12))
def test_quadratic_form_equals_step_form(k):
    s = CANONICAL[k]
    assert kernel_coeffs(s).kernel().agrees(kernel_from_steps(s), 3)


@pytest.mark.parametrize("k", range(5, 12))
def test_root_residuals_vanish(k):
    roots = y_roots(CANONICAL[k], 20)
    for name, resid in roots.residuals().items():
        assert resid.is_zero(19), name


def test_small_root_has_positive_valuation():
    roots = y_roots(CANONICAL[10], 10)
    assert roots.y0.val >= 1


def test_roots_need_up_and_down_steps():
    with pytest.raises(ValueError):
        y_roots(StepSet.of("N", "NE", "E"), 5)


def test_factorisation_of_reverse_kreweras_discriminant():
    fac = canonical_factorization(rk.discriminant(), order=18, width_slope=2)
    assert fac.product().agrees(rk.discriminant(), 18)
    assert fac.plus.agrees(rk.delta_plus(20), 18)
    assert fac.minus.agrees(rk.delta_minus(20), 18)
    T = kreweras_t(20)
    assert fac.zero.sqrt().agrees((2 * T.inverse()).shift(1), 18)


def test_printed_minus_factor_differs():
    fac = canonical_factorization(rk.discriminant(), order=10)
    assert fac.minus.first_mismatch(rk.delta_minus(12, printed=True), 10) is not None


def test_factorisation_needs_unit_constant_term():
    with pytest.raises(ValueError):
        canonical_factorization(Series({0: 2 * X}, 4))
    with pytest.raises(ValueError):
        canonical_factorization(Series({0: 1, 1: X}))
