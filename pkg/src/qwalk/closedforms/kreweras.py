"""Kreweras walks ``{NE, S, W}``: the x-axis series and what follows from it."""
from __future__ import annotations

from fractions import Fraction

from ..series import Laurent, Series
from .common import HALF, X, XBAR, Y, kreweras_t, t

EIGHTH = Fraction(1, 8)


def kreweras_r(order: int, var: Laurent = X) -> Series:
    """``R(x) = 1/(2t) - 1/x - (1/T - 1/x) sqrt(1 - x T^2)`` to ``O(t^order)``.

    ``R(x) = t x Q(x, 0; t)``; ``var`` may be ``Y`` to get ``R(y)``.
    """
    work = order + 3
    T = kreweras_t(work)
    inv_var = var.inverse()
    root = (1 - T * T * var).sqrt()
    r = Series.const(HALF).shift(-1) - T.inverse() * root + (root - 1) * inv_var
    return r.truncate(order)


def kreweras_axis(order: int) -> Series:
    """``Q(x, 0; t) = R(x) / (t x)``; the poles at ``x = 0`` and ``t = 0`` must cancel."""
    r = kreweras_r(order + 1)
    for n, c in r.items():
        lo, _ = c.x_range()
        if n < 1 or lo < 1:
            raise ArithmeticError(f"closed form did not cancel: term {c} at t^{n}")
    return (r * XBAR).shift(-1).truncate(order)


def kreweras_origin(order: int) -> Series:
    """``Q(0, 0; t) = (4T - T^4) / (8t)``."""
    T = kreweras_t(order + 1)
    return ((4 * T - T ** 4) * EIGHTH).shift(-1).truncate(order)


def kreweras_origin_printed(order: int) -> Series:
    """``(4T - T^2) / (8t)``, as printed; disagrees with the walks from ``t^1`` on."""
    T = kreweras_t(order + 1)
    return ((4 * T - T * T) * EIGHTH).shift(-1).truncate(order)


def kreweras_complete(order: int) -> Series:
    """``(xy - R(x) - R(y)) / (xy - t(x + y + x^2 y^2))``."""
    r_x = kreweras_r(order + 1, X)
    r_y = kreweras_r(order + 1, Y)
    denom = Series({0: X * Y, 1: -(X + Y + X * X * Y * Y)})
    return ((X * Y - r_x - r_y) / denom).truncate(order)


def kreweras_counting(order: int) -> Series:
    """``W(t) = Q(1, 1; t) = (1 - 2 R(1)) / (1 - 3t)``."""
    r1 = kreweras_r(order + 1).at_x1()
    return ((1 - 2 * r1) / Series({0: 1, 1: -3})).truncate(order)


def kreweras_counting_radical(order: int, level_coefficient: int = -3) -> Series:
    """``(T(1 + c t) + 2t(T - 1) sqrt(1 - T^2)) / (t T (3t - 1))``.

    With ``c = -3`` this is the counting series; the printed table has ``c = -1``.
    """
    T = kreweras_t(order + 3)
    num = T * Series({0: 1, 1: level_coefficient}) + 2 * t * (T - 1) * (1 - T * T).sqrt()
    den = (T * Series({0: -1, 1: 3})).shift(1)
    return (num / den).truncate(order)

