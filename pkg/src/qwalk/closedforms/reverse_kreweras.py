"""Reverse Kreweras walks ``{N, E, SW}`` by the algebraic kernel method.

The production path is the final closed form for ``Q(x, 0)``; the intermediate
identities of the derivation are exposed as separate checks.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..kernel import Factorization, canonical_factorization
from ..series import Series
from .common import HALF, QUARTER, X, XBAR, Y, YBAR, kreweras_t, t
from .kreweras import kreweras_origin


def origin_series(order: int) -> Series:
    """``Q(0, 0; t)``: loops are reversible, so this equals the Kreweras origin series."""
    return kreweras_origin(order)


def u_series(order: int, sign: int = 1) -> Series:
    """``U = 1 - x T (1 + T^3/4) + sign * x^2 T^2/4``; the printed factor has ``sign = -1``."""
    T = kreweras_t(order)
    return 1 - T * (1 + T ** 3 * QUARTER) * X + T * T * QUARTER * sign * X * X


def axis_series(order: int) -> Series:
    """``Q(x, 0; t)`` from
    ``2Q(x,0) = Q(0,0) + (-2x/(Tt) (1 - T^2/(2x)) + 1/(tx)) sqrt(U) + (1 - tx - t/x^2) x / t^2``.
    """
    work = order + 4
    T = kreweras_t(work)
    root = u_series(work).sqrt()
    coeff = (-2 * X * T.inverse() + T + Series.const(XBAR)).shift(-1)
    tail = Series({0: X, 1: -X * X - XBAR}).shift(-2)
    total = origin_series(work) + coeff * root + tail
    return (total * HALF).truncate(order)


def s_series(order: int, printed: bool = False, var=X) -> Series:
    """``S(x) = t Q(x, 0) - t Q(0, 0)/2`` in closed form.

    ``S = (-2x/T (1 - T^2/(2x)) + 1/x) sqrt(U)/2 + (1 - tx - t/x^2) x/(2t)``.
    ``printed=True`` uses ``1/(tx)`` in place of ``1/x``.
    """
    work = order + 4
    T = kreweras_t(work)
    root = u_series(work).sqrt()
    extra = Series.const(XBAR).shift(-1) if printed else Series.const(XBAR)
    coeff = -2 * X * T.inverse() + T + extra
    tail = Series({0: X, 1: -X * X - XBAR}).shift(-1)
    s = ((coeff * root + tail) * HALF).truncate(order)
    return s if var is X else s.x_to_y()


KERNEL = Series({0: X * Y, 1: -(X * X * Y + X * Y * Y + 1)})


def complete_series(order: int, printed: bool = False) -> Series:
    """``Q(x, y) = (xy - S(x) - S(y)) / (xy - t(x^2 y + x y^2 + 1))``."""
    s_x = s_series(order + 1, printed)
    s_y = s_x.x_to_y()
    return ((X * Y - s_x - s_y) / KERNEL).truncate(order)


def counting_radical(order: int, printed: bool = True) -> Series:
    """``(A sqrt((1-T)(1+T^2/4+T^3/4)) + B) / (tT(3t-1))``.

    Printed: ``A = T^2 t + T - 2t``, ``B = T + Tt``.  Corrected:
    ``A = T^2 t + T t - 2t``, ``B = T - 3 T t``.
    """
    T = kreweras_t(order + 3)
    root = ((1 - T) * (1 + T * T * QUARTER + T ** 3 * QUARTER)).sqrt()
    if printed:
        a = T * T * t + T - 2 * t
        b = T + T * t
    else:
        a = T * T * t + T * t - 2 * t
        b = T - 3 * T * t
    den = (T * Series({0: -1, 1: 3})).shift(1)
    return ((a * root + b) / den).truncate(order)


# -- derivation checks --------------------------------------------------------------

def discriminant() -> Series:
    """``Delta = (1 - t/x)^2 - 4 t^2 x``."""
    return Series({0: 1, 1: -2 * XBAR, 2: XBAR * XBAR - 4 * X})


def delta_minus(order: int, printed: bool = False) -> Series:
    """``1 - xbar T (1 + T^3/4) + xbar^2 T^2/4`` (``printed`` flips the last sign)."""
    T = kreweras_t(order)
    sign = -1 if printed else 1
    return 1 - T * (1 + T ** 3 * QUARTER) * XBAR + T * T * QUARTER * sign * XBAR * XBAR


def delta_plus(order: int) -> Series:
    T = kreweras_t(order)
    return 1 - T * T * X


def factorization(order: int) -> Factorization:
    return canonical_factorization(discriminant(), order=order, width_slope=2)


def y0_root(order: int) -> Series:
    """``Y0 = (1 - t/x - sqrt(Delta)) / (2 t x)``."""
    root = discriminant().truncate(order + 2).sqrt()
    return ((Series({0: 1, 1: -XBAR}) - root) * (XBAR * HALF)).shift(-1).truncate(order)


@dataclass
class Slices:
    """Oracle series the derivation is checked against."""
    complete: Series
    axis: Series
    origin: Series
    diagonal: Series


def composite_identity_residual(sl: Slices, order: int) -> Series:
    """``xb yb Q(xb, yb) + y Q(xb, xy) - x Q(xy, yb)`` minus
    ``(xb yb + y - x - 2t R0(xb) + t R00) / Kbar`` with ``Kbar = 1 - t(xb + yb + xy)``.
    """
    q = sl.complete
    lhs = (q.subs_monomial((-1, 0), (0, -1)) * (XBAR * YBAR)
           + q.subs_monomial((-1, 0), (1, 1)) * Y
           - q.subs_monomial((1, 1), (0, -1)) * X)
    kbar = Series({0: 1, 1: -(XBAR + YBAR + X * Y)})
    r0_bar = sl.axis.bar_x()
    num = XBAR * YBAR + Y - X - (2 * r0_bar).shift(1) + sl.origin.shift(1)
    return (lhs - num / kbar).truncate(order)


def diagonal_identity_residual(sl: Slices, order: int) -> Series:
    """``-x Q_d(x)`` minus ``(2 Y0 - x - 2t R0(xb) + t R00) / sqrt(Delta)``."""
    root = discriminant().truncate(order + 2).sqrt()
    y0 = y0_root(order + 1)
    num = 2 * y0 - X - (2 * sl.axis.bar_x()).shift(1) + sl.origin.shift(1)
    return (-(sl.diagonal * X) - num / root).truncate(order)


def negative_part_identity_residual(sl: Slices, order: int, fac: Factorization | None = None) -> Series:
    """``(-2t R0(xb) + t R00)/sqrt(D0 D-) - ((x - 2 Y0)/sqrt(D0 D-))^<=``."""
    fac = fac or factorization(order + 2)
    root = (fac.zero * fac.minus).sqrt()
    y0 = y0_root(order + 2)
    first = (-2 * sl.axis.bar_x() + sl.origin).shift(1) / root
    second = ((X - 2 * y0) / root).negative_part()
    return (first - second).truncate(order)


def x_part_residual(order: int, fac: Factorization | None = None) -> Series:
    """``(x/sqrt(D0 D-))^<= * sqrt(D0 D-) - x (1 - sqrt(D-))``."""
    fac = fac or factorization(order + 2)
    root = (fac.zero * fac.minus).sqrt()
    lhs = (X / root).negative_part() * root
    return (lhs - X * (1 - fac.minus.sqrt())).truncate(order)


def y0_part_residual(order: int, fac: Factorization | None = None,
                     printed: bool = False) -> Series:
    """``(2Y0/sqrt(D0 D-))^<=`` minus ``xb (1 - t xb)/t / sqrt(D0 D-) - ((xb/t) sqrt(D+))^<=``.

    ``printed=True`` uses ``(1 - t^2)`` in place of ``(1 - t xb)``.
    """
    fac = fac or factorization(order + 3)
    root = (fac.zero * fac.minus).sqrt()
    y0 = y0_root(order + 3)
    lhs = (2 * y0 / root).negative_part()
    factor = Series({0: 1, 2: -1}) if printed else Series({0: 1, 1: -XBAR})
    first = (factor * XBAR).shift(-1) / root
    second = (fac.plus.sqrt() * XBAR).shift(-1).negative_part()
    return (lhs - (first - second)).truncate(order)


def plus_part_residual(order: int, fac: Factorization | None = None) -> Series:
    """``((xb/t) sqrt(D+))^<= - (xb/t - T^2/(2t))``."""
    fac = fac or factorization(order + 3)
    T = kreweras_t(order + 3)
    lhs = (fac.plus.sqrt() * XBAR).shift(-1).negative_part()
    rhs = (Series.const(XBAR) - T * T * HALF).shift(-1)
    return (lhs - rhs).truncate(order)
