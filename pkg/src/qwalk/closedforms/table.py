"""Counting and complete generating functions for the seven algebraic classes."""
from __future__ import annotations

from fractions import Fraction

from ..series import Laurent, Series
from . import kreweras, reverse_kreweras, tandem
from .common import X, Y, t

# Complete-series representatives per class, as written in the table.
TABLE_REPRESENTATIVES_ALL = {1: "N,NE,E", 2: "N,NE,SW", 3: "N,NE,SE", 4: "N,S,SE",
                             5: "NE,S,W", 6: "N,E,SW", 8: "N,SE,SW", 9: "NE,SE,W"}

LEVEL = Series({0: -1, 1: 3})  # 3t - 1


def _root(body: dict, order: int) -> Series:
    return Series(body).truncate(order + 3).sqrt()


def _counting_singular(k: int, order: int) -> Series:
    if k == 1:
        return (1 / Series({0: 1, 1: -3}, order + 1)).truncate(order)
    if k == 2:
        num = (1 - 4 * t - _root({0: 1, 2: -8}, order)) * Fraction(1, 4)
    elif k == 3:
        num = (1 - 3 * t - _root({0: 1, 1: -2, 2: -3}, order)) * Fraction(1, 2)
    else:
        num = (1 - 2 * t - _root({0: 1, 2: -8}, order)) * Fraction(1, 2)
    return (num.shift(-1) / LEVEL).truncate(order)


def _complete_singular(k: int, order: int) -> Series:
    work = order + 2
    if k == 1:
        return (1 / Series({0: 1, 1: -(X + Y + X * Y)}, work)).truncate(order)
    if k == 2:
        # -(-1 + yt + sqrt D) / (t (2t - yx + y^2 x t + yx sqrt D)), D = 1 - 2yt + t^2 y^2 - 4t^2
        root = _root({0: 1, 1: -2 * Y, 2: Y * Y - 4}, work)
        num = -(Series({0: -1, 1: Y}) + root)
        den = (Series({0: -X * Y, 1: 2 + X * Y * Y}) + root * (X * Y)).shift(1)
        return (num / den).truncate(order)
    if k == 3:
        # -(-1 + sqrt E) / (t (2xt - y + y sqrt E)(1 + x)), E = 1 - 4x t^2 - 4x^2 t^2
        root = _root({0: 1, 2: -4 * X - 4 * X * X}, work)
        den = (Series({0: -Y, 1: 2 * X}) + root * Y).shift(1)
        q = (1 - root) / den
        return q.map_coeffs(lambda c: c.divide_exact(1 + X)).truncate(order)
    # -(-1 + sqrt F) / (t (2t + 2xt - y + y sqrt F)), F = 1 - 4t^2 - 4x t^2
    # 1 - sqrt F is divisible by 1 + x; with G = (1 - sqrt F)/(1 + x), Q = G / (t (2t - yG))
    root = _root({0: 1, 2: -4 - 4 * X}, work)
    g = (1 - root).map_coeffs(lambda c: c.divide_exact(1 + X))
    return (g / (2 * t - g * Y).shift(1)).truncate(order)


def table_row_series(k: int, order: int) -> tuple[Series, Series | None]:
    """``(W, Q)`` for table row ``k`` (1..7), each to ``O(t^order)``.

    Rows 1-4 evaluate the radical expressions as printed.  Row 5 goes through
    ``R(x)`` and ``T``, row 6 through ``S(x)``, ``U`` and ``T``; both counting
    series are the complete series at ``x = y = 1``.  Row 7 uses the Motzkin form and
    the hook-length counts.
    """
    if k in (1, 2, 3, 4):
        return _counting_singular(k, order), _complete_singular(k, order)
    if k == 5:
        return kreweras.kreweras_counting(order), kreweras.kreweras_complete(order)
    if k == 6:
        q = reverse_kreweras.complete_series(order)
        return q.at_1(), q
    if k == 7:
        return tandem.motzkin_series(order), tandem.hook_series(order)
    raise ValueError(f"no table row {k}")
