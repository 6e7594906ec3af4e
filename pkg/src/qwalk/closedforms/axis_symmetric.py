"""The two axis-symmetric holonomic classes, ``{N, SE, SW}`` and ``{NE, SE, W}``."""
from __future__ import annotations

from fractions import Fraction
from math import comb

from ..series import Laurent, Series
from .common import HALF, X, XBAR, Y, YBAR, catalan, t

# -- {N, SE, SW} -------------------------------------------------------------------


def h_coefficient(n: int, k: int, parity: str = "odd", with_catalan: bool = True):
    """``[x^k t^(2n-1)] H``.

    The oracle-validated rule is ``C_(n-1) * k/(n+1) * binom(n+1, (n+k+1)/2)`` when
    ``n + k`` is odd.  ``parity="even"`` applies the rule on ``k = n (mod 2)``
    instead, where ``(n+k+1)/2`` is never an integer; ``with_catalan=False``
    drops the Catalan factor.
    """
    want_odd = parity == "odd"
    if k < 1 or n < 1 or ((n + k) % 2 == 1) != want_odd:
        return 0
    top = n + k + 1
    if top % 2:
        return 0  # binomial at a half-integer: no integral coefficient exists
    v = Fraction(k * comb(n + 1, top // 2), n + 1)
    if with_catalan:
        v *= catalan(n - 1)
    return v.numerator if v.denominator == 1 else v


def h_series(order: int, var: Laurent = X, **rule) -> Series:
    coeffs = {}
    for n in range(1, (order + 2) // 2 + 1):
        if 2 * n - 1 >= order:
            break
        terms = {}
        for k in range(1, n + 2):
            c = h_coefficient(n, k, **rule)
            if c:
                terms[(k, 0) if var is X else (0, k)] = c
        coeffs[2 * n - 1] = Laurent(terms)
    return Series(coeffs, order)


def y1_root_class8(order: int) -> Series:
    """``Y1 = (1 - sqrt(1 - 4 t^2 (x + xbar))) / (2t)``."""
    root = Series({0: 1, 2: -4 * (X + XBAR)}).truncate(order + 1).sqrt()
    return ((1 - root) * HALF).shift(-1).truncate(order)


def y1_catalan_sum(order: int, factor: int = 1) -> Series:
    """``factor * sum_m C_(m-1) (x + xbar)^m t^(2m-1)``; the printed sum has ``factor = 2``."""
    coeffs = {}
    base = X + XBAR
    power = Laurent.const(1)
    for m in range(1, order):
        power = power * base
        if 2 * m - 1 >= order:
            break
        coeffs[2 * m - 1] = power.scale(factor * catalan(m - 1))
    return Series(coeffs, order)


def m_series(order: int) -> Series:
    """``M(y) = (y - t y^2 - sqrt(y^2 - 2 y^3 t + t^2 y^4 - 4 t^2)) / (2t)``.

    The radical is ``y sqrt(1 - 2yt + t^2 y^2 - 4 t^2 / y^2)``.
    """
    inner = Series({0: 1, 1: -2 * Y, 2: Y * Y - 4 * YBAR * YBAR}).truncate(order + 1)
    root = inner.sqrt() * Y
    return ((Series({0: Y, 1: -Y * Y}) - root) * HALF).shift(-1).truncate(order)


KERNEL8 = Series({0: X * Y, 1: -(X * Y * Y + X * X + 1)})


def class8_complete(order: int, printed: bool = False) -> Series:
    """``(xy - H(x) - y M(y) + H(M(y))) / (xy - t x y^2 - t(x^2 + 1))``.

    ``printed=True`` uses ``- M(y)`` in place of ``- y M(y)``.
    """
    work = order + 1
    h_x = h_series(work)
    m = m_series(work)
    h_of_m = h_series(work, var=Y).compose(m, "y").truncate(work)
    middle = m if printed else m * Y
    num = X * Y - h_x - middle + h_of_m
    return (num / KERNEL8).truncate(order)


def class8_h_from_axis(axis: Series) -> Series:
    """``H = t (x^2 + 1) Q(x, 0) - t Q(0, 0)``: the positive part of the right side."""
    return (axis * (X * X + 1) - axis.at_x0()).shift(1)


def class8_antisymmetric_residual(axis: Series, order: int) -> Series:
    """``(x - xbar) Y1 - t Q(x,0)(x^2+1) + t Q(xbar,0)(xbar^2+1)``."""
    y1 = y1_root_class8(order)
    rhs = (axis * (X * X + 1) - axis.bar_x() * (XBAR * XBAR + 1)).shift(1)
    return ((X - XBAR) * y1 - rhs).truncate(order)


def class8_positive_part(order: int) -> Series:
    """``((x - xbar) Y1)^>=``; equal to ``H``."""
    return ((X - XBAR) * y1_root_class8(order)).positive_part()


def h_total(n: int) -> int:
    """``a(n) = [t^(2n-1)] H(1, t)``, exactly."""
    return sum(h_coefficient(n, k) for k in range(1, n + 2))


# -- {NE, SE, W} -------------------------------------------------------------------


def s_coefficient(n: int, k: int) -> Fraction | int:
    """``[y^(n-2k) t^(2n-1)] S = 2 binom(n, k) binom(2n-2, n-1) / n``."""
    v = Fraction(2 * comb(n, k) * comb(2 * n - 2, n - 1), n)
    return v.numerator if v.denominator == 1 else v


def s_series(order: int, full_range: bool = True) -> Series:
    """``S`` with ``0 <= k <= n`` (``full_range``) or the printed ``0 <= k <= n/2``."""
    coeffs = {}
    for n in range(1, order):
        if 2 * n - 1 >= order:
            break
        top = n if full_range else n // 2
        coeffs[2 * n - 1] = Laurent({(0, n - 2 * k): s_coefficient(n, k) for k in range(top + 1)})
    return Series(coeffs, order)


def r_series(order: int) -> Series:
    """``R(y) = Q(0, y)`` as ``((y^2 - 1) S / (2 (y^2 + 1)))^(>0) / (t y)``.

    ``(y^2 - 1)/(y^2 + 1) = (y - ybar)/(y + ybar)`` and ``S`` is divisible by
    ``y + ybar`` coefficientwise, so the quotient is exact.
    """
    s = s_series(order + 1)
    ratio = (s * (Y - YBAR) * HALF).map_coeffs(lambda c: c.divide_exact(Y + YBAR, "y"))
    pos, _, _ = ratio.swap_xy().split_x()
    return (pos.swap_xy() * YBAR).shift(-1).truncate(order)


def r_coefficient(m: int, k: int):
    """``[y^(k-1) t^(2m-2)] R = C_(m-1) k/m binom(m, (m+k)/2)`` for ``m + k`` even."""
    if (m + k) % 2 or k < 1 or k > m:
        return 0
    v = Fraction(catalan(m - 1) * k * comb(m, (m + k) // 2), m)
    return v.numerator if v.denominator == 1 else v


def r_series_direct(order: int) -> Series:
    coeffs = {}
    for m in range(1, order + 1):
        if 2 * m - 2 >= order:
            break
        coeffs[2 * m - 2] = Laurent({(0, k - 1): r_coefficient(m, k) for k in range(1, m + 1)
                                     if r_coefficient(m, k)})
    return Series(coeffs, order)


def printed_r_defect(order: int, oracle_r: Series) -> Series:
    """``(y^2 - 1) S_printed - (y^2 + 1) R``: zero if the printed relation held."""
    s = s_series(order, full_range=False)
    return (s * (Y * Y - 1) - oracle_r * (Y * Y + 1)).truncate(order)


def class9_root(order: int, two: bool = True) -> Series:
    """``((x - t) - sqrt((x - t)^2 - 4 t^2 x^4)) / (2 t x^2)``; ``two=False`` drops the 2."""
    inner = Series({0: 1, 1: -2 * XBAR, 2: XBAR * XBAR - 4 * X * X}).truncate(order + 2)
    num = Series({0: X, 1: -1}) - inner.sqrt() * X
    scale = XBAR * XBAR * (HALF if two else 1)
    return (num * scale).shift(-1).truncate(order)


KERNEL9 = Series({0: X * Y, 1: -(X * X * Y * Y + X * X + Y)})


def kernel9_at(root: Series) -> Series:
    """``K(x, Y) = xY - t x^2 (Y^2 + 1) - t Y``."""
    return root * X - (root * root * (X * X) + X * X + root).shift(1)


def class9_complete(order: int, printed: bool = False) -> Series:
    """``(xy - Y0 (x - t R(Y0)) - t y R(y)) / (xy - t x^2 (y^2 + 1) - t y)``.

    ``printed=True`` drops both the 2 in the root and the ``t`` before ``R(Y0)``.
    """
    work = order + 1
    root = class9_root(work, two=not printed)
    r = r_series(work)
    r_at_root = r.compose(root, "y")
    inner = Series.const(X) - (r_at_root if printed else r_at_root.shift(1))
    num = X * Y - root * inner - (r * Y).shift(1)
    return (num / KERNEL9).truncate(order)
