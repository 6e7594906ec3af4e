"""Iterated kernel method for ``{NE, SE, NW}``.

``Y1`` is the kernel root vanishing at ``t = 0``; ``Yn = Y1 o Y(n-1)``.  Since ``Yn``
has ``t``-valuation ``n``, the alternating sum of ``Yn Y(n+1)`` converges ``t``-adically
to ``x^2 t Q(x, 0)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from ..series import Laurent, Series
from .common import HALF, X, XBAR, t

ONE_PLUS_X2 = Laurent({(0, 0): 1, (2, 0): 1})


def y_plus(order: int, x: Series | None = None) -> Series:
    """``Y(+1)(x) = x (1 - sqrt(1 - 4t^2 (1 + x^2))) / (2t (1 + x^2))`` to ``O(t^order)``.

    With ``x`` a series of positive valuation this evaluates ``Y(+1)`` at ``x``.
    """
    if x is None:
        # x * sum_k C_k t^(2k+1) (1 + x^2)^k, the quotient by 1 + x^2 done termwise
        root = Series({0: 1, 2: -4 * ONE_PLUS_X2}).truncate(order + 1).sqrt()
        quotient = (1 - root).map_coeffs(lambda c: c.divide_exact(ONE_PLUS_X2))
        return (quotient * X * HALF).shift(-1).truncate(order)
    u = x.truncate(order + 1)
    u2 = 1 + u * u
    root = (1 - (u2 * 4).shift(2)).truncate(order + 2).sqrt()
    return ((1 - root) * u / u2 * HALF).shift(-1).truncate(order)


def y_minus_at(u: Series, order: int) -> Series:
    """``Y(-1)(u) = u (1 + sqrt(1 - 4t^2 (1 + u^2))) / (2t (1 + u^2))`` for ``u`` of valuation >= 1."""
    if u.val < 1:
        raise ValueError("Y(-1) can only be evaluated at a series with positive valuation")
    u = u.truncate(order + 1)
    u2 = 1 + u * u
    root = (1 - (u2 * 4).shift(2)).truncate(order + 2).sqrt()
    return ((1 + root) * u / u2 * HALF).shift(-1).truncate(order)


def y_sequence(count: int, order: int) -> list[Series]:
    """``[Y0, Y1, ..., Y(count-1)]`` with ``Y0 = x``, each to ``O(t^order)``."""
    y1 = y_plus(order)
    seq = [Series.const(X)]
    for n in range(1, count):
        seq.append(y1 if n == 1 else y1.compose(seq[-1], "x").truncate(order))
    return seq


def inverse_residual(order: int) -> Series:
    """``Y(-1)(Y(+1)(x)) - x``."""
    return y_minus_at(y_plus(order + 1), order) - X


def reciprocal_residuals(n_max: int, order: int) -> dict[int, Series]:
    """``1/Yn - 1/(t Y(n-1)) + 1/Y(n-2)`` for ``2 <= n <= n_max``.

    ``1/Yn`` has valuation ``-n``, so the inverses are taken with ``order + n_max`` terms of
    precision and compared through ``O(t^order)``.
    """
    work = order + 2 * n_max + 2
    ys = y_sequence(n_max + 1, work)
    inv = [y.inverse(order + 2) for y in ys]
    return {n: (inv[n] - inv[n - 1].shift(-1) + inv[n - 2]).truncate(order)
            for n in range(2, n_max + 1)}


def terms_needed(order: int) -> int:
    """Number of summands making the partial sum exact to ``O(t^order)``."""
    return max(1, ceil(order / 2))


@dataclass
class IteratedKernel:
    ys_at_1: list[Series]
    ys: list[Series]
    axis: Series
    counting: Series


def axis_series(order: int, n_terms: int | None = None) -> Series:
    """``Q(x, 0) = (1/(x^2 t)) sum_(n < N) (-1)^n Yn Y(n+1)``."""
    need = terms_needed(order)
    n_terms = need if n_terms is None else n_terms
    if n_terms < need:
        raise ValueError(f"order {order} needs {need} terms of the sum, got {n_terms}")
    work = order + 1
    ys = y_sequence(n_terms + 1, work)
    total = Series.zero(work)
    for n in range(n_terms):
        term = ys[n] * ys[n + 1]
        total = total - term if n % 2 else total + term
    return (total * (XBAR * XBAR)).shift(-1).truncate(order)


def remainder_identity_residual(axis: Series, n_terms: int, order: int) -> Series:
    """The finite-``N`` identity
    ``Q(x,0) - partial_N - (-1)^N (Y_N/x)^2 Q(Y_N, 0)`` evaluated with a given ``Q(x, 0)``."""
    work = order + 1
    ys = y_sequence(n_terms + 1, work)
    partial = Series.zero(work)
    for n in range(n_terms):
        term = ys[n] * ys[n + 1]
        partial = partial - term if n % 2 else partial + term
    partial = (partial * (XBAR * XBAR)).shift(-1)
    y_n = ys[n_terms]
    tail = (y_n * XBAR) * (y_n * XBAR) * axis.compose(y_n, "x")
    if n_terms % 2:
        tail = -tail
    return (axis - partial - tail).truncate(order)


def counting_series(order: int) -> Series:
    """``W = (1 - 2t Q(1, 0)) / (1 - 3t)``."""
    q10 = axis_series(order).at_x1()
    return ((1 - (q10 * 2).shift(1)) / Series({0: 1, 1: -3})).truncate(order)


def iterated_kernel(n_terms: int, order: int) -> IteratedKernel:
    if n_terms < terms_needed(order):
        raise ValueError(f"order {order} needs {terms_needed(order)} terms of the sum, "
                         f"got {n_terms}")
    ys = y_sequence(n_terms + 1, order)
    return IteratedKernel([y.at_x1() for y in ys], ys, axis_series(order, n_terms),
                          counting_series(order))
