"""Kernel of a step set, its roots in ``y`` and canonical factorisation.

The kernel is ``K(x, y) = xy - t * sum x^(i+1) y^(j+1) = a(x) t y^2 + b(t, x) y + c(x) t``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import INF, Laurent, Series
from .stepset import StepSet


@dataclass(frozen=True)
class KernelCoeffs:
    """``a, b, c`` of the kernel viewed as a quadratic in ``y``, and the mirrored triple.

    ``b`` is stored as ``b0 + t * b1`` with ``b0 = x`` and ``b1`` the level-step part.
    Mirrored coefficients are written in ``y`` (exponent in the ``y`` slot).
    """
    a: Laurent
    b0: Laurent
    b1: Laurent
    c: Laurent
    a_mirror: Laurent
    b1_mirror: Laurent
    c_mirror: Laurent

    @property
    def b(self) -> Series:
        return Series({0: self.b0, 1: self.b1}) if self.b1 else Series({0: self.b0})

    def kernel(self) -> Series:
        """``K`` as an exact polynomial in ``t``."""
        y = Laurent.monomial(1, 0, 1)
        return Series({0: self.b0 * y, 1: self.a * y * y + self.b1 * y + self.c})

    def is_degenerate(self) -> bool:
        return not (self.a and self.c and self.a_mirror and self.c_mirror)


def kernel_coeffs(s: StepSet) -> KernelCoeffs:
    if not s.members:
        raise ValueError("the kernel of the empty step set is trivial")

    def row(j: int) -> Laurent:
        return Laurent({(i + 1, 0): -1 for i, jj in s.vectors if jj == j})

    def col(i: int) -> Laurent:
        return Laurent({(0, j + 1): -1 for ii, j in s.vectors if ii == i})

    return KernelCoeffs(
        a=row(1), b0=Laurent.monomial(1, 1, 0), b1=row(0), c=row(-1),
        a_mirror=col(1), b1_mirror=col(0), c_mirror=col(-1),
    )


def kernel_from_steps(s: StepSet) -> Series:
    """``xy - t sum x^(i+1) y^(j+1)`` built directly from the steps."""
    steps = Laurent({(i + 1, j + 1): 1 for i, j in s.vectors})
    return Series({0: Laurent.monomial(1, 1, 1), 1: -steps})


@dataclass
class RootPair:
    """The two roots of ``K(x, y) = 0`` in ``y``.

    ``y0`` is the root vanishing at ``t = 0``.  The other root carries a pole
    in ``t``; it is stored multiplied by ``a(x)`` (``a_y1``) because ``a`` need
    not be invertible as a Laurent polynomial.  ``y1`` is available when ``a``
    is a monomial.
    """
    coeffs: KernelCoeffs
    y0: Series
    a_y1: Series

    @property
    def y1(self) -> Series:
        if not self.coeffs.a.is_monomial():
            raise ValueError(f"a(x) = {self.coeffs.a} is not a monomial; use a_y1")
        return self.a_y1 * self.coeffs.a.inverse()

    def residuals(self) -> dict[str, Series]:
        """Defects of ``K(x, Y0) = 0``, ``t a (Y0 + Y1) = -b`` and ``a Y0 Y1 = c``."""
        k = self.coeffs
        y0 = self.y0
        on_root = (y0 * y0 * k.a).shift(1) + k.b * y0 + Series.const(k.c).shift(1)
        total = (y0 * k.a).shift(1) + self.a_y1.shift(1) + k.b
        product = y0 * self.a_y1 - k.c
        return {"kernel_at_y0": on_root, "sum": total, "product": product}


def y_roots(s: StepSet, order: int) -> RootPair:
    """Roots of the kernel in ``y`` to ``O(t^order)``.

    ``Y0 = -2 c t / (b + sqrt(b^2 - 4 a c t^2))`` avoids dividing by ``a``;
    ``a Y1 = -(b + sqrt(b^2 - 4 a c t^2)) / (2t)``.
    """
    k = kernel_coeffs(s)
    if not (k.a and k.c):
        raise ValueError(f"{s}: kernel is not quadratic in y (needs steps up and down)")
    disc = (k.b * k.b - Series.const(k.a * k.c * 4).shift(2)).truncate(order + 2)
    root = disc.sqrt()
    denom = k.b + root
    y0 = (Series.const(k.c * -2).shift(1) / denom).truncate(order)
    a_y1 = (denom * Fraction(-1, 2)).shift(-1)
    return RootPair(k, y0, a_y1)


def part_split(f: Series) -> tuple[Series, Series, Series]:
    """``(f_pos, f_zero, f_neg)`` by sign of the ``x``-exponent; they sum to ``f``."""
    return f.split_x()


@dataclass
class Factorization:
    plus: Series
    zero: Series
    minus: Series

    def product(self) -> Series:
        return self.plus * self.zero * self.minus


def canonical_factorization(delta: Series, order: int | None = None,
                            width_slope: int | None = None) -> Factorization:
    """Split ``delta = plus * zero * minus`` with ``plus`` in ``1 + x Q[x][[t]]``,
    ``zero`` in ``Q[[t]]`` and ``minus`` in ``1 + xbar Q[xbar][[t]]``.

    Solved one power of ``t`` at a time: the residual at order ``n`` is linear in
    the three unknown coefficients, so its positive, constant and negative
    ``x``-parts give them directly.  ``width_slope`` bounds the exponent window of
    each new coefficient by ``width_slope * n``.
    """
    prec = delta.prec if order is None else min(delta.prec, order)
    if prec == INF:
        raise ValueError("factorising an exact series needs an order")
    if delta[0] != Laurent.const(1):
        raise ValueError(f"constant term {delta[0]} is not 1")
    plus, zero, minus = [Laurent.const(1)], [Laurent.const(1)], [Laurent.const(1)]
    for n in range(1, int(prec)):
        acc = Laurent()
        for i in range(n + 1):
            for j in range(n + 1 - i):
                k = n - i - j
                if n in (i, j, k):
                    continue
                if plus[i] and zero[j] and minus[k]:
                    acc = acc + plus[i] * zero[j] * minus[k]
        resid = delta[n] - acc
        pos, const, neg = resid.split_x()
        if width_slope is not None:
            lo, hi = resid.x_range() if resid else (0, 0)
            if max(-lo, hi) > width_slope * n:
                raise ArithmeticError(
                    f"exponent window [{lo}, {hi}] at order {n} exceeds {width_slope}*n")
        plus.append(pos)
        zero.append(const)
        minus.append(neg)

    def pack(cs):
        return Series({n: c for n, c in enumerate(cs) if c}, prec)

    return Factorization(pack(plus), pack(zero), pack(minus))
