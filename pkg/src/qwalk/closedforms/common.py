"""Shared pieces for the closed-form checks."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from ..series import Laurent, Series, T as t, solve_fixed_point

X = Laurent.monomial(1, 1, 0)
XBAR = Laurent.monomial(1, -1, 0)
Y = Laurent.monomial(1, 0, 1)
YBAR = Laurent.monomial(1, 0, -1)
HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


@dataclass
class Check:
    """Outcome of comparing one closed form against its reference."""
    name: str
    order_tested: int
    passed: bool
    first_mismatch: tuple | None = None
    note: str = ""

    def to_dict(self) -> dict:
        mm = None
        if self.first_mismatch is not None:
            n, i, j, ours, theirs = self.first_mismatch
            mm = {"n": n, "i": i, "j": j, "ours": str(ours), "expected": str(theirs)}
        out = {"name": self.name, "order_tested": self.order_tested, "pass": self.passed,
               "first_mismatch": mm}
        if self.note:
            out["note"] = self.note
        return out


def compare(name: str, ours: Series, expected: Series, order: int, note: str = "") -> Check:
    """Coefficientwise comparison through ``t^(order-1)``; too little precision fails."""
    have = min(ours.prec, expected.prec)
    if have < order:
        return Check(name, int(have), False, None,
                     f"precision O(t^{have}) below requested {order}")
    mm = ours.first_mismatch(expected, order)
    return Check(name, order, mm is None, mm, note)


def expect_failure(name: str, ours: Series, expected: Series, order: int, note: str) -> Check:
    """Passes when the two series *disagree*: used to pin printed variants that are wrong."""
    mm = ours.first_mismatch(expected, min(order, ours.prec, expected.prec))
    return Check(name, order, mm is not None, mm, note)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def kreweras_t(order: int) -> Series:
    """The series ``T = t (2 + T^3)`` to ``O(t^order)``."""
    return solve_fixed_point(lambda g: t * (2 + g ** 3), order)


def integer_series(values, prec: int | None = None) -> Series:
    return Series.from_list(values, prec=prec if prec is not None else len(values))


__all__ = ["Check", "compare", "expect_failure", "catalan", "kreweras_t", "integer_series",
           "X", "XBAR", "Y", "YBAR", "HALF", "QUARTER", "t"]
