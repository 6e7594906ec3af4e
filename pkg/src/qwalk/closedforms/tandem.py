"""Tandem walks ``{N, SE, W}``: hook-length counts and the tableau bijection."""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from ..series import Laurent, Series
from ..stepset import Direction
from .common import HALF, t

ROW_OF = {Direction.N: 0, Direction.SE: 1, Direction.W: 2}


@dataclass(frozen=True)
class TableauShape:
    n1: int
    n2: int
    n3: int

    @property
    def size(self) -> int:
        return self.n1 + self.n2 + self.n3

    def is_valid(self) -> bool:
        return self.n1 >= self.n2 >= self.n3 >= 0


def shape_count(n1: int, n2: int, n3: int) -> int:
    """Standard Young tableaux of shape ``(n1, n2, n3)`` by the hook-length formula."""
    if not n1 >= n2 >= n3 >= 0:
        return 0
    num = (n1 - n2 + 1) * (n2 - n3 + 1) * (n1 - n3 + 2) * factorial(n1 + n2 + n3)
    den = factorial(n1 + 2) * factorial(n2 + 1) * factorial(n3)
    return num // den


def shape_of_endpoint(n: int, i: int, j: int) -> TableauShape | None:
    """``n3 = (n - 2i - j)/3``, ``n2 = n3 + i``, ``n1 = n2 + j``; ``None`` off the lattice."""
    rest = n - 2 * i - j
    if i < 0 or j < 0 or rest < 0 or rest % 3:
        return None
    n3 = rest // 3
    return TableauShape(n3 + i + j, n3 + i, n3)


def tandem_count(n: int, i: int, j: int) -> int:
    shape = shape_of_endpoint(n, i, j)
    return 0 if shape is None else shape_count(shape.n1, shape.n2, shape.n3)


def printed_endpoint_count(n: int, i: int, j: int) -> int:
    """The substituted display with its own roles of ``i`` and ``j``:
    ``(i+1)(j+1)(i+j+2) n! / (((n-i-2j)/3)! ((n-i+j+3)/3)! ((n+2i+j+6)/3)!)``.
    """
    parts = (n - i - 2 * j, n - i + j + 3, n + 2 * i + j + 6)
    if any(p < 0 or p % 3 for p in parts):
        return 0
    a, b, c = (p // 3 for p in parts)
    return (i + 1) * (j + 1) * (i + j + 2) * factorial(n) // (factorial(a) * factorial(b) * factorial(c))


def tableau_shape(walk) -> TableauShape:
    """Place label ``k`` in row 1, 2 or 3 for step ``k`` being N, SE or W.

    Raises when a prefix leaves the quarter plane (the rows stop being a shape).
    """
    rows = [0, 0, 0]
    for k, step in enumerate(walk, start=1):
        d = step if isinstance(step, Direction) else Direction[step]
        if d not in ROW_OF:
            raise ValueError(f"{d.name} is not a tandem step")
        rows[ROW_OF[d]] += 1
        if not rows[0] >= rows[1] >= rows[2]:
            raise ValueError(f"step {k} leaves the quarter plane")
    return TableauShape(*rows)


def tableau(walk) -> list[list[int]]:
    """The standard tableau itself: row ``r`` lists the labels placed there."""
    rows: list[list[int]] = [[], [], []]
    for k, step in enumerate(walk, start=1):
        d = step if isinstance(step, Direction) else Direction[step]
        rows[ROW_OF[d]].append(k)
    tableau_shape(walk)
    return rows


def hook_series(order: int) -> Series:
    """``sum a_ij(n) x^i y^j t^n`` from the hook-length formula."""
    coeffs = {}
    for n in range(order):
        terms = {}
        for i in range(n + 1):
            for j in range(n + 1 - 2 * i):
                c = tandem_count(n, i, j)
                if c:
                    terms[(i, j)] = c
        coeffs[n] = Laurent(terms)
    return Series(coeffs, order)


def motzkin_series(order: int) -> Series:
    """``(1 - t - sqrt((1 + t)(1 - 3t))) / (2 t^2)``."""
    root = (Series({0: 1, 1: -2, 2: -3}).truncate(order + 2)).sqrt()
    return ((1 - t - root) * HALF).shift(-2).truncate(order)
