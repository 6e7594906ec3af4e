"""Algebraic system from the unambiguous grammar of a singular model.

Walks are words ``W -> (M A)* M`` with ``M -> eps | C M | A M B M``, where ``A``,
``B`` and ``C`` raise, lower and preserve the one constrained coordinate.  Each
step ``(i, j)`` carries the weight ``x^i y^j t``.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..series import Laurent, Series, solve_fixed_point
from ..stepset import StepSet, governing_coordinate, is_singular, playable_steps, has_valid_walk


@dataclass
class GrammarSystem:
    A: Series
    B: Series
    C: Series
    M: Series
    S: Series
    coordinate: int | None

    def residuals(self) -> dict[str, Series]:
        """Defects of both equations; zero through the working order."""
        A, B, C, M, S = self.A, self.B, self.C, self.M, self.S
        m_eq = M - (1 + C * M + A * B * M * M)
        s_eq = S * (1 - M * A) - (M * M * A + M * (1 - M * A))
        return {"M": m_eq, "S": s_eq}


def _weight(steps, order: int) -> Series:
    return Series({1: Laurent({v: 1 for v in steps})} if steps else {}, order)


def grammar_system(s: StepSet, order: int) -> GrammarSystem:
    if not has_valid_walk(s) or not is_singular(s):
        raise ValueError(f"{s} is not a singular model with walks")
    play = playable_steps(s)
    c = governing_coordinate(s)
    axis = 1 if c is None else c
    up = [v for v in play.vectors if v[axis] == 1]
    down = [v for v in play.vectors if v[axis] == -1]
    level = [v for v in play.vectors if v[axis] == 0]
    A, B, C = (_weight(part, order) for part in (up, down, level))
    M = solve_fixed_point(lambda g: 1 + C * g + A * B * g * g, order)
    S = (M + M * M * A / (1 - M * A)).truncate(order)
    return GrammarSystem(A, B, C, M, S, c)


def singular_series(s: StepSet, order: int) -> Series:
    """``Q(x, y; t)`` of a singular model to ``O(t^order)``."""
    return grammar_system(s, order).S


def printed_grammar_series(s: StepSet, order: int) -> Series:
    """The system with ``S = M^2 A / (1 - M A)`` only (no trailing ``M``); kept to show it undercounts."""
    g = grammar_system(s, order)
    return (g.M * g.M * g.A / (1 - g.M * g.A)).truncate(order)
