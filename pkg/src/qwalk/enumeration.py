"""Exact dynamic-programming counts of quarter-plane walks.

Every closed form in the package is checked against these tables.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .series import Laurent, Series
from .stepset import StepSet


@dataclass
class WalkTable:
    stepset: StepSet
    n_max: int
    counts: list[dict[tuple[int, int], int]]

    def __getitem__(self, n: int) -> dict[tuple[int, int], int]:
        return self.counts[n]

    def count(self, n: int, i: int, j: int) -> int:
        return self.counts[n].get((i, j), 0)

    def to_jsonl(self) -> str:
        lines = []
        for n, layer in enumerate(self.counts):
            for (i, j), c in sorted(layer.items()):
                lines.append(json.dumps({"n": n, "i": i, "j": j, "count": c}))
        return "\n".join(lines) + "\n"


def _step(layer: dict, vectors) -> dict:
    new: dict = {}
    for (i, j), c in layer.items():
        for a, b in vectors:
            p = (i + a, j + b)
            if p[0] >= 0 and p[1] >= 0:
                new[p] = new.get(p, 0) + c
    return new


def count_walks(s: StepSet, n_max: int) -> WalkTable:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    vectors = s.vectors
    counts = [{(0, 0): 1}]
    for _ in range(n_max):
        counts.append(_step(counts[-1], vectors))
    return WalkTable(s, n_max, counts)


def count_totals(s: StepSet, n_max: int) -> list[int]:
    """Totals only, keeping a single layer in memory."""
    vectors = s.vectors
    layer = {(0, 0): 1}
    out = [1]
    for _ in range(n_max):
        layer = _step(layer, vectors)
        out.append(sum(layer.values()))
    return out


def totals(w: WalkTable) -> list[int]:
    return [sum(layer.values()) for layer in w.counts]


def sequence_csv(seq: list[int]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "count"])
    for n, c in enumerate(seq):
        writer.writerow([n, c])
    return buf.getvalue()


def complete_series(w: WalkTable) -> Series:
    """``Q(x, y; t)`` truncated to ``O(t^(n_max+1))``."""
    return Series({n: Laurent(dict(layer)) for n, layer in enumerate(w.counts)}, w.n_max + 1)


SLICES = ("xaxis", "yaxis", "origin", "diagonal", "complete", "totals")


def slice(w: WalkTable, which: str) -> Series:
    """Sub-series of ``Q``: ``xaxis`` is ``Q(x,0;t)``, ``yaxis`` is ``Q(0,y;t)``,
    ``origin`` is ``Q(0,0;t)`` and ``diagonal`` is ``Q_d(x;t) = sum a_ii(n) x^i t^n``.
    """
    prec = w.n_max + 1
    out = {}
    for n, layer in enumerate(w.counts):
        if which == "xaxis":
            terms = {(i, 0): c for (i, j), c in layer.items() if j == 0}
        elif which == "yaxis":
            terms = {(0, j): c for (i, j), c in layer.items() if i == 0}
        elif which == "origin":
            terms = {(0, 0): layer.get((0, 0), 0)}
        elif which == "diagonal":
            terms = {(i, 0): c for (i, j), c in layer.items() if i == j}
        elif which == "complete":
            terms = dict(layer)
        elif which == "totals":
            terms = {(0, 0): sum(layer.values())}
        else:
            raise ValueError(f"unknown slice {which!r}; expected one of {SLICES}")
        out[n] = Laurent(terms)
    return Series(out, prec)


def fundamental_equation_rhs(s: StepSet, Q: Series) -> Series:
    """Right-hand side of the fundamental equation evaluated on ``Q``.

    ``1 + t S(x,y) Q - t ybar sum_{(i,-1)} x^i Q(x,0) - t xbar sum_{(-1,j)} y^j Q(0,y)
    + [(-1,-1) in S] t xbar ybar Q(0,0)``
    """
    steps = Laurent({v: 1 for v in s.vectors})
    low_y = Laurent({(i, -1): 1 for i, j in s.vectors if j == -1})
    low_x = Laurent({(-1, j): 1 for i, j in s.vectors if i == -1})
    qx0 = Q.at_y0()
    q0y = Q.at_x0()
    q00 = qx0.at_x0()
    rhs = 1 + (Q * steps).shift(1) - (qx0 * low_y).shift(1) - (q0y * low_x).shift(1)
    if (-1, -1) in s.vectors:
        rhs = rhs + (q00 * Laurent.monomial(1, -1, -1)).shift(1)
    return rhs


def fundamental_equation_mismatch(s: StepSet, w: WalkTable):
    """First disagreement between ``Q`` and the right-hand side, or ``None``.

    The right-hand side at order ``n`` only reads ``Q`` below ``n``, so the
    equation is tested through order ``n_max``.
    """
    Q = complete_series(w)
    rhs = fundamental_equation_rhs(s, Q)
    return Q.first_mismatch(rhs)


def verify_fundamental_equation(s: StepSet, w: WalkTable) -> bool:
    return fundamental_equation_mismatch(s, w) is None


def kernel_form_mismatch(w: WalkTable):
    """Class-10 kernel form ``(xy - t x^2 y^2 - t x^2 - t y^2) Q = xy - t x^2 Q(x,0) - t y^2 Q(y,0)``."""
    Q = complete_series(w)
    kernel = Series({0: Laurent({(1, 1): 1}), 1: Laurent({(2, 2): -1, (2, 0): -1, (0, 2): -1})})
    qx0 = Q.at_y0()
    qy0 = qx0.x_to_y()
    lhs = kernel * Q
    rhs = Laurent({(1, 1): 1}) - (qx0 * Laurent({(2, 0): 1})).shift(1) \
        - (qy0 * Laurent({(0, 2): 1})).shift(1)
    return lhs.first_mismatch(rhs, order=w.n_max + 1)
