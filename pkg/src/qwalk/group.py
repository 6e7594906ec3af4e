"""The group of the walk: birational involutions fixing the rational kernel.

``tau_y`` sends ``(x, y)`` to ``(x, c(x) / (a(x) y))``, the product of the two
kernel roots divided by ``y``; ``tau_x`` is the mirror image.  Group elements
are pairs of reduced rational functions over the integers.
"""
from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass, field

import math

import flint

from .stepset import (StepSet, all_subsets, all_triples, has_valid_walk, is_singular,
                      reflect, symmetry_report)

CTX = flint.fmpz_mpoly_ctx.get(("x", "y"), "deglex")
XV, YV = CTX.gens()
ZERO = CTX.from_dict({})
ONE = CTX.from_dict({(0, 0): 1})
PRIME = 2**61 - 1
SEED = 20240601


def _normalise(num, den):
    if not den:
        raise ZeroDivisionError("zero denominator")
    g = num.gcd(den)
    num, den = num / g, den / g
    # integer content and sign: make the denominator's leading coefficient positive
    c = math.gcd(int(num.content()), int(den.content()))
    if den.leading_coefficient() < 0:
        c = -c
    return num / c, den / c


@dataclass(frozen=True)
class Fraction2:
    """A reduced rational function ``num / den`` in ``x, y``."""
    num: object
    den: object

    @classmethod
    def make(cls, num, den=None) -> "Fraction2":
        if den is None:
            den = ONE
        return cls(*_normalise(_poly(num), _poly(den)))

    def degree(self) -> int:
        return max(_total_degree(self.num), _total_degree(self.den))

    def key(self):
        return (_frozen(self.num), _frozen(self.den))

    def __str__(self) -> str:
        if self.den == ONE:
            return _fmt(self.num)
        return f"({_fmt(self.num)})/({_fmt(self.den)})"


def _poly(p):
    return CTX.from_dict({(0, 0): p}) if isinstance(p, int) else p


def _frozen(p) -> tuple:
    return tuple(sorted((m, int(c)) for m, c in p.to_dict().items()))


def _total_degree(p) -> int:
    return int(p.total_degree()) if p else 0


def _fmt(p) -> str:
    return str(p)


@dataclass(frozen=True)
class RationalMap:
    """``(x, y) -> (first, second)``."""
    first: Fraction2
    second: Fraction2

    @classmethod
    def identity(cls) -> "RationalMap":
        return cls(Fraction2.make(XV), Fraction2.make(YV))

    def components(self):
        return (self.first, self.second)

    def degree(self) -> int:
        return max(self.first.degree(), self.second.degree())

    def key(self):
        return (self.first.key(), self.second.key())

    def __str__(self) -> str:
        return f"({self.first}, {self.second})"

    def evaluate_mod(self, px: int, py: int, p: int = PRIME):
        """Values of both components at a point modulo ``p`` (``None`` on a pole)."""
        out = []
        for comp in self.components():
            d = _eval_mod(comp.den, px, py, p)
            if d == 0:
                return None
            out.append(_eval_mod(comp.num, px, py, p) * pow(d, -1, p) % p)
        return tuple(out)


def _eval_mod(poly, px: int, py: int, p: int) -> int:
    return sum(int(c) * pow(px, i, p) * pow(py, j, p) for (i, j), c in poly.terms()) % p


CTX4 = flint.fmpz_mpoly_ctx.get(("x", "u", "y", "v"), "deglex")


def _substitute(poly, f: Fraction2, g: Fraction2, dx: int, dy: int):
    """``poly(f, g) * den_f^dx * den_g^dy`` as a polynomial (``dx, dy`` bound the degrees).

    The bihomogenised ``poly(x/u, y/v) u^dx v^dy`` is composed with the four
    numerators and denominators in one call.
    """
    homog = CTX4.from_dict({(i, dx - i, j, dy - j): c for (i, j), c in poly.terms()})
    return homog.compose(f.num, f.den, g.num, g.den, ctx=CTX)


def _degrees(p) -> tuple[int, int]:
    return tuple(int(d) for d in p.degrees()) if p else (0, 0)


def _apply(comp: Fraction2, inner: RationalMap) -> Fraction2:
    dx = max(_degrees(comp.num)[0], _degrees(comp.den)[0])
    dy = max(_degrees(comp.num)[1], _degrees(comp.den)[1])
    f, g = inner.first, inner.second
    num = _substitute(comp.num, f, g, dx, dy)
    den = _substitute(comp.den, f, g, dx, dy)
    if not den:
        raise ZeroDivisionError("denominator vanishes identically after substitution")
    return Fraction2.make(num, den)


def compose(f: RationalMap, g: RationalMap) -> RationalMap:
    """``f o g``: substitute the components of ``g`` into ``f``."""
    return RationalMap(_apply(f.first, g), _apply(f.second, g))


def maps_equal(f: RationalMap, g: RationalMap, prefilter: bool = True) -> bool:
    """Exact equality by cross-multiplication; a modular evaluation may reject early."""
    if prefilter:
        rng = random.Random(SEED)
        for _ in range(2):
            pt = (rng.randrange(2, PRIME), rng.randrange(2, PRIME))
            a, b = f.evaluate_mod(*pt), g.evaluate_mod(*pt)
            if a is not None and b is not None and a != b:
                return False
    for u, v in zip(f.components(), g.components()):
        if u.num * v.den - v.num * u.den:
            return False
    return True


class GroupError(ValueError):
    pass


def _row(s: StepSet, j: int):
    return -sum((XV ** (i + 1) for i, jj in s.vectors if jj == j), ZERO)


def _col(s: StepSet, i: int):
    return -sum((YV ** (j + 1) for ii, j in s.vectors if ii == i), ZERO)


def generators(s: StepSet) -> tuple[RationalMap, RationalMap]:
    """``(tau_x, tau_y)``."""
    a, c = _row(s, 1), _row(s, -1)
    am, cm = _col(s, 1), _col(s, -1)
    if not (a and c and am and cm):
        raise GroupError(f"{s}: degenerate kernel, group undefined")
    tau_x = RationalMap(Fraction2.make(cm, am * XV), Fraction2.make(YV))
    tau_y = RationalMap(Fraction2.make(XV), Fraction2.make(c, a * YV))
    return tau_x, tau_y


def has_generators(s: StepSet) -> bool:
    try:
        generators(s)
    except GroupError:
        return False
    return True


def rational_kernel(s: StepSet) -> Fraction2:
    """The step polynomial ``sum x^i y^j``; ``K_r = 1 - t`` times this."""
    steps = sum((XV ** (i + 1) * YV ** (j + 1) for i, j in s.vectors), ZERO)
    return Fraction2.make(steps, XV * YV)


def kernel_invariance_check(s: StepSet) -> bool:
    """``K_r(tau(x, y)) = K_r(x, y)`` for both generators, as exact identities.

    ``K_r = 1 - t S(x, y)`` with ``S`` the step polynomial, so invariance of
    ``K_r`` for every ``t`` is invariance of ``S``.
    """
    kr = rational_kernel(s)
    for tau in generators(s):
        moved = _apply(kr, tau)
        if moved.num * kr.den - kr.num * moved.den:
            return False
    return True


@dataclass
class OrbitResult:
    finite: bool
    order: int | None = None
    bound: int | None = None
    max_degree_seen: int = 0
    degree_growth: list[int] = field(default_factory=list)

    @property
    def dihedral_k(self) -> int | None:
        return None if self.order is None else self.order // 2

    def monotone_growth(self) -> bool:
        g = self.degree_growth
        return len(g) > 1 and all(b > a for a, b in zip(g, g[1:]))

    def label(self) -> str:
        if self.finite:
            return f"D{self.dihedral_k} (order {self.order})"
        return f"exceeds bound {self.bound} (max degree {self.max_degree_seen})"

    def to_dict(self) -> dict:
        return {"finite": self.finite, "order": self.order, "dihedral_k": self.dihedral_k,
                "bound": self.bound, "max_degree_seen": self.max_degree_seen,
                "degree_growth": self.degree_growth}


DEFAULT_ELEMENT_BOUND = 200
DEFAULT_DEGREE_BOUND = 64


def degree_growth(s: StepSet, steps: int, degree_bound: int = DEFAULT_DEGREE_BOUND) -> list[int]:
    """Degrees of ``(tau_x tau_y)^n`` for ``n = 1, 2, ...`` until the identity or the bound."""
    tx, ty = generators(s)
    rot = compose(tx, ty)
    ident = RationalMap.identity()
    out = []
    cur = rot
    for _ in range(steps):
        if maps_equal(cur, ident):
            break
        out.append(cur.degree())
        if out[-1] > degree_bound:
            break
        cur = compose(rot, cur)
    return out


def group_order(s: StepSet, element_bound: int = DEFAULT_ELEMENT_BOUND,
                degree_bound: int = DEFAULT_DEGREE_BOUND) -> OrbitResult:
    """Breadth-first closure of ``{tau_x, tau_y}`` under composition.

    Elements are tagged with the word that produced them, so the degrees of the
    alternating powers ``(tau_x tau_y)^n`` are read off the search itself.
    """
    tau_x, tau_y = generators(s)
    gens = (("x", tau_x), ("y", tau_y))
    ident = RationalMap.identity()
    seen: dict = {ident.key(): [ident]}
    frontier = [(ident, "")]
    count = 1
    max_deg = 1
    growth: list[int] = []

    def known(m: RationalMap) -> bool:
        return any(maps_equal(m, other) for other in seen.get(m.key(), ()))

    while frontier:
        nxt = []
        for elem, word in frontier:
            for name, gen in gens:
                m = compose(gen, elem)
                if known(m):
                    continue
                w = name + word
                deg = m.degree()
                if len(w) % 2 == 0 and w == "xy" * (len(w) // 2):
                    growth.append(deg)
                max_deg = max(max_deg, deg)
                seen.setdefault(m.key(), []).append(m)
                count += 1
                nxt.append((m, w))
                if count > element_bound or max_deg > degree_bound:
                    bound = element_bound if count > element_bound else degree_bound
                    return OrbitResult(False, bound=bound, max_degree_seen=max_deg,
                                       degree_growth=growth)
        frontier = nxt
    return OrbitResult(True, order=count, max_degree_seen=max_deg, degree_growth=growth)


KREWERAS = StepSet.of("NE", "S", "W")
REVERSE_KREWERAS = StepSet.of("N", "E", "SW")


def finiteness_predicates(s: StepSet) -> dict[str, bool]:
    """The four combinatorial conditions conjectured to characterise finite groups."""
    rep = symmetry_report(s)
    return {
        "axis_symmetric": rep.x_axis_symmetric or rep.y_axis_symmetric,
        "rev_invariant": rep.rev_invariant,
        "reflect_rev_invariant": rep.reflect_rev_invariant,
        "kreweras": s in (KREWERAS, REVERSE_KREWERAS),
    }


@dataclass
class SurveyRow:
    stepset: StepSet
    singular: bool
    result: OrbitResult | None
    predicates: dict[str, bool]

    @property
    def predicted_finite(self) -> bool:
        return any(self.predicates.values())

    @property
    def consistent(self) -> bool | None:
        if self.result is None:
            return None
        return self.result.finite == self.predicted_finite


def finite_group_survey(element_bound: int = DEFAULT_ELEMENT_BOUND,
                        degree_bound: int = DEFAULT_DEGREE_BOUND,
                        triples: list[StepSet] | None = None) -> list[SurveyRow]:
    rows = []
    for s in triples if triples is not None else all_triples():
        singular = is_singular(s) or not has_valid_walk(s)
        result = None
        if not singular:
            result = group_order(s, element_bound, degree_bound)
        rows.append(SurveyRow(s, singular, result, finiteness_predicates(s)))
    return rows


def survey_csv(rows: list[SurveyRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["steps", "singular", "group_order_or_bound", "x_sym", "y_sym", "rev_inv",
                "reflect_rev_inv", "conjecture_consistent"])
    for r in rows:
        rep = symmetry_report(r.stepset)
        if r.result is None:
            order = ""
        elif r.result.finite:
            order = str(r.result.order)
        else:
            order = f">{r.result.bound}"
        cons = "" if r.consistent is None else str(r.consistent).lower()
        w.writerow([str(r.stepset), str(r.singular).lower(), order,
                    str(rep.x_axis_symmetric).lower(), str(rep.y_axis_symmetric).lower(),
                    str(rep.rev_invariant).lower(), str(rep.reflect_rev_invariant).lower(), cons])
    return buf.getvalue()


# Printed finite-group rows: dihedral index and generator pair, as (tau_x, tau_y) component strings.
def _m(first, second) -> RationalMap:
    return RationalMap(Fraction2.make(*first), Fraction2.make(*second))


TABLE2 = [
    (2, _m((1, XV), (YV, 1)), _m((XV, 1), (1, YV))),
    (2, _m((1, XV), (YV, 1)), _m((XV, 1), (XV, YV * (XV**2 + 1)))),
    (2, _m((1, XV), (YV, 1)), _m((XV, 1), (XV, YV * (XV**2 + 1 + XV)))),
    (2, _m((1, XV), (YV, 1)), _m((XV, 1), (XV**2 + 1, YV * (XV**2 + 1 + XV)))),
    (2, _m((1, XV), (YV, 1)), _m((XV, 1), (XV**2 + 1, XV * YV))),
    (2, _m((1, XV), (YV, 1)), _m((XV, 1), (XV**2 + 1 + XV, XV * YV))),
    (2, _m((1, XV), (YV, 1)), _m((XV, 1), (XV**2 + 1 + XV, YV * (XV**2 + 1)))),
    (3, _m((1, XV * YV), (YV, 1)), _m((XV, 1), (1, XV * YV))),
    (3, _m((YV, XV), (YV, 1)), _m((XV, 1), (XV, YV))),
    (4, _m((1, XV * YV**2), (YV, 1)), _m((XV, 1), (1, XV * YV))),
    (4, _m((YV**2, XV), (YV, 1)), _m((XV, 1), (XV, YV))),
]


def swap_variables(m: RationalMap) -> RationalMap:
    """Conjugate by ``(x, y) -> (y, x)``: the map for the reflected step set."""
    def sw(f: Fraction2) -> Fraction2:
        def p(poly):
            return CTX.from_dict({(j, i): c for (i, j), c in poly.terms()})
        return Fraction2.make(p(f.num), p(f.den))
    return RationalMap(sw(m.second), sw(m.first))


@dataclass
class TableRowMatch:
    row: int
    dihedral_k: int
    members: list[StepSet]
    orders: list[int | None]

    @property
    def ok(self) -> bool:
        return bool(self.members) and all(o == 2 * self.dihedral_k for o in self.orders)


def nonsingular_with_group() -> list[StepSet]:
    return [s for s in all_subsets()
            if s.members and has_valid_walk(s) and not is_singular(s) and has_generators(s)]


def match_table2(element_bound: int = DEFAULT_ELEMENT_BOUND,
                 degree_bound: int = DEFAULT_DEGREE_BOUND, completeness: bool = True):
    """Match every printed row against the generators of all step sets.

    A step set matches a row when its generators equal the printed pair, or
    the reflected set's do (the table is given up to the ``x = y`` symmetry).
    Returns the per-row matches and the finite-group step sets no row covers.
    The second list needs the group of every candidate (slow, tens of seconds);
    with ``completeness=False`` only matched sets are explored and it is ``None``.
    """
    candidates = nonsingular_with_group()
    gens = {s: generators(s) for s in candidates}
    orders: dict = {}

    def order_of(s):
        if s not in orders:
            orders[s] = group_order(s, element_bound, degree_bound)
        return orders[s]

    matches = []
    covered = set()
    for idx, (k, tx, ty) in enumerate(TABLE2, start=1):
        members = []
        for s in candidates:
            gx, gy = gens[s]
            direct = maps_equal(gx, tx) and maps_equal(gy, ty)
            mirrored = (maps_equal(swap_variables(gy), tx) and maps_equal(swap_variables(gx), ty))
            if direct or mirrored:
                members.append(s)
        covered.update(members)
        covered.update(reflect(s) for s in members)
        matches.append(TableRowMatch(idx, k, members,
                                     [order_of(s).order for s in members]))
    if not completeness:
        return matches, None
    uncovered = [s for s in candidates if order_of(s).finite and s not in covered]
    return matches, uncovered


__all__ = [
    "RationalMap", "Fraction2", "OrbitResult", "compose", "maps_equal", "generators",
    "kernel_invariance_check", "group_order", "finite_group_survey", "survey_csv",
    "match_table2", "TABLE2", "finiteness_predicates", "degree_growth",
]
