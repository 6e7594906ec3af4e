"""Guessing linear recurrences with polynomial coefficients (P-recurrences).

An ansatz of order ``r`` and degree ``d`` is ``sum_j p_j(n) a(n+j) = 0`` with
``deg p_j <= d``.  Its coefficients span the integer nullspace of a linear system
built from the first terms; a candidate is accepted only if it also holds on every
remaining term (the guard).
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

import flint

DEFAULT_ORDER = 8
DEFAULT_DEGREE = 8
DEFAULT_TERMS = 150
DEFAULT_GUARD = 20
PRIMES = (2**61 - 1, 2**31 - 1)


class InsufficientTerms(ValueError):
    pass


def _poly_eval(p: list[int], n: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * n + c
    return acc


def _poly_text(p: list[int]) -> str:
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        mono = "" if k == 0 else ("n" if k == 1 else f"n**{k}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f"{sign}{body}"
    return out


@dataclass(frozen=True)
class Recurrence:
    """``sum_j p_j(n) a(n+j) = 0``; ``coeffs[j][k]`` is the ``n^k`` coefficient of ``p_j``.

    Stored with integer coefficients of overall content 1 and a positive leading
    coefficient in ``p_r``.
    """
    coeffs: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        return max((max((k for k, c in enumerate(p) if c), default=0) for p in self.coeffs))

    @classmethod
    def normalised(cls, coeffs) -> "Recurrence":
        rows = [[Fraction(c) for c in p] for p in coeffs]
        while rows and not any(rows[-1]):
            rows.pop()
        if not rows:
            raise ValueError("the zero recurrence")
        den = lcm(*(c.denominator for p in rows for c in p))
        ints = [[int(c * den) for c in p] for p in rows]
        g = 0
        for p in ints:
            for c in p:
                g = gcd(g, c)
        ints = [[c // g for c in p] for p in ints]
        lead = next(c for c in reversed(ints[-1]) if c)
        if lead < 0:
            ints = [[-c for c in p] for p in ints]
        width = max(len(p) for p in ints)
        return cls(tuple(tuple(p + [0] * (width - len(p))) for p in ints))

    def residual(self, seq, n: int):
        return sum(_poly_eval(list(p), n) * seq[n + j] for j, p in enumerate(self.coeffs))

    def holds_on(self, seq, start: int = 0) -> bool:
        return all(self.residual(seq, n) == 0 for n in range(start, len(seq) - self.order))

    def generate(self, initial, count: int, fallback=None) -> list:
        """Extend ``initial`` to ``count`` terms.

        Where ``p_r(n)`` vanishes the next term is not determined; it is then taken
        from ``fallback`` (or the call fails).
        """
        r = self.order
        out = list(initial[:r])
        lead = list(self.coeffs[-1])
        for n in range(0, count - r):
            head = _poly_eval(lead, n)
            if head == 0:
                if fallback is None or n + r >= len(fallback):
                    raise ArithmeticError(f"leading coefficient vanishes at n = {n}")
                out.append(fallback[n + r])
                continue
            acc = sum(_poly_eval(list(self.coeffs[j]), n) * out[n + j] for j in range(r))
            v = Fraction(-acc, head)
            out.append(v.numerator if v.denominator == 1 else v)
        return out[:count]

    def text(self) -> str:
        """``(n+4)*a(n+2) - (2*n+5)*a(n+1) - 3*(n+1)*a(n) = 0``."""
        terms = []
        for j in range(self.order, -1, -1):
            p = list(self.coeffs[j])
            if not any(p):
                continue
            g = 0
            for c in p:
                g = gcd(g, c)
            lead = next(c for c in reversed(p) if c)
            sign = -1 if lead < 0 else 1
            scale = g * sign
            reduced = [c // scale for c in p]
            shift = "a(n)" if j == 0 else f"a(n+{j})"
            nonzero = sum(1 for c in reduced if c)
            if nonzero == 1 and reduced[0]:
                body = f"{g}*{shift}" if g != 1 else shift
            else:
                inner = _poly_text(reduced)
                if nonzero == 1 and reduced[0] == 0 and next(c for c in reduced if c) == 1:
                    poly = inner
                else:
                    poly = f"({inner})"
                body = f"{g}*{poly}*{shift}" if g != 1 else f"{poly}*{shift}"
            terms.append(("-" if sign < 0 else "+", body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out + " = 0"

    def to_dict(self) -> dict:
        return {"order": self.order, "degree": self.degree,
                "coefficients": [list(p) for p in self.coeffs], "text": self.text()}


@dataclass
class GuessReport:
    sequence_id: str
    max_order: int
    max_degree: int
    terms: int
    guard: int
    recurrence: Recurrence | None = None
    tried: list[tuple[int, int]] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.recurrence is not None

    @property
    def outcome(self) -> str:
        return "Found" if self.found else "NotFound"

    def to_dict(self) -> dict:
        out = {"sequence": self.sequence_id, "outcome": self.outcome,
               "bounds": {"order": self.max_order, "degree": self.max_degree},
               "terms": self.terms, "guard": self.guard}
        if self.recurrence is not None:
            out["recurrence"] = self.recurrence.to_dict()
        else:
            out["note"] = (f"no recurrence of order <= {self.max_order} and degree <= "
                           f"{self.max_degree} fits {self.terms} terms")
        return out


def ansatz_bounds(max_order: int, max_degree: int) -> list[tuple[int, int]]:
    """``(r, d)`` pairs by increasing ``r + d``, then increasing ``r``."""
    pairs = [(r, d) for r in range(1, max_order + 1) for d in range(max_degree + 1)]
    return sorted(pairs, key=lambda p: (p[0] + p[1], p[0]))


def required_terms(max_order: int, max_degree: int, guard: int) -> int:
    return (max_order + 1) * (max_degree + 1) + guard + max_order


def _as_integers(seq) -> list[int]:
    den = lcm(*(Fraction(v).denominator for v in seq)) if seq else 1
    return [int(Fraction(v) * den) for v in seq]


def _system(seq: list[int], r: int, d: int, rows: int) -> list[list[int]]:
    out = []
    for n in range(rows):
        powers = [n ** k for k in range(d + 1)]
        out.append([pk * seq[n + j] for j in range(r + 1) for pk in powers])
    return out


def _full_rank_mod_p(matrix: list[list[int]], cols: int) -> bool:
    """A trivial nullspace mod ``p`` forces a trivial nullspace over the rationals."""
    for p in PRIMES:
        m = flint.nmod_mat([[v % p for v in row] for row in matrix], p)
        if m.rank() == cols:
            return True
    return False


def _nullspace(matrix: list[list[int]], cols: int) -> list[list[int]]:
    mat = flint.fmpz_mat(matrix)
    basis, nullity = mat.nullspace()
    return [[int(basis[i, c]) for i in range(cols)] for c in range(nullity)]


def fit(seq, r: int, d: int, guard: int) -> Recurrence | None:
    """The recurrence of shape ``(r, d)`` fitted on all but the last ``guard`` terms
    and checked on every term, or ``None``."""
    ints = _as_integers(seq)
    cols = (r + 1) * (d + 1)
    rows = len(ints) - guard - r
    if rows < cols:
        raise InsufficientTerms(f"ansatz ({r}, {d}) needs {cols + guard + r} terms, got {len(ints)}")
    matrix = _system(ints, r, d, rows)
    if _full_rank_mod_p(matrix, cols):
        return None
    for vec in _nullspace(matrix, cols):
        coeffs = [vec[j * (d + 1):(j + 1) * (d + 1)] for j in range(r + 1)]
        if not any(coeffs[-1]):
            continue
        rec = Recurrence.normalised(coeffs)
        if rec.holds_on(ints):
            return rec
    return None


def guess_p_recurrence(seq, max_order: int = DEFAULT_ORDER, max_degree: int = DEFAULT_DEGREE,
                       guard: int = DEFAULT_GUARD, sequence_id: str = "") -> GuessReport:
    need = required_terms(max_order, max_degree, guard)
    if len(seq) < need:
        raise InsufficientTerms(f"bounds ({max_order}, {max_degree}) with guard {guard} "
                                f"need {need} terms, got {len(seq)}")
    report = GuessReport(sequence_id, max_order, max_degree, len(seq), guard)
    for r, d in ansatz_bounds(max_order, max_degree):
        report.tried.append((r, d))
        rec = fit(seq, r, d, guard)
        if rec is not None:
            report.recurrence = rec
            break
    return report


# -- survey over the eleven classes ------------------------------------------------


@dataclass
class SurveyEntry:
    cls: int
    steps: str
    report: GuessReport
    singular: bool
    group_finite: bool | None
    group_label: str
    predicted_finite: bool | None

    @property
    def consistent(self) -> bool:
        """Finite group, symmetry prediction and guess outcome agree.

        Singular classes have algebraic series and no group; they only need a guess.
        """
        if self.singular:
            return self.report.found
        return self.group_finite == self.predicted_finite == self.report.found

    def to_dict(self) -> dict:
        return {"class": self.cls, "steps": self.steps, "singular": self.singular,
                "group": self.group_label, "predicted_finite": self.predicted_finite,
                "guess": self.report.to_dict(), "consistent": self.consistent}


def _survey_one(args) -> SurveyEntry:
    from .enumeration import count_totals
    from .group import finiteness_predicates, group_order
    from .stepset import CANONICAL, is_singular

    k, n_terms, max_order, max_degree, guard, element_bound, degree_bound = args
    s = CANONICAL[k]
    seq = count_totals(s, n_terms - 1)
    report = guess_p_recurrence(seq, max_order, max_degree, guard, sequence_id=f"class {k}")
    if is_singular(s):
        return SurveyEntry(k, str(s), report, True, None, "singular", None)
    res = group_order(s, element_bound, degree_bound)
    return SurveyEntry(k, str(s), report, False, res.finite, res.label(),
                       any(finiteness_predicates(s).values()))


def holonomy_evidence_survey(n_terms: int = DEFAULT_TERMS, max_order: int = DEFAULT_ORDER,
                             max_degree: int = DEFAULT_DEGREE, guard: int = DEFAULT_GUARD,
                             element_bound: int = 200, degree_bound: int = 64,
                             classes=range(1, 12), jobs: int = 1, progress=None) -> list[SurveyEntry]:
    tasks = [(k, n_terms, max_order, max_degree, guard, element_bound, degree_bound)
             for k in classes]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_survey_one, tasks))
    else:
        entries = []
        for t in tasks:
            if progress:
                progress(f"guessing class {t[0]}")
            entries.append(_survey_one(t))
    return entries


def survey_csv(entries: list[SurveyEntry]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["class", "steps", "singular", "group", "symmetry_predicts_finite", "guess",
                "recurrence_order", "recurrence_degree", "consistent"])
    for e in entries:
        rec = e.report.recurrence
        w.writerow([e.cls, e.steps, str(e.singular).lower(), e.group_label,
                    "" if e.predicted_finite is None else str(e.predicted_finite).lower(),
                    e.report.outcome, rec.order if rec else "", rec.degree if rec else "",
                    str(e.consistent).lower()])
    return buf.getvalue()
