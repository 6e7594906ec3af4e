"""Exact truncated series in ``t`` with Laurent-polynomial coefficients in ``x, y``.

A :class:`Series` is a finite Laurent series in ``t`` carrying an absolute
precision: ``sum_{n < prec} c_n t^n + O(t^prec)``.  Coefficients ``c_n`` are
:class:`Laurent` polynomials in ``x`` and ``y`` over the rationals.  Precision
is propagated through every operation the way p-adic numbers propagate it, so a
result never claims more coefficients than its inputs determine.  Polynomials in
``t`` are represented exactly with ``prec = inf``.

Rationals are Python ``int`` where possible and :class:`fractions.Fraction`
otherwise; most walk series have integer coefficients and stay fast.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Callable, Iterable, Iterator

INF = math.inf
DEFAULT_ORDER = 30


def qdiv(a, b):
    """Exact quotient of two rationals, kept as ``int`` when it is integral."""
    if isinstance(a, int) and isinstance(b, int):
        if a % b == 0:
            return a // b
        return Fraction(a, b)
    r = Fraction(a) / Fraction(b)
    return r.numerator if r.denominator == 1 else r


def qnorm(a):
    if isinstance(a, Fraction) and a.denominator == 1:
        return a.numerator
    return a


def _rational_sqrt(c):
    c = Fraction(c)
    if c < 0:
        return None
    n, d = math.isqrt(c.numerator), math.isqrt(c.denominator)
    if n * n != c.numerator or d * d != c.denominator:
        return None
    return qnorm(Fraction(n, d))


class Laurent:
    """Sparse Laurent polynomial in ``x`` and ``y`` with rational coefficients.

    ``terms`` maps exponent pairs ``(i, j)`` to nonzero coefficients.
    Instances are treated as immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {k: qnorm(v) for k, v in terms.items() if v} if terms else {}

    @classmethod
    def _raw(cls, terms: dict) -> "Laurent":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, c) -> "Laurent":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c=1, i: int = 0, j: int = 0) -> "Laurent":
        return cls({(i, j): c})

    @classmethod
    def from_x(cls, coeffs: dict) -> "Laurent":
        return cls({(i, 0): c for i, c in coeffs.items()})

    @classmethod
    def from_y(cls, coeffs: dict) -> "Laurent":
        return cls({(0, j): c for j, c in coeffs.items()})

    # -- predicates -----------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Laurent):
            other = Laurent.const(other)
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    def constant(self):
        return self.terms.get((0, 0), 0)

    def x_range(self) -> tuple[int, int]:
        xs = [i for i, _ in self.terms]
        return (min(xs), max(xs)) if xs else (0, 0)

    def y_range(self) -> tuple[int, int]:
        ys = [j for _, j in self.terms]
        return (min(ys), max(ys)) if ys else (0, 0)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other) -> "Laurent":
        if not isinstance(other, Laurent):
            if isinstance(other, Series):
                return NotImplemented
            other = Laurent.const(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = qnorm(s)
            else:
                out.pop(k, None)
        return Laurent._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Laurent":
        return Laurent._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> "Laurent":
        if not isinstance(other, Laurent):
            if isinstance(other, Series):
                return NotImplemented
            other = Laurent.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "Laurent":
        return (-self) + other

    def __mul__(self, other) -> "Laurent":
        if not isinstance(other, Laurent):
            if isinstance(other, Series):
                return NotImplemented
            if not other:
                return Laurent()
            return Laurent._raw({k: qnorm(v * other) for k, v in self.terms.items()})
        out: dict = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + a * b
        return Laurent({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def scale(self, c) -> "Laurent":
        return self * c

    def shift(self, di: int = 0, dj: int = 0) -> "Laurent":
        """Multiply by the monomial ``x^di y^dj``."""
        return Laurent._raw({(i + di, j + dj): v for (i, j), v in self.terms.items()})

    def inverse(self) -> "Laurent":
        if not self.is_monomial():
            raise ZeroDivisionError(f"{self} is not a unit (not a monomial)")
        ((i, j), c), = self.terms.items()
        return Laurent._raw({(-i, -j): qdiv(1, c)})

    def __pow__(self, k: int) -> "Laurent":
        if k < 0:
            return self.inverse() ** (-k)
        out = Laurent.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- substitutions ----------------------------------------------------
    def subs_monomial(self, xto: tuple[int, int], yto: tuple[int, int]) -> "Laurent":
        """Substitute ``x -> x^a y^b`` and ``y -> x^c y^d`` for ``xto=(a,b)``, ``yto=(c,d)``."""
        (a, b), (c, d) = xto, yto
        out: dict = {}
        for (i, j), v in self.terms.items():
            k = (a * i + c * j, b * i + d * j)
            out[k] = out.get(k, 0) + v
        return Laurent(out)

    def swap(self) -> "Laurent":
        return Laurent._raw({(j, i): v for (i, j), v in self.terms.items()})

    def at_x1(self) -> "Laurent":
        """Specialise ``x = 1``."""
        out: dict = {}
        for (i, j), v in self.terms.items():
            out[(0, j)] = out.get((0, j), 0) + v
        return Laurent(out)

    def at_y1(self) -> "Laurent":
        out: dict = {}
        for (i, j), v in self.terms.items():
            out[(i, 0)] = out.get((i, 0), 0) + v
        return Laurent(out)

    def at_x0(self) -> "Laurent":
        """Specialise ``x = 0``; refuses negative powers of ``x``."""
        if any(i < 0 for i, _ in self.terms):
            raise ValueError("cannot set x = 0 in a Laurent polynomial with negative x powers")
        return Laurent._raw({k: v for k, v in self.terms.items() if k[0] == 0})

    def at_y0(self) -> "Laurent":
        if any(j < 0 for _, j in self.terms):
            raise ValueError("cannot set y = 0 in a Laurent polynomial with negative y powers")
        return Laurent._raw({k: v for k, v in self.terms.items() if k[1] == 0})

    def value(self):
        """Sum of all coefficients (the value at ``x = y = 1``)."""
        return qnorm(sum(self.terms.values()))

    def split_x(self) -> tuple["Laurent", "Laurent", "Laurent"]:
        pos, zero, neg = {}, {}, {}
        for k, v in self.terms.items():
            (pos if k[0] > 0 else zero if k[0] == 0 else neg)[k] = v
        return Laurent._raw(pos), Laurent._raw(zero), Laurent._raw(neg)

    def divide_exact(self, divisor: "Laurent", var: str = "x") -> "Laurent":
        """Exact division by a Laurent polynomial in one variable; raises on a remainder."""
        idx = 0 if var == "x" else 1
        if any(k[1 - idx] for k in divisor.terms):
            raise ValueError("divisor must involve only the division variable")
        dpoly = sorted(((k[idx], v) for k, v in divisor.terms.items()), reverse=True)
        dtop, dlead = dpoly[0]
        slices: dict = {}
        for k, v in self.terms.items():
            slices.setdefault(k[1 - idx], {})[k[idx]] = v
        quot: dict = {}
        for other, rem in slices.items():
            lo = min(rem)
            while rem:
                e = max(rem)
                shift = e - dtop
                if shift + dpoly[-1][0] < lo:
                    raise ArithmeticError(f"{divisor} does not divide {self}")
                c = qdiv(rem[e], dlead)
                quot[(shift, other) if idx == 0 else (other, shift)] = c
                for de, dv in dpoly:
                    s = rem.get(shift + de, 0) - c * dv
                    if s:
                        rem[shift + de] = qnorm(s)
                    else:
                        rem.pop(shift + de, None)
        return Laurent(quot)

    # -- display -----------------------------------------------------------
    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), v in sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
                ) if s
            )
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


X = Laurent.monomial(1, 1, 0)
Y = Laurent.monomial(1, 0, 1)
ONE = Laurent.const(1)


def _as_laurent(c) -> Laurent:
    return c if isinstance(c, Laurent) else Laurent.const(c)


class Series:
    """Truncated Laurent series in ``t`` with :class:`Laurent` coefficients.

    ``coeffs`` maps each power of ``t`` to its nonzero coefficient; every
    power below ``prec`` absent from it is known to be zero.
    """

    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs: dict | None = None, prec=INF):
        self.prec = prec
        self.coeffs = {}
        for n, c in (coeffs or {}).items():
            if n < prec:
                c = _as_laurent(c)
                if c:
                    self.coeffs[n] = c

    @classmethod
    def _raw(cls, coeffs: dict, prec) -> "Series":
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        obj.prec = prec
        return obj

    @classmethod
    def const(cls, c, prec=INF) -> "Series":
        return cls({0: _as_laurent(c)}, prec)

    @classmethod
    def t(cls, power: int = 1) -> "Series":
        return cls({power: ONE})

    @classmethod
    def zero(cls, prec=INF) -> "Series":
        return cls._raw({}, prec)

    @classmethod
    def from_list(cls, values: Iterable, start: int = 0, prec=None) -> "Series":
        values = list(values)
        return cls({start + k: v for k, v in enumerate(values)},
                   start + len(values) if prec is None else prec)

    # -- basic queries -------------------------------------------------------
    @property
    def val(self):
        """t-valuation; equals ``prec`` for a series known to be zero so far."""
        return min(self.coeffs) if self.coeffs else self.prec

    def is_exact(self) -> bool:
        return self.prec == INF

    def __getitem__(self, n: int) -> Laurent:
        if n >= self.prec:
            raise IndexError(f"coefficient t^{n} is beyond the precision O(t^{self.prec})")
        return self.coeffs.get(n, Laurent())

    def coefficient(self, n: int, i: int = 0, j: int = 0):
        return self[n].terms.get((i, j), 0)

    def scalars(self, order: int | None = None) -> list:
        """Coefficients as rationals (requires constant Laurent coefficients)."""
        top = self.prec if order is None else min(order, self.prec)
        out = []
        for n in range(0, int(top)):
            c = self[n]
            if not c.is_constant():
                raise ValueError(f"coefficient of t^{n} is not a constant: {c}")
            out.append(c.constant())
        return out

    def truncate(self, prec) -> "Series":
        if prec >= self.prec:
            return self
        return Series._raw({n: c for n, c in self.coeffs.items() if n < prec}, prec)

    def map_coeffs(self, f: Callable[[Laurent], Laurent]) -> "Series":
        return Series({n: f(c) for n, c in self.coeffs.items()}, self.prec)

    def items(self) -> Iterator[tuple[int, Laurent]]:
        return iter(sorted(self.coeffs.items()))

    # -- arithmetic ----------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Series":
        if isinstance(other, Series):
            return other
        return Series.const(other)

    def __add__(self, other) -> "Series":
        other = Series._coerce(other)
        prec = min(self.prec, other.prec)
        out = {n: c for n, c in self.coeffs.items() if n < prec}
        for n, c in other.coeffs.items():
            if n >= prec:
                continue
            s = out[n] + c if n in out else c
            if s:
                out[n] = s
            else:
                out.pop(n, None)
        return Series._raw(out, prec)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series._raw({n: -c for n, c in self.coeffs.items()}, self.prec)

    def __sub__(self, other) -> "Series":
        return self + (-Series._coerce(other))

    def __rsub__(self, other) -> "Series":
        return Series._coerce(other) + (-self)

    def __mul__(self, other) -> "Series":
        if not isinstance(other, Series):
            other = _as_laurent(other)
            return Series({n: c * other for n, c in self.coeffs.items()}, self.prec)
        prec = min(self.prec + other.val, other.prec + self.val)
        out: dict = {}
        for n1, c1 in self.coeffs.items():
            for n2, c2 in other.coeffs.items():
                n = n1 + n2
                if n >= prec:
                    continue
                out[n] = out[n] + c1 * c2 if n in out else c1 * c2
        return Series({n: c for n, c in out.items() if c}, prec)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            return self.inverse() ** (-k)
        out = Series.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "Series":
        """Multiply by ``t^k``."""
        return Series._raw({n + k: c for n, c in self.coeffs.items()}, self.prec + k)

    def inverse(self, prec=None) -> "Series":
        """Multiplicative inverse; the leading coefficient must be a monomial.

        ``prec`` is required when ``self`` is exact (the inverse is infinite).
        """
        if not self.coeffs:
            raise ZeroDivisionError("series is zero to its precision")
        v = self.val
        if self.is_exact():
            if prec is None:
                raise ValueError("inverting an exact series needs a target precision")
            rel = prec + v
        else:
            rel = self.prec - v
            if prec is not None:
                rel = min(rel, prec + v)
        lead = self.coeffs[v]
        if not lead.is_monomial():
            raise ZeroDivisionError(f"leading coefficient {lead} is not a unit")
        inv_lead = lead.inverse()
        body = [(k - v, c) for k, c in self.coeffs.items() if k > v]
        h: list = [inv_lead]
        for m in range(1, int(rel)):
            acc = Laurent()
            for k, c in body:
                if k > m:
                    continue
                hk = h[m - k]
                if hk:
                    acc = acc + c * hk
            h.append(-(acc * inv_lead))
        return Series({m - v: c for m, c in enumerate(h)}, rel - v)

    def __truediv__(self, other) -> "Series":
        if not isinstance(other, Series):
            other = _as_laurent(other)
            return self * other.inverse()
        if other.is_exact() and self.is_exact():
            raise ValueError("exact / exact division needs explicit truncation")
        if other.is_exact():
            need = self.prec - self.val - other.val
            return self * other.inverse(prec=need)
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Series":
        return Series._coerce(other) / self

    def sqrt(self) -> "Series":
        """Square root with leading term ``sqrt(c) x^a y^b t^v`` for a square leading term."""
        if self.is_exact():
            raise ValueError("sqrt of an exact series needs explicit truncation")
        if not self.coeffs:
            raise ValueError("sqrt of a series that is zero to its precision")
        v = self.val
        lead = self.coeffs[v]
        if v % 2 or not lead.is_monomial():
            raise ValueError(f"leading term {lead}*t^{v} is not a square monomial")
        ((i, j), c), = lead.terms.items()
        root_c = _rational_sqrt(c)
        if i % 2 or j % 2 or root_c is None:
            raise ValueError(f"leading term {lead}*t^{v} is not a square monomial")
        inv_lead = lead.inverse()
        u = [(k - v, cf * inv_lead) for k, cf in self.coeffs.items()]
        rel = int(self.prec - v)
        ud = dict(u)
        h: list = [ONE]
        for m in range(1, rel):
            acc = ud.get(m, Laurent())
            for k in range(1, m):
                if h[k] and h[m - k]:
                    acc = acc - h[k] * h[m - k]
            h.append(acc * Fraction(1, 2))
        root = Laurent.monomial(root_c, i // 2, j // 2)
        half = v // 2
        return Series({half + m: c * root for m, c in enumerate(h)}, half + rel)

    # -- substitutions ---------------------------------------------------------
    def subs_monomial(self, xto: tuple[int, int], yto: tuple[int, int] = (0, 1)) -> "Series":
        return self.map_coeffs(lambda c: c.subs_monomial(xto, yto))

    def swap_xy(self) -> "Series":
        return self.map_coeffs(Laurent.swap)

    def x_to_y(self) -> "Series":
        """Rename ``x`` to ``y`` (the coefficients must not involve ``y``)."""
        return self.subs_monomial((0, 1), (0, 1))

    def bar_x(self) -> "Series":
        return self.subs_monomial((-1, 0), (0, 1))

    def bar_y(self) -> "Series":
        return self.subs_monomial((1, 0), (0, -1))

    def at_x1(self) -> "Series":
        return self.map_coeffs(Laurent.at_x1)

    def at_y1(self) -> "Series":
        return self.map_coeffs(Laurent.at_y1)

    def at_x0(self) -> "Series":
        return self.map_coeffs(Laurent.at_x0)

    def at_y0(self) -> "Series":
        return self.map_coeffs(Laurent.at_y0)

    def at_1(self) -> "Series":
        return self.map_coeffs(lambda c: Laurent.const(c.value()))

    def compose(self, g: "Series", var: str = "x") -> "Series":
        """Substitute ``var := g`` where ``g`` has nonnegative t-valuation.

        Negative powers of ``var`` require ``g`` to be invertible.
        """
        gv = g.val
        if gv < 0:
            raise ValueError("substituted series must have nonnegative valuation")
        idx = 0 if var == "x" else 1
        powers: dict[int, Series] = {0: Series.const(1)}
        inv = None

        def power(k: int) -> Series:
            nonlocal inv
            if k not in powers:
                if k > 0:
                    powers[k] = power(k - 1) * g
                else:
                    if inv is None:
                        inv = g.inverse()
                    powers[k] = power(k + 1) * inv
            return powers[k]

        prec = self.prec
        for n, c in self.coeffs.items():
            for key in c.terms:
                e = key[idx]
                if e:
                    err = n + g.prec + (abs(e) - 1) * gv if e > 0 else n + g.prec - (abs(e) + 1) * gv
                    prec = min(prec, err)
        out = Series.zero(prec)
        for n, c in sorted(self.coeffs.items()):
            for key, v in c.terms.items():
                e = key[idx]
                if n + e * gv >= prec:
                    continue
                rest = (0, key[1]) if idx == 0 else (key[0], 0)
                term = power(e).truncate(prec - n).shift(n) * Laurent.monomial(v, *rest)
                out = out + term
        return out.truncate(prec)

    def split_x(self) -> tuple["Series", "Series", "Series"]:
        """Split into strictly positive, zero and strictly negative ``x``-exponent parts."""
        parts = ({}, {}, {})
        for n, c in self.coeffs.items():
            for d, piece in zip(parts, c.split_x()):
                if piece:
                    d[n] = piece
        return tuple(Series._raw(d, self.prec) for d in parts)

    def positive_part(self) -> "Series":
        """``f^>=``: terms with nonnegative ``x``-exponent."""
        pos, zero, _ = self.split_x()
        return pos + zero

    def negative_part(self) -> "Series":
        """``f^<=``: terms with nonpositive ``x``-exponent."""
        _, zero, neg = self.split_x()
        return neg + zero

    def y_coefficient(self, j: int) -> "Series":
        """The coefficient of ``y^j`` as a series in ``t`` and ``x``."""
        out = {}
        for n, c in self.coeffs.items():
            piece = {(i, 0): v for (i, jj), v in c.terms.items() if jj == j}
            if piece:
                out[n] = Laurent._raw(piece)
        return Series._raw(out, self.prec)

    # -- comparisons ----------------------------------------------------------
    def first_mismatch(self, other, order=None):
        """First ``(n, i, j, ours, theirs)`` disagreement below the common precision."""
        other = Series._coerce(other)
        top = min(self.prec, other.prec)
        if order is not None:
            top = min(top, order)
        if top == INF:
            raise ValueError("comparison of two exact series needs an order")
        keys = sorted(n for n in set(self.coeffs) | set(other.coeffs) if n < top)
        for n in keys:
            a, b = self[n], other[n]
            if a != b:
                diff = (a - b).terms
                i, j = min(diff, key=lambda k: (k[1], k[0]))
                return (n, i, j, a.terms.get((i, j), 0), b.terms.get((i, j), 0))
        return None

    def agrees(self, other, order=None) -> bool:
        return self.first_mismatch(other, order) is None

    def is_zero(self, order=None) -> bool:
        top = self.prec if order is None else min(order, self.prec)
        return all(n >= top for n in self.coeffs)

    def max_x_width(self) -> dict[int, tuple[int, int]]:
        return {n: c.x_range() for n, c in self.coeffs.items()}

    # -- display / export -----------------------------------------------------
    def __repr__(self) -> str:
        body = " + ".join(f"({c})*t^{n}" for n, c in sorted(self.coeffs.items())) or "0"
        return body if self.is_exact() else f"{body} + O(t^{self.prec})"

    def to_json(self) -> str:
        """Dump as ``{order, terms: [{n, coeffs: [{xexp, yexp, num, den}]}]}``."""
        terms = []
        for n, c in sorted(self.coeffs.items()):
            entries = []
            for (i, j), v in sorted(c.terms.items()):
                v = Fraction(v)
                entry = {"xexp": i, "num": v.numerator, "den": v.denominator}
                if j:
                    entry["yexp"] = j
                entries.append(entry)
            terms.append({"n": n, "coeffs": entries})
        order = None if self.is_exact() else self.prec
        return json.dumps({"order": order, "terms": terms}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Series":
        data = json.loads(text)
        coeffs = {}
        for term in data["terms"]:
            coeffs[term["n"]] = Laurent({
                (e["xexp"], e.get("yexp", 0)): Fraction(e["num"], e["den"]) for e in term["coeffs"]
            })
        prec = INF if data["order"] is None else data["order"]
        return cls(coeffs, prec)


T = Series.t()


def series_x(coeffs: dict, prec=INF) -> Series:
    """Build a series from ``{n: {i: c}}`` (coefficients univariate in ``x``)."""
    return Series({n: Laurent.from_x(c) for n, c in coeffs.items()}, prec)


def laurent_x(coeffs: dict) -> Laurent:
    return Laurent.from_x(coeffs)


def solve_fixed_point(phi: Callable[[Series], Series], order: int, start: Series | None = None,
                      max_iter: int | None = None) -> Series:
    """Solve ``g = phi(g)`` to ``O(t^order)`` by iteration.

    Each pass must raise the known precision; a pass that does not is reported
    as a non-contracting functional.  The returned solution is re-checked to
    satisfy its equation with zero residual.
    """
    g = start if start is not None else Series.zero(prec=0)
    limit = max_iter if max_iter is not None else 4 * order + 10
    for _ in range(limit):
        nxt = phi(g).truncate(order)
        if nxt.prec >= order and g.prec >= order and nxt.agrees(g):
            return nxt
        if nxt.prec <= g.prec and not (nxt.prec >= order):
            raise ArithmeticError(
                f"non-contracting functional: precision stuck at O(t^{g.prec})")
        g = nxt
    raise ArithmeticError(f"fixed-point iteration did not stabilise within {limit} passes")


def newton_fixed_point(F: Callable[[Series], Series], dF: Callable[[Series], Series],
                       order: int, start: Series) -> Series:
    """Solve ``F(g) = 0`` by Newton iteration, doubling the known precision each pass.

    ``start`` must already be a correct approximation to its own precision.
    """
    g = start
    while g.prec < order:
        target = min(2 * g.prec, order)
        lifted = Series(g.coeffs, target)
        g = (lifted - F(lifted) / dF(lifted)).truncate(target)
        if g.prec < target:
            raise ArithmeticError("Newton step lost precision (derivative not a unit?)")
    return g.truncate(order)
