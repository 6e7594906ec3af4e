"""Step sets on the eight nearest-neighbour directions and their classification.

A step set is an immutable set of :class:`Direction` values.  The 56 step sets
of cardinality three fall into empty models (no nonempty walk), singular
models (the quarter-plane constraint degenerates to a single half-plane
constraint) of four inequality types, and seven non-singular classes.
"""
from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field


class Direction(enum.Enum):
    N = (0, 1)
    NE = (1, 1)
    E = (1, 0)
    SE = (1, -1)
    S = (0, -1)
    SW = (-1, -1)
    W = (-1, 0)
    NW = (-1, 1)

    @property
    def dx(self) -> int:
        return self.value[0]

    @property
    def dy(self) -> int:
        return self.value[1]

    @classmethod
    def from_vector(cls, v: tuple[int, int]) -> "Direction":
        return _BY_VECTOR[tuple(v)]


_BY_VECTOR = {d.value: d for d in Direction}
ORDER = list(Direction)  # canonical order N, NE, E, SE, S, SW, W, NW
_RANK = {d: k for k, d in enumerate(ORDER)}


class StepSetError(ValueError):
    pass


@dataclass(frozen=True)
class StepSet:
    members: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        for d in self.members:
            if not isinstance(d, Direction):
                raise TypeError(f"not a Direction: {d!r}")

    @classmethod
    def of(cls, *names: str) -> "StepSet":
        return cls(frozenset(Direction[n] for n in names))

    @classmethod
    def from_vectors(cls, vectors) -> "StepSet":
        return cls(frozenset(Direction.from_vector(v) for v in vectors))

    @classmethod
    def from_mask(cls, mask: str) -> "StepSet":
        """Inverse of :attr:`mask` (e.g. ``"01001010"`` is Kreweras)."""
        if len(mask) != 8 or set(mask) - {"0", "1"}:
            raise StepSetError(f"bad mask {mask!r}")
        return cls(frozenset(d for d, b in zip(ORDER, mask) if b == "1"))

    def __iter__(self):
        return iter(sorted(self.members, key=_RANK.__getitem__))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, d) -> bool:
        return d in self.members

    def __lt__(self, other: "StepSet") -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (len(self), [_RANK[d] for d in self])

    @property
    def vectors(self) -> list[tuple[int, int]]:
        return [d.value for d in self]

    @property
    def mask(self) -> str:
        return "".join("1" if d in self.members else "0" for d in ORDER)

    def __str__(self) -> str:
        return ",".join(d.name for d in self)

    def __repr__(self) -> str:
        return f"StepSet({str(self)!r})"

    def issubset(self, other: "StepSet") -> bool:
        return self.members <= other.members


def parse_stepset(text: str) -> StepSet:
    """Parse comma-separated compass tokens such as ``"NE,S,W"``."""
    tokens = [tok.strip().upper() for tok in text.split(",") if tok.strip()]
    seen = set()
    for tok in tokens:
        if tok not in Direction.__members__:
            raise StepSetError(f"unknown direction {tok!r}")
        if tok in seen:
            raise StepSetError(f"duplicate direction {tok!r}")
        seen.add(tok)
    return StepSet.of(*tokens)


def format_stepset(s: StepSet) -> str:
    return str(s)


def _map(s: StepSet, f) -> StepSet:
    return StepSet.from_vectors(f(*v) for v in s.vectors)


def reflect(s: StepSet) -> StepSet:
    """Swap coordinates: ``(i, j) -> (j, i)``."""
    return _map(s, lambda i, j: (j, i))


def rev(s: StepSet) -> StepSet:
    """Reverse every step: ``(i, j) -> (-i, -j)``."""
    return _map(s, lambda i, j: (-i, -j))


def flip_x(s: StepSet) -> StepSet:
    return _map(s, lambda i, j: (-i, j))


def flip_y(s: StepSet) -> StepSet:
    return _map(s, lambda i, j: (i, -j))


@dataclass(frozen=True)
class SymmetryReport:
    x_axis_symmetric: bool
    y_axis_symmetric: bool
    rev_invariant: bool
    reflect_rev_invariant: bool
    reflect_invariant: bool


def symmetry_report(s: StepSet) -> SymmetryReport:
    # x-axis symmetric: (i, j) in s  =>  (i, -j) in s; y-axis: (-i, j)
    return SymmetryReport(
        x_axis_symmetric=flip_y(s) == s,
        y_axis_symmetric=flip_x(s) == s,
        rev_invariant=rev(s) == s,
        reflect_rev_invariant=reflect(rev(s)) == s,
        reflect_invariant=reflect(s) == s,
    )


_NO_FIRST_STEP = StepSet.of("SE", "S", "SW", "W", "NW")


def has_valid_walk(s: StepSet) -> bool:
    """True iff a nonempty quarter-plane walk exists, i.e. some step is legal from the origin."""
    return not s.issubset(_NO_FIRST_STEP)


def playable_steps(s: StepSet) -> StepSet:
    """Steps that occur in at least one quarter-plane walk.

    A step is playable once every coordinate it decreases can first be raised
    by an already playable step; starting from the steps legal at the origin
    this closure is exact.
    """
    play = {d for d in s if d.dx >= 0 and d.dy >= 0}
    changed = True
    while changed:
        changed = False
        up_x = any(d.dx > 0 for d in play)
        up_y = any(d.dy > 0 for d in play)
        for d in s:
            if d in play:
                continue
            if (d.dx >= 0 or up_x) and (d.dy >= 0 or up_y):
                play.add(d)
                changed = True
    return StepSet(frozenset(play))


FAN_A = StepSet.of("W", "NW", "N", "NE", "E")
FAN_B = StepSet.of("NE", "N", "NW", "W", "SW")
SINGULAR_FANS = (FAN_A, reflect(FAN_A), rev(FAN_A), reflect(rev(FAN_A)), FAN_B, reflect(FAN_B))


def is_singular(s: StepSet) -> bool:
    return any(s.issubset(fan) for fan in SINGULAR_FANS)


@dataclass(frozen=True, order=True)
class ClassId:
    """``kind`` is ``"empty"``, ``"singular"`` (``index`` 1..4) or ``"nonsingular"`` (5..11)."""

    kind: str
    index: int = 0

    @property
    def table_row(self) -> int | None:
        return self.index if self.kind != "empty" else None

    def __str__(self) -> str:
        if self.kind == "empty":
            return "empty"
        if self.kind == "singular":
            return f"singular type {self.index} (class {self.index})"
        return f"class {self.index}"


EMPTY = ClassId("empty")

CANONICAL = {
    1: StepSet.of("N", "NE", "E"),
    2: StepSet.of("N", "NE", "SW"),
    3: StepSet.of("NE", "E", "NW"),
    4: StepSet.of("NE", "W", "SW"),
    5: StepSet.of("NE", "S", "W"),
    6: StepSet.of("N", "E", "SW"),
    7: StepSet.of("N", "SE", "W"),
    8: StepSet.of("N", "SE", "SW"),
    9: StepSet.of("NE", "SE", "W"),
    10: StepSet.of("NE", "SE", "NW"),
    11: StepSet.of("N", "NW", "SE"),
}

CLASS_NAMES = {
    1: "unconstrained",
    2: "A >= B, C >= 0",
    3: "A + B >= C",
    4: "A >= B + C",
    5: "Kreweras",
    6: "reverse Kreweras",
    7: "tandem (Motzkin)",
    8: "axis-symmetric, holonomic",
    9: "axis-symmetric, holonomic",
    10: "non-holonomic",
    11: "non-holonomic",
}

_NONSINGULAR = {}
for _k in range(5, 12):
    _NONSINGULAR[CANONICAL[_k]] = _k
    _NONSINGULAR[reflect(CANONICAL[_k])] = _k


def governing_coordinate(s: StepSet) -> int | None:
    """Index (0 for x, 1 for y) of the one binding constraint of a singular set.

    Works on the playable steps; ``None`` when neither coordinate ever
    decreases.  When both decrease, the set lies in a fan where one coordinate
    dominates the other step by step, and the dominated one governs.
    """
    play = playable_steps(s)
    down = [any(v[c] < 0 for v in play.vectors) for c in (0, 1)]
    if not any(down):
        return None
    if down[0] != down[1]:
        return 0 if down[0] else 1
    if all(j >= i for i, j in play.vectors):
        return 0
    if all(i >= j for i, j in play.vectors):
        return 1
    raise ValueError(f"{s} has two independent constraints; not singular")


def inequality_type(s: StepSet) -> int:
    """Inequality type 1..4 of a singular model, from its governing constraint.

    With ``p`` playable steps raising and ``m`` lowering the governing
    coordinate: no lowering step gives type 1 (A, B, C >= 0); ``p = m = 1`` gives
    type 2 (A >= B, C >= 0); ``p = 2, m = 1`` type 3 (A + B >= C); ``p = 1, m = 2``
    type 4 (A >= B + C).
    """
    c = governing_coordinate(s)
    if c is None:
        return 1
    comps = [v[c] for v in playable_steps(s).vectors]
    p, m = comps.count(1), comps.count(-1)
    return {(1, 1): 2, (2, 1): 3, (1, 2): 4}[(p, m)]


def classify(s: StepSet) -> ClassId:
    if len(s) != 3:
        raise StepSetError(f"classify expects exactly three steps, got {len(s)}")
    if not has_valid_walk(s):
        return EMPTY
    if is_singular(s):
        return ClassId("singular", inequality_type(s))
    try:
        return ClassId("nonsingular", _NONSINGULAR[s])
    except KeyError:  # pragma: no cover - the sweep proves this unreachable
        raise StepSetError(f"{s} is non-singular but matches no known class") from None


def all_triples() -> list[StepSet]:
    return [StepSet(frozenset(c)) for c in itertools.combinations(ORDER, 3)]


def all_subsets() -> list[StepSet]:
    return [StepSet(frozenset(d for d, b in zip(ORDER, bits) if b))
            for bits in itertools.product((0, 1), repeat=8)]


@dataclass(frozen=True)
class TripleRecord:
    steps: StepSet
    cls: ClassId
    reflect_partner: StepSet
    symmetry: SymmetryReport

    def to_dict(self) -> dict:
        d = {"steps": str(self.steps), "class": str(self.cls),
             "reflect_partner": str(self.reflect_partner)}
        d.update(vars(self.symmetry))
        return d


@dataclass
class ClassSweep:
    records: list[TripleRecord]

    @property
    def total(self) -> int:
        return len(self.records)

    def _count(self, kind: str) -> int:
        return sum(r.cls.kind == kind for r in self.records)

    @property
    def empty(self) -> int:
        return self._count("empty")

    @property
    def singular(self) -> int:
        return self._count("singular")

    @property
    def nonsingular(self) -> int:
        return self._count("nonsingular")

    def _orbits(self, kind=None) -> set:
        return {frozenset((r.steps, r.reflect_partner)) for r in self.records
                if r.cls.kind != "empty" and (kind is None or r.cls.kind == kind)}

    @property
    def reflect_invariant_nonempty(self) -> int:
        return sum(r.cls.kind != "empty" and r.symmetry.reflect_invariant for r in self.records)

    @property
    def reflect_classes(self) -> int:
        return len(self._orbits())

    @property
    def singular_reflect_classes(self) -> int:
        return len(self._orbits("singular"))

    @property
    def nonsingular_reflect_classes(self) -> int:
        return len(self._orbits("nonsingular"))

    @property
    def final_classes(self) -> int:
        return len({r.cls for r in self.records if r.cls.kind != "empty"})

    def summary(self) -> dict:
        return {
            "triples": self.total,
            "empty": self.empty,
            "singular": self.singular,
            "nonsingular": self.nonsingular,
            "reflect_invariant_nonempty": self.reflect_invariant_nonempty,
            "reflect_classes": self.reflect_classes,
            "singular_reflect_classes": self.singular_reflect_classes,
            "nonsingular_reflect_classes": self.nonsingular_reflect_classes,
            "final_classes": self.final_classes,
        }

    def to_json(self) -> str:
        return json.dumps([r.to_dict() for r in self.records], indent=1)


def enumerate_all_classes() -> ClassSweep:
    return ClassSweep([
        TripleRecord(s, classify(s), reflect(s), symmetry_report(s)) for s in all_triples()
    ])


def resolve_steps(text: str) -> StepSet:
    """Parse a step set, accepting class numbers 1..11 as aliases."""
    text = text.strip()
    if text.isdigit():
        k = int(text)
        if k not in CANONICAL:
            raise StepSetError(f"no class {k}; classes are numbered 1..11")
        return CANONICAL[k]
    return parse_stepset(text)
