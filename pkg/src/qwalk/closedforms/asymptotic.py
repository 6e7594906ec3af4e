"""Growth of the totals ``a(n) = [t^(2n-1)] H(1, t)`` for ``{N, SE, SW}``."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .axis_symmetric import h_total

SAMPLE = (50, 100, 200, 400)


def ratio(n: int) -> float:
    """``r(n) = a(n) 4 pi n^2 / (8^n sqrt 2)``, with ``a(n) / 8^n`` formed exactly."""
    scaled = Fraction(h_total(n), 8 ** n)
    return float(scaled) * 4 * math.pi * n * n / math.sqrt(2)


@dataclass
class AsymptoticReport:
    ratios: dict[int, float]
    richardson: float
    errors: dict[int, float] = field(default_factory=dict)

    def monotone(self) -> bool:
        errs = [self.errors[n] for n in sorted(self.errors)]
        return all(b < a for a, b in zip(errs, errs[1:]))

    def to_dict(self) -> dict:
        return {"ratios": {str(n): r for n, r in self.ratios.items()},
                "richardson": self.richardson, "monotone": self.monotone()}


def transcendence_asymptotic(sample=SAMPLE) -> AsymptoticReport:
    """Ratios at each sample point and ``2 r(2m) - r(m)`` at the last point
    (``r(n) = 1 + c/n + ...``; the second-last sample must be half the last)."""
    if min(sample) < 1:
        raise ValueError("sample points must be positive")
    ratios = {n: ratio(n) for n in sample}
    last = max(sample)
    half = ratios.get(last // 2)
    if half is None or last % 2:
        half = ratio(last // 2)
    rich = 2 * ratios[last] - half
    return AsymptoticReport(ratios, rich, {n: abs(r - 1) for n, r in ratios.items()})
