"""Core value types shared across the library."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError, ValidationError


def check_lambda(lam: float) -> float:
    """Validate the interpolation parameter: any finite real."""
    lam = float(lam)
    if not math.isfinite(lam):
        raise DomainError(f"lambda must be finite, got {lam!r}")
    return lam


@dataclass(frozen=True)
class PositivePair:
    """An observation (x, y): past and present value, both strictly positive.

    ``unit`` is display metadata only; no unit arithmetic is performed.
    """

    x: float
    y: float
    unit: str = ""

    def __post_init__(self):
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not (math.isfinite(self.x) and self.x > 0):
            raise ValidationError(f"past value must be a finite positive number, got {self.x!r}")
        if not (math.isfinite(self.y) and self.y > 0):
            raise ValidationError(f"present value must be a finite positive number, got {self.y!r}")

    def scaled(self, c: float) -> "PositivePair":
        """The pair (c*x, c*y), c > 0."""
        return PositivePair(c * self.x, c * self.y, self.unit)

    def swapped(self) -> "PositivePair":
        return PositivePair(self.y, self.x, self.unit)


@dataclass(frozen=True)
class LabeledObservation:
    """A PositivePair with a text label, for ranking."""

    label: str
    pair: PositivePair

    def __post_init__(self):
        if not self.label:
            raise ValidationError("observation label must be nonempty")


@dataclass
class IndicatorReport:
    """Per-observation computed values plus a dense rank."""

    label: str
    pair: PositivePair
    abs_change: float
    rel_change: float
    indicator: float
    rank: int = field(default=0)
