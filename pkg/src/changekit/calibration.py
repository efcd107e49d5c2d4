"""Calibration of lambda from reference judgments, plus the symmetric-choice
diagnostics that single out lambda = 1/2."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .core import eval_f
from .errors import (
    DomainError,
    EqualPastValuesError,
    NumericalError,
    SignMismatchError,
    StagnantPairError,
)
from .types import PositivePair, check_lambda

# Below this the log in the calibration denominator is numerically meaningless.
_MIN_LOG_PAST_RATIO = 1e-12


@dataclass(frozen=True)
class CalibrationInput:
    """Two pairs judged to represent the same amount of change."""

    reference: PositivePair
    comparison: PositivePair

    def __post_init__(self):
        ref, cmp = self.reference, self.comparison
        if ref.x == ref.y:
            raise StagnantPairError(f"reference pair ({ref.x}, {ref.y}) is stagnant")
        if cmp.x == cmp.y:
            raise StagnantPairError(f"comparison pair ({cmp.x}, {cmp.y}) is stagnant")
        if abs(math.log(cmp.x / ref.x)) < _MIN_LOG_PAST_RATIO:
            raise EqualPastValuesError(
                f"past values {ref.x} and {cmp.x} coincide (or nearly so); "
                "lambda is indeterminate"
            )
        if (cmp.y - cmp.x) / (ref.y - ref.x) <= 0:
            raise SignMismatchError(
                "the two pairs change in opposite directions; no lambda equates them"
            )


def calibrate_lambda(inp: CalibrationInput) -> float:
    """The unique lambda giving both pairs the same f value.

    lambda = ln((y2 - x2) / (y1 - x1)) / ln(x2 / x1).  The closed form is
    re-checked against both pairs before returning.
    """
    ref, cmp = inp.reference, inp.comparison
    lam = math.log((cmp.y - cmp.x) / (ref.y - ref.x)) / math.log(cmp.x / ref.x)
    if not math.isfinite(lam):
        raise NumericalError(f"calibration produced a non-finite lambda: {lam!r}")
    f_ref = eval_f(lam, ref)
    f_cmp = eval_f(lam, cmp)
    if abs(f_ref - f_cmp) > 1e-9 * max(1.0, abs(f_ref)):
        raise NumericalError(
            f"calibrated lambda {lam} fails its defining equation: "
            f"f(ref) = {f_ref!r} vs f(cmp) = {f_cmp!r}"
        )
    return lam


def scaled_relative_pair(p: PositivePair, c: float) -> PositivePair:
    """The pair (x/c, y - x + x/c): same absolute change, relative change scaled by c."""
    if not (math.isfinite(c) and c > 0):
        raise DomainError(f"scale factor must be positive, got {c!r}")
    x2 = p.x / c
    y2 = p.y - p.x + x2
    if y2 <= 0:
        raise DomainError(
            f"constructed pair ({x2}, {y2}) leaves the positive domain for C = {c}"
        )
    return PositivePair(x2, y2, p.unit)


def symmetric_scaling_residual(lam: float, p: PositivePair, c: float) -> float:
    """f(Cx, Cy) - f(x/C, y - x + x/C).

    Analytically (C**(1-lam) - C**lam) * f(x, y): identically zero for all
    (p, C) exactly when lam = 1/2.
    """
    lam = check_lambda(lam)
    if not (math.isfinite(c) and c > 0):
        raise DomainError(f"scale factor must be positive, got {c!r}")
    return eval_f(lam, p.scaled(c)) - eval_f(lam, scaled_relative_pair(p, c))


def doubling_example(lam: float) -> tuple[float, float]:
    """(f(2, 4), f(1/2, 3/2)) = (2**(1-lam), 2**lam); equal iff lam = 1/2.

    (2, 4) doubles the absolute change of the reference pair (1, 2),
    (1/2, 3/2) doubles its relative change.
    """
    lam = check_lambda(lam)
    return (
        eval_f(lam, PositivePair(2.0, 4.0)),
        eval_f(lam, PositivePair(0.5, 1.5)),
    )


def mrs_cobb_douglas(lam: float, p: PositivePair) -> float:
    """Marginal rate of substitution of the Cobb-Douglas reading of f.

    With factors L = rel, K = abs and exponents (lam, 1 - lam) this equals
    lam / (1 - lam) * x, which is the past value x exactly when lam = 1/2.
    Only the past value of ``p`` enters; the pair is taken for interface
    uniformity.
    """
    lam = check_lambda(lam)
    if lam == 1.0:
        raise DomainError("marginal rate of substitution is undefined at lambda = 1")
    return lam / (1.0 - lam) * p.x
