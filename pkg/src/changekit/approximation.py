"""Taylor approximation of F around x, the quadratic error bound between
F and f, the linearization property and the Box-Cox specialization."""
from __future__ import annotations

import math
from typing import Iterable, Sequence, TextIO

from .core import eval_F, eval_f
from .errors import DomainError
from .types import PositivePair, check_lambda

# Coefficients beyond this order are numerically negligible or overflow-prone.
MAX_TAYLOR_ORDER = 64


def _check_order(n: int) -> int:
    n = int(n)
    if not 1 <= n <= MAX_TAYLOR_ORDER:
        raise DomainError(f"Taylor order must be in [1, {MAX_TAYLOR_ORDER}], got {n}")
    return n


def rising_factorial(a: float, m: int) -> float:
    """a * (a + 1) * ... * (a + m - 1); empty product 1 for m = 0."""
    out = 1.0
    for i in range(m):
        out *= a + i
    return out


def taylor_coefficient(lam: float, k: int, x: float) -> float:
    """k-th Taylor coefficient of y -> F(x, y) around y = x, for k >= 2.

    (-1)**(k+1) * [lam * (lam+1) * ... * (lam+k-2)] / (k! * x**(k+lam-1)).
    The Gamma-function quotient is evaluated as a rising factorial, which
    stays well-defined (and zero) at lam = 0 where the quotient of two
    Gammas would be NaN.
    """
    lam = check_lambda(lam)
    if k < 2:
        raise DomainError(f"taylor_coefficient requires k >= 2, got {k}")
    if x <= 0:
        raise DomainError(f"expansion point must be positive, got {x!r}")
    sign = 1.0 if k % 2 == 1 else -1.0
    return sign * rising_factorial(lam, k - 1) / (math.factorial(k) * x ** (k + lam - 1.0))


def taylor_F(lam: float, p: PositivePair, order: int) -> float:
    """Order-n truncation f(x, y) + sum_{k=2}^{n} c_k * (y - x)**k.

    n = 1 returns eval_f exactly.  Convergence is only guaranteed for
    |y - x| < x (the binomial-series radius); outside that regime the
    truncation is still evaluated, caller beware.
    """
    lam = check_lambda(lam)
    n = _check_order(order)
    total = eval_f(lam, p)
    d = p.y - p.x
    d_pow = d
    rising = 1.0
    for k in range(2, n + 1):
        rising *= lam + (k - 2)
        d_pow *= d
        sign = 1.0 if k % 2 == 1 else -1.0
        total += sign * rising / (math.factorial(k) * p.x ** (k + lam - 1.0)) * d_pow
    return total


def remainder_bound(lam: float, p: PositivePair) -> float:
    """Global bound lam * (y - x)**2 / min(x, y)**(1 + lam) on |F - f|.

    Asserted for lam >= 0 only; for negative lam the expression is negative
    while the left side is not, so we refuse rather than return a vacuous
    bound.  (Empirically verified up to lam = 2; lam > 2 is unflagged but
    unverified territory.)
    """
    lam = check_lambda(lam)
    if lam < 0:
        raise DomainError(f"remainder_bound requires lambda >= 0, got {lam}")
    return lam * (p.y - p.x) ** 2 / min(p.x, p.y) ** (1.0 + lam)


def linearization_residual(lam: float, x: float, h: float) -> float:
    """F(x, x + h) - f(x, x + h).

    f is the linearization of y -> F(x, y) at x, so residual / h -> 0 as
    h -> 0, and |residual| <= remainder_bound for lam >= 0.
    """
    lam = check_lambda(lam)
    p = PositivePair(x, x + h)
    return eval_F(lam, p) - eval_f(lam, p)


def box_cox(lam: float, y: float) -> float:
    """F(1, y): a Box-Cox transformation of parameter 1 - lam.

    Closed forms: lam = 1 gives ln(y), lam = 1/2 gives 2*(sqrt(y) - 1),
    lam = 1/5 gives (5/4)*(y**(4/5) - 1), lam = 0 gives y - 1.
    """
    lam = check_lambda(lam)
    y = float(y)
    if not (math.isfinite(y) and y > 0):
        raise DomainError(f"box_cox requires y > 0, got {y!r}")
    return eval_F(lam, PositivePair(1.0, y))


DEFAULT_CURVE_LAMBDAS = (0.0, 0.2, 0.5, 1.0)


def default_curve_grid(points: int = 500, lo: float = 0.01, hi: float = 5.0) -> list[float]:
    """Uniform grid of ``points`` values on [lo, hi]."""
    if points < 2:
        raise DomainError(f"grid needs at least 2 points, got {points}")
    if not (0 < lo < hi):
        raise DomainError(f"grid range must satisfy 0 < lo < hi, got ({lo}, {hi})")
    step = (hi - lo) / (points - 1)
    return [lo + i * step for i in range(points)]


def curve_table(
    lambdas: Sequence[float] = DEFAULT_CURVE_LAMBDAS,
    ys: Iterable[float] | None = None,
) -> tuple[list[str], list[list[float]]]:
    """Table of (y, F_lam(1, y)) columns, one per lambda.

    Returns (header, rows) with header ``['y', 'F_<lam>', ...]``; lambda is
    rendered with up to 4 significant digits in the column names.
    """
    lambdas = [check_lambda(l) for l in lambdas]
    grid = list(default_curve_grid() if ys is None else ys)
    for y in grid:
        if not (math.isfinite(y) and y > 0):
            raise DomainError(f"grid points must be positive, got {y!r}")
    header = ["y"] + [f"F_{lam:.4g}" for lam in lambdas]
    rows = [[y] + [box_cox(lam, y) for lam in lambdas] for y in grid]
    return header, rows


def write_curve_csv(stream: TextIO, header: Sequence[str], rows: Iterable[Sequence[float]]) -> None:
    """Serialize a curve table as CSV with LF line endings and full-precision floats."""
    stream.write(",".join(header) + "\n")
    for row in rows:
        stream.write(",".join(repr(v) for v in row) + "\n")
