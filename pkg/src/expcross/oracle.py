"""Brute-force root finding used to validate the closed-form path.

Everything here is built from exponentials, logarithms, and interval
halving only.  This module must stay independent of the W evaluator
(no import of lambertw or intersect) so the two routes share no failure
modes; tests enforce that structurally.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Union

from .errors import DomainError

__all__ = [
    "WResidual",
    "DiagonalGap",
    "FullGap",
    "ScalarFnSpec",
    "RootBracket",
    "scan_sign_changes",
    "bisect",
    "all_intersections_numeric",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class WResidual:
    """f(w) = w*e**w - z, the defining-equation defect."""

    z: float

    def __call__(self, w: float) -> float:
        try:
            return w * math.exp(w) - self.z
        except OverflowError:
            return math.inf


@dataclass(frozen=True)
class DiagonalGap:
    """g(x) = b**x - x, zero at fixed points of the exponential."""

    b: float

    def __call__(self, x: float) -> float:
        try:
            return self.b**x - x
        except OverflowError:
            return math.inf


@dataclass(frozen=True)
class FullGap:
    """h(x) = b**x - log_b(x) on x > 0, zero at every intersection."""

    b: float

    def __call__(self, x: float) -> float:
        try:
            return self.b**x - math.log(x) / math.log(self.b)
        except OverflowError:
            return math.inf


ScalarFnSpec = Union[WResidual, DiagonalGap, FullGap]


@dataclass(frozen=True)
class RootBracket:
    """A certified sign-change interval; degenerate (lo == hi) at an exact zero."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self) -> None:
        if self.lo == self.hi and self.f_lo == 0.0:
            return
        if not self.lo < self.hi:
            raise DomainError(f"bracket needs lo < hi, got [{self.lo!r}, {self.hi!r}]")
        if not (self.f_lo * self.f_hi < 0.0 or self.f_lo == 0.0 or self.f_hi == 0.0):
            raise DomainError(
                f"bracket [{self.lo!r}, {self.hi!r}] has no sign change: "
                f"f_lo={self.f_lo!r}, f_hi={self.f_hi!r}"
            )


def scan_sign_changes(spec: ScalarFnSpec, lo: float, hi: float, n: int) -> list[RootBracket]:
    """Evaluate spec at n+1 uniform nodes and bracket every sign change.

    Exact zeros at nodes yield degenerate [x, x] brackets and suppress the
    adjacent panels (their products are zero, not sign changes).  Panels
    touching a non-finite value are skipped; the skip count is logged.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
        raise DomainError(f"scan interval needs lo < hi, got [{lo!r}, {hi!r}]")
    if n < 2:
        raise DomainError(f"scan needs n >= 2 panels, got {n}")
    if isinstance(spec, FullGap) and lo <= 0.0:
        raise DomainError(f"FullGap is defined on x > 0, got lo={lo!r}")

    step = (hi - lo) / n
    xs = [lo + i * step for i in range(n)] + [hi]
    fs = [spec(x) for x in xs]

    brackets: list[RootBracket] = []
    skipped = 0
    for i in range(n + 1):
        if not math.isfinite(fs[i]):
            skipped += 1
            continue
        if fs[i] == 0.0:
            brackets.append(RootBracket(lo=xs[i], hi=xs[i], f_lo=0.0, f_hi=0.0))
            continue
        if i == n:
            continue
        if not math.isfinite(fs[i + 1]) or fs[i + 1] == 0.0:
            continue
        if fs[i] * fs[i + 1] < 0.0:
            brackets.append(RootBracket(lo=xs[i], hi=xs[i + 1], f_lo=fs[i], f_hi=fs[i + 1]))
    if skipped:
        log.warning("scan_sign_changes: skipped %d node(s) with non-finite values", skipped)
    return brackets


def bisect(spec: ScalarFnSpec, bracket: RootBracket, abs_tol: float) -> float:
    """Pure interval halving down to width abs_tol; returns the midpoint.

    Deterministic and derivative-free by design: the oracle must not share
    machinery with any Newton-family refinement it is checking.
    """
    if not abs_tol > 0.0:
        raise DomainError(f"abs_tol must be positive, got {abs_tol}")
    lo, hi, f_lo, f_hi = bracket.lo, bracket.hi, bracket.f_lo, bracket.f_hi
    if lo == hi or f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    while hi - lo >= abs_tol:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        f_mid = spec(mid)
        if f_mid == 0.0:
            return mid
        if (f_lo < 0.0) == (f_mid < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def all_intersections_numeric(
    b: float, x_max: float, n: int, abs_tol: float
) -> list[float]:
    """Every root of b**x = log_b(x) on (0, x_max], at scan resolution.

    Scans FullGap(b) from 1e-9 upward, refines each bracket by bisection,
    and merges refined roots closer than 10*abs_tol (adjacent panels can
    both bracket one root when a node lands near it).
    """
    if not math.isfinite(b) or b <= 0.0 or b == 1.0:
        raise DomainError(f"base must be positive and != 1, got {b!r}")
    if not x_max > 0.0:
        raise DomainError(f"x_max must be positive, got {x_max!r}")

    x_min = 1e-9
    if x_max <= x_min:
        raise DomainError(f"x_max={x_max!r} does not exceed the scan floor {x_min}")
    spec = FullGap(b)
    roots: list[float] = []
    for bracket in scan_sign_changes(spec, x_min, x_max, n):
        root = bisect(spec, bracket, abs_tol)
        if roots and root - roots[-1] < 10.0 * abs_tol:
            continue
        roots.append(root)
    return roots
