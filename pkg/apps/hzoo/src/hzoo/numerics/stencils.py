"""Floating-point oracles: finite-difference Laplacian and boundary scans."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from hzoo.core.config import config
from hzoo.core.errors import UsageError

ScalarFunction = Callable[[Sequence[float]], float]


def fd_laplacian(f: ScalarFunction, x: Sequence[float], h: Optional[float] = None) -> float:
    """Second-order central difference Laplacian sum_i (f(x+h e_i) - 2f(x) + f(x-h e_i)) / h^2.

    Exact up to rounding on polynomials of degree <= 3. Returns NaN when any
    stencil sample is not finite.
    """
    h = config.HZOO_FD_STEP if h is None else h
    if h <= 0:
        raise UsageError(f"stencil step must be positive, got {h}")
    x = np.asarray(x, dtype=float)
    centre = f(x)
    if not math.isfinite(centre):
        return math.nan
    total = 0.0
    for i in range(x.size):
        step = np.zeros_like(x)
        step[i] = h
        forward, backward = f(x + step), f(x - step)
        if not (math.isfinite(forward) and math.isfinite(backward)):
            return math.nan
        total += (forward - 2.0 * centre + backward) / (h * h)
    return float(total)


def richardson_ratio(
    f: ScalarFunction, x: Sequence[float], h: float, reference: float = 0.0
) -> float:
    """residual(h) / residual(h/2) against the exact Laplacian `reference`.

    Close to 4 for a second-order stencil; NaN if the finer residual vanishes.
    """
    coarse = abs(fd_laplacian(f, x, h) - reference)
    fine = abs(fd_laplacian(f, x, h / 2) - reference)
    if fine == 0 or not math.isfinite(fine) or not math.isfinite(coarse):
        return math.nan
    return coarse / fine


@dataclass(frozen=True)
class Segment:
    """Straight boundary piece start + t (end - start), t in [0, 1]."""

    start: tuple[float, ...]
    end: tuple[float, ...]

    def __post_init__(self):
        if len(self.start) != len(self.end):
            raise UsageError("segment endpoints have different dimensions")

    def at(self, t: float) -> tuple[float, ...]:
        return tuple(a + t * (b - a) for a, b in zip(self.start, self.end))


def segment(start: Sequence[float], end: Sequence[float]) -> Segment:
    return Segment(tuple(float(v) for v in start), tuple(float(v) for v in end))


class BoundaryReport(BaseModel):
    max_abs: float = Field(..., description="Largest |f| over the valid samples")
    samples: int = Field(..., description="Number of valid samples evaluated")
    skipped: int = Field(0, description="Samples outside the domain of f")
    tol: float = Field(..., description="Acceptance threshold on max_abs")
    passed: bool = Field(..., description="True iff some sample was valid and max_abs <= tol")


def boundary_scan(
    f: ScalarFunction,
    segments: Sequence[Segment],
    n: int,
    tol: Optional[float] = None,
) -> BoundaryReport:
    """Sample n evenly spaced points on every segment and report max |f|.

    Non-finite samples (e.g. the half-strip denominator guard) are skipped and
    counted, never treated as zeros.
    """
    if n < 2:
        raise UsageError(f"need at least 2 samples per segment, got {n}")
    tol = config.HZOO_TOL_BOUNDARY if tol is None else tol
    max_abs, evaluated, skipped = 0.0, 0, 0
    for seg in segments:
        for j in range(n):
            value = f(seg.at(j / (n - 1)))
            if not math.isfinite(value):
                skipped += 1
                continue
            evaluated += 1
            max_abs = max(max_abs, abs(value))
    return BoundaryReport(
        max_abs=max_abs,
        samples=evaluated,
        skipped=skipped,
        tol=tol,
        passed=evaluated > 0 and max_abs <= tol,
    )
