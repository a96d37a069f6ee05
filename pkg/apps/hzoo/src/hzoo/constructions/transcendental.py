"""Separable trigonometric products and the closed-form strip / half-strip functions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, NamedTuple, Optional, Sequence

from hzoo.core.config import config
from hzoo.core.errors import UsageError
from hzoo.core.polyring import as_rational


class TrigKind(str, Enum):
    SIN = "sin"
    COS = "cos"
    SINH = "sinh"


_EVAL: dict[TrigKind, Callable[[float], float]] = {
    TrigKind.SIN: math.sin,
    TrigKind.COS: math.cos,
    TrigKind.SINH: math.sinh,
}

# sign s in d^2/dx^2 k(a x) = s a^2 k(a x)
_SECOND_DERIVATIVE_SIGN: dict[TrigKind, int] = {
    TrigKind.SIN: -1,
    TrigKind.COS: -1,
    TrigKind.SINH: 1,
}


@dataclass(frozen=True)
class TrigFactor:
    kind: TrigKind
    frequency: Fraction
    variable: int

    def __post_init__(self):
        object.__setattr__(self, "kind", TrigKind(self.kind))
        object.__setattr__(self, "frequency", as_rational(self.frequency))
        if self.frequency == 0:
            raise UsageError(f"zero frequency on x{self.variable + 1}")


@dataclass(frozen=True)
class TrigProduct:
    """prod_i k_i(a_i x_i) with exactly one factor per variable x1..xd, in order."""

    factors: tuple[TrigFactor, ...]

    def __post_init__(self):
        factors = tuple(self.factors)
        if not factors:
            raise UsageError("a trigonometric product needs at least one factor")
        for i, factor in enumerate(factors):
            if factor.variable != i:
                raise UsageError(f"factor {i} acts on x{factor.variable + 1}, expected x{i + 1}")
        object.__setattr__(self, "factors", factors)

    @property
    def dim(self) -> int:
        return len(self.factors)

    @property
    def eigenvalue(self) -> Fraction:
        """Exact Laplace eigenvalue sum_i s_i a_i^2."""
        return sum(
            (_SECOND_DERIVATIVE_SIGN[f.kind] * f.frequency**2 for f in self.factors),
            Fraction(0),
        )

    def is_harmonic(self) -> bool:
        return self.eigenvalue == 0

    def evaluate(self, x: Sequence[float]) -> float:
        if len(x) != self.dim:
            raise UsageError(f"expected {self.dim} coordinates, got {len(x)}")
        value = 1.0
        for factor, xi in zip(self.factors, x):
            value *= _EVAL[factor.kind](float(factor.frequency) * xi)
        return value

    def to_function(self) -> Callable[[Sequence[float]], float]:
        return self.evaluate


def psi(a: Sequence[Fraction | int | str]) -> TrigProduct:
    """sin(a_1 x_1) ... sin(a_{d-1} x_{d-1}) sinh(a_d x_d).

    Harmonic exactly when a_d^2 = a_1^2 + ... + a_{d-1}^2; it vanishes on the walls
    x_i = 0 and x_i = pi / a_i of the prism over the first d-1 coordinates.
    """
    if len(a) < 2:
        raise UsageError(f"psi needs at least two frequencies, got {len(a)}")
    d = len(a)
    factors = [TrigFactor(TrigKind.SIN, ai, i) for i, ai in enumerate(a[:-1])]
    factors.append(TrigFactor(TrigKind.SINH, a[-1], d - 1))
    return TrigProduct(tuple(factors))


def pythagorean_psi(p: int, q: int) -> TrigProduct:
    """psi with integer frequencies (p^2 - q^2, 2pq, p^2 + q^2), harmonic for every p > q >= 1."""
    if not (isinstance(p, int) and isinstance(q, int) and p > q >= 1):
        raise UsageError(f"need integers p > q >= 1, got p={p!r}, q={q!r}")
    return psi([p * p - q * q, 2 * p * q, p * p + q * q])


#### Half-strip function ####


class HalfStripSample(NamedTuple):
    value: float
    valid: bool
    denominator: float


class HalfStripFunction:
    """Closed-form harmonic function vanishing on the boundary of the half-strip
    {0 <= x2, -pi/2 <= x1 <= pi/2}.

    Points where |sin(x1)cosh(x2) + sqrt(sin^2(x1) + sinh^2(x2))| < eps_den are
    outside the domain of the formula; calling the function there returns NaN and
    `evaluate` reports `valid=False`.
    """

    def __init__(self, eps_den: Optional[float] = None):
        self.eps_den = config.HZOO_F0_EPS_DEN if eps_den is None else eps_den

    def evaluate(self, x: Sequence[float]) -> HalfStripSample:
        if len(x) != 2:
            raise UsageError(f"the half-strip function takes 2 coordinates, got {len(x)}")
        x1, x2 = float(x[0]), float(x[1])
        s, c = math.sin(x1), math.cos(x1)
        sh, ch = math.sinh(x2), math.cosh(x2)
        root = math.sqrt(s * s + sh * sh)
        den = s * ch + root
        if not math.isfinite(den) or abs(den) < self.eps_den:
            return HalfStripSample(math.nan, False, den)
        head = c * sh * root / den
        tail = 1.0 + (c * c * sh * sh) / (den * den)
        return HalfStripSample(head / tail, True, den)

    def __call__(self, x: Sequence[float]) -> float:
        return self.evaluate(x).value


def f0_closure(eps_den: Optional[float] = None) -> HalfStripFunction:
    return HalfStripFunction(eps_den)


#### Strip functions ####


def _exp_sin(x: Sequence[float]) -> float:
    return math.exp(x[0]) * math.sin(x[1])


def _sinh_sin(x: Sequence[float]) -> float:
    return math.sinh(x[0]) * math.sin(x[1])


def strip_functions() -> tuple[Callable[[Sequence[float]], float], Callable[[Sequence[float]], float]]:
    """e^{x1} sin(x2) and sinh(x1) sin(x2); both harmonic, both zero on x2 = 0 and x2 = pi."""
    return _exp_sin, _sinh_sin
