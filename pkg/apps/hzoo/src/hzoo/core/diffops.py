"""Differential operators on polynomials and exponential-weight polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from hzoo.core.errors import UsageError
from hzoo.core.polyring import Poly, Scalar, as_rational, partial


@dataclass(frozen=True)
class ExpPoly:
    """The function e^{w.x} * body(x).

    Attributes:
        weight: The rational vector w.
        body: Polynomial factor, same arity as the weight.
    """

    weight: tuple[Fraction, ...]
    body: Poly

    def __post_init__(self):
        weight = tuple(as_rational(w) for w in self.weight)
        if len(weight) != self.body.arity:
            raise UsageError(
                f"weight has length {len(weight)} but body has arity {self.body.arity}"
            )
        object.__setattr__(self, "weight", weight)

    @property
    def is_zero(self) -> bool:
        return self.body.is_zero

    @property
    def arity(self) -> int:
        return self.body.arity


def laplacian(p: Poly) -> Poly:
    """Sum of the pure second partials; zero iff p is harmonic."""
    result = Poly.zero(p.arity, p.field)
    for i in range(p.arity):
        result = result + partial(partial(p, i), i)
    return result


def gradient(p: Poly) -> list[Poly]:
    return [partial(p, i) for i in range(p.arity)]


def dir_derivative(p: Poly, v: Sequence[Scalar | str]) -> Poly:
    """Directional derivative sum_i v_i * d_i p."""
    if len(v) != p.arity:
        raise UsageError(f"direction has length {len(v)}, expected {p.arity}")
    result = Poly.zero(p.arity, p.field)
    for i, vi in enumerate(v):
        vi = as_rational(vi)
        if vi:
            result = result + partial(p, i).scale(vi)
    return result


def konig_apply(p: Poly, a: Scalar | str, b: Scalar | str, c: Scalar | str) -> Poly:
    """sum_i (y_i^2 + a*y_i + b) d_ii p + c * sum_i d_i p.

    On the Vandermonde polynomial V_d every term but sum_i y_i^2 d_ii vanishes,
    so the result is d(d-1)(d-2)/3 * V_d whatever the triple (a, b, c).
    """
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    result = Poly.zero(p.arity, p.field)
    for i in range(p.arity):
        y = Poly.variable(i, p.arity, p.field)
        weight = y * y + y.scale(a) + Poly.constant(b, p.arity, p.field)
        first = partial(p, i)
        result = result + weight * partial(first, i) + first.scale(c)
    return result


def exp_laplacian(h: ExpPoly) -> ExpPoly:
    """Laplacian of e^{w.x} p expressed on the same weight.

    Uses Δ(e^{w.x} p) = e^{w.x} (|w|^2 p + 2 w.∇p + Δp).
    """
    norm = sum((w * w for w in h.weight), Fraction(0))
    body = h.body.scale(norm) + dir_derivative(h.body, h.weight).scale(2) + laplacian(h.body)
    return ExpPoly(h.weight, body)
