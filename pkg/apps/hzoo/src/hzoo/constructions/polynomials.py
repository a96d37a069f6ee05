"""Polynomials built from the Vandermonde product and its squared-coordinate variant."""

from typing import Sequence

from hzoo.core.diffops import ExpPoly
from hzoo.core.errors import UsageError
from hzoo.core.polyring import (
    CoefficientField,
    GaussRational,
    I,
    Poly,
    Scalar,
    re_im,
    substitute,
)
from hzoo.utils.logs import logger


def _check_dim(d: int) -> None:
    if not isinstance(d, int) or d < 2:
        raise UsageError(f"dimension must be an integer >= 2, got {d!r}")


def vandermonde(d: int) -> Poly:
    """V(y) = prod_{i<j} (y_i - y_j); d! terms with coefficients +-1."""
    _check_dim(d)
    result = Poly.one(d)
    for j in range(1, d):
        yj = Poly.variable(j, d)
        for i in range(j):
            result = result * (Poly.variable(i, d) - yj)
    logger.debug(f"vandermonde({d}) expanded to {len(result)} terms")
    return result


def squares(d: int) -> dict[int, Poly]:
    """Bindings y_i -> x_i^2."""
    return {i: Poly.variable(i, d) ** 2 for i in range(d)}


def f_d(d: int) -> Poly:
    """f_d(x) = prod_{i<j} (x_i^2 - x_j^2), the Vandermonde product at squared coordinates."""
    return substitute(vandermonde(d), squares(d))


def g_d(d: int) -> Poly:
    """x_1 * ... * x_d * f_d(x)."""
    monomial = Poly(d, {(1,) * d: 1})
    return monomial * f_d(d)


def h_d(d: int) -> ExpPoly:
    """e^{x_1 + ... + x_d} * V(x), a Laplace eigenfunction with eigenvalue d."""
    return ExpPoly((1,) * d, vandermonde(d))


def planar_vanisher(points: Sequence[Scalar]) -> tuple[Poly, Poly]:
    """Real and imaginary parts of prod_j (z - p_j) with z = x1 + i*x2.

    Both parts are harmonic in the plane and their common zero set contains
    every p_j. An empty point set gives the constant 1.
    """
    gauss = CoefficientField.QQ_I
    z = Poly.variable(0, 2, gauss) + Poly.variable(1, 2, gauss).scale(I)
    product = Poly.one(2, gauss)
    for p in points:
        product = product * (z - GaussRational.lift(p))
    return re_im(product)
