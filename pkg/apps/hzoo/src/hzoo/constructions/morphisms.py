"""Harmonic morphisms R^m -> R^2 and the polynomial families they generate."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from hzoo.core.errors import UsageError
from hzoo.core.polyring import CoefficientField, I, Poly, re_im, substitute
from hzoo.utils.logs import logger


@dataclass(frozen=True)
class MorphismPair:
    """A map (phi1, phi2): R^m -> R^2 given by two real polynomials of equal arity."""

    phi1: Poly
    phi2: Poly

    def __post_init__(self):
        if self.phi1.arity != self.phi2.arity:
            raise UsageError(
                f"morphism components have arities {self.phi1.arity} and {self.phi2.arity}"
            )
        if CoefficientField.QQ_I in (self.phi1.field, self.phi2.field):
            raise UsageError("morphism components must be real polynomials")

    @property
    def arity(self) -> int:
        return self.phi1.arity

    def complex_form(self) -> Poly:
        """phi1 + i*phi2 as a Gaussian polynomial."""
        return self.phi1.to_gauss() + self.phi2.to_gauss().scale(I)


def morphism_from_complex(F: Poly) -> MorphismPair:
    """Split a Gaussian polynomial F into the pair (Re F, Im F)."""
    return MorphismPair(*re_im(F))


def quadratic_morphism(n: int) -> MorphismPair:
    """phi1 = sum x_{2j-1}^2 - x_{2j}^2, phi2 = sum 2 x_{2j-1} x_{2j} on R^{2n}."""
    if not isinstance(n, int) or n < 1:
        raise UsageError(f"n must be an integer >= 1, got {n!r}")
    m = 2 * n
    phi1, phi2 = Poly.zero(m), Poly.zero(m)
    for j in range(n):
        u, v = Poly.variable(2 * j, m), Poly.variable(2 * j + 1, m)
        phi1 = phi1 + u * u - v * v
        phi2 = phi2 + (u * v).scale(2)
    return MorphismPair(phi1, phi2)


def pk_family(n: int, k_max: int) -> list[Poly]:
    """P_k = Re (phi1 + i*phi2)^{2k+1} for k = 0..k_max, with (phi1, phi2) = quadratic_morphism(n).

    Every P_k is harmonic, has degree 4k+2 and is divisible by phi1.
    """
    if not isinstance(k_max, int) or k_max < 0:
        raise UsageError(f"k_max must be a non-negative integer, got {k_max!r}")
    F = quadratic_morphism(n).complex_form()
    F2 = F * F
    family, odd_power = [], F
    for k in range(k_max + 1):
        if k:
            odd_power = odd_power * F2
        family.append(re_im(odd_power)[0])
    logger.debug(f"pk_family(n={n}) degrees: {[p.degree() for p in family]}")
    return family


def xi_ansatz(g: Sequence[Poly]) -> list[Poly]:
    """xi = (1 - G, i(1 + G), -2 g_1, ..., -2 g_L) with G = sum g_j^2.

    Inputs are univariate polynomials in z (arity 1); the outputs are Gaussian and
    satisfy sum_j xi_j^2 == 0 identically.
    """
    if not g:
        raise UsageError("the ansatz needs at least one polynomial g")
    lifted = []
    for gj in g:
        if gj.arity != 1:
            raise UsageError(f"ansatz polynomials must be univariate, got arity {gj.arity}")
        lifted.append(gj.to_gauss())
    G = Poly.zero(1, CoefficientField.QQ_I)
    for gj in lifted:
        G = G + gj * gj
    return [1 - G, (1 + G).scale(I), *(gj.scale(-2) for gj in lifted)]


def odd_morphism(m: int, g: Sequence[Poly]) -> MorphismPair:
    """Harmonic morphism R^m -> C given by sum_j xi_j(z) x_j with z = x_{m-1} + i x_m.

    `g` holds at most m-4 univariate polynomials; shorter vectors are padded with
    zeros so that xi always has m-2 components.
    """
    if not isinstance(m, int) or m < 5 or m % 2 == 0:
        raise UsageError(f"m must be an odd integer >= 5, got {m!r}")
    if not 1 <= len(g) <= m - 4:
        raise UsageError(f"expected between 1 and {m - 4} ansatz polynomials, got {len(g)}")
    padded = list(g) + [Poly.zero(1)] * (m - 4 - len(g))
    xi = xi_ansatz(padded)
    gauss = CoefficientField.QQ_I
    z = Poly.variable(m - 2, m, gauss) + Poly.variable(m - 1, m, gauss).scale(I)
    F = Poly.zero(m, gauss)
    for j, xij in enumerate(xi):
        F = F + substitute(xij, {0: z}) * Poly.variable(j, m, gauss)
    return morphism_from_complex(F)
