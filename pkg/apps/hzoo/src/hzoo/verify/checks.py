"""Certificate-producing checks: exact polynomial identities plus floating-point evidence.

Every check is deterministic: the same inputs give the same certificate,
digest included, whatever order parallel subchecks complete in.
"""

from __future__ import annotations

import math
from math import lcm
from typing import Any, Optional, Sequence

from hzoo.constructions.morphisms import MorphismPair
from hzoo.constructions.transcendental import TrigProduct, psi
from hzoo.core.config import RICHARDSON_RANGE, config
from hzoo.core.diffops import ExpPoly, exp_laplacian, gradient, laplacian
from hzoo.core.errors import FieldMismatchError, UsageError
from hzoo.core.polyring import (
    CoefficientField,
    Coefficient,
    NotDivisible,
    Poly,
    Scalar,
    as_rational,
    eval_exact,
    exact_divide,
    grlex_key,
    partial,
    substitute,
)
from hzoo.core.printing import pretty
from hzoo.geometry.cube import enumerate_faces, restrict
from hzoo.numerics.nodal import NodalCloud
from hzoo.numerics.stencils import (
    ScalarFunction,
    Segment,
    boundary_scan,
    fd_laplacian,
    richardson_ratio,
    segment,
)
from hzoo.utils.logs import logger
from hzoo.utils.utils import inputs_digest, parallel_map
from hzoo.verify.models import Certificate, Subcase


def _verdict(ok: bool) -> str:
    return "pass" if ok else "fail"


def _certify(
    claim_id: str,
    inputs: Sequence[Any],
    subcases: list[Subcase],
    witness: Optional[str] = None,
) -> Certificate:
    verdict = _verdict(all(s.verdict == "pass" for s in subcases))
    if verdict == "pass":
        witness = None
    elif witness is None:
        failing = next(s for s in subcases if s.verdict == "fail")
        witness = failing.name if failing.note is None else f"{failing.name}: {failing.note}"
    certificate = Certificate(
        claim_id=claim_id,
        inputs_digest=inputs_digest(claim_id, *inputs),
        verdict=verdict,
        witness=witness,
        detail=subcases,
    )
    logger.info(f"{claim_id}: {verdict} ({len(subcases)} subcases)")
    if witness is not None:
        logger.warning(f"{claim_id} witness: {witness}")
    return certificate


def _zero_subcase(name: str, residual: Poly) -> Subcase:
    if residual.is_zero:
        return Subcase(name=name, verdict="pass")
    return Subcase(name=name, verdict="fail", note=pretty(residual))


#### Harmonicity and eigenfunctions ####


def check_harmonic(p: Poly) -> Certificate:
    residual = laplacian(p)
    witness = None if residual.is_zero else pretty(residual)
    return _certify("harmonic", [p], [_zero_subcase("laplacian", residual)], witness)


def check_eigen(h: ExpPoly, eigenvalue: Scalar | str) -> Certificate:
    """exp_laplacian(h).body == eigenvalue * h.body, exactly."""
    eigenvalue = as_rational(eigenvalue)
    residual = exp_laplacian(h).body - h.body.scale(eigenvalue)
    witness = None if residual.is_zero else pretty(residual)
    return _certify(
        "eigen",
        [list(h.weight), h.body, eigenvalue],
        [_zero_subcase(f"eigenvalue {eigenvalue}", residual)],
        witness,
    )


def check_nondegenerate(p: Poly) -> Certificate:
    """p depends on every one of its variables."""
    subcases = [
        Subcase(name=f"d/dx{i + 1}", verdict=_verdict(not partial(p, i).is_zero))
        for i in range(p.arity)
    ]
    return _certify("nondegenerate", [p], subcases)


def check_isotropic(components: Sequence[Poly]) -> Certificate:
    """sum_j xi_j^2 == 0 identically."""
    _common_shape(components)
    square_sum = sum((c * c for c in components[1:]), components[0] * components[0])
    witness = None if square_sum.is_zero else pretty(square_sum)
    return _certify("isotropic", [list(components)], [_zero_subcase("sum of squares", square_sum)], witness)


#### Cube skeleton ####


def check_skeleton_vanishing(p: Poly, d: int, k: int) -> Certificate:
    """p restricts to zero on every closed k-face of [-1/2, 1/2]^d."""
    if p.arity != d:
        raise UsageError(f"polynomial arity {p.arity} does not match dimension {d}")
    faces = enumerate_faces(d, k)
    restrictions = parallel_map(lambda face: restrict(p, face), faces)
    subcases = [_zero_subcase(face.label(), r) for face, r in zip(faces, restrictions)]
    witness = next(
        (f"{face.label()}: {pretty(r)}" for face, r in zip(faces, restrictions) if not r.is_zero),
        None,
    )
    return _certify(f"skeleton_vanishing(d={d},k={k})", [p], subcases, witness)


#### Families ####


def _divides(divisor: Poly, member: Poly) -> Subcase:
    quotient = exact_divide(member, divisor)
    if isinstance(quotient, NotDivisible):
        mono = Poly(member.arity, {quotient.remainder_monomial: 1})
        return Subcase(name=pretty(member), verdict="fail", note=f"remainder term {pretty(mono)}")
    ok = quotient * divisor == member
    return Subcase(
        name=pretty(member),
        verdict=_verdict(ok),
        note=f"quotient degree {quotient.degree()}",
    )


def check_divides_family(divisor: Poly, family: Sequence[Poly]) -> Certificate:
    if divisor.is_zero:
        raise UsageError("the divisor must be nonzero")
    subcases = parallel_map(lambda member: _divides(divisor, member), family)
    return _certify("divides_family", [divisor, list(family)], subcases)


def _common_shape(family: Sequence[Poly]) -> tuple[int, CoefficientField]:
    if not family:
        raise UsageError("the family is empty")
    arity, field = family[0].arity, family[0].field
    for p in family[1:]:
        if p.arity != arity:
            raise UsageError(f"family members have arities {arity} and {p.arity}")
        if p.field is not field:
            raise FieldMismatchError("family mixes rational and Gaussian polynomials")
    return arity, field


def _coefficient_rows(family: Sequence[Poly], field: CoefficientField) -> list[list[Coefficient]]:
    monomials = sorted({e for p in family for e in p.terms}, key=grlex_key, reverse=True)
    rows = [[p.coefficient(e) for e in monomials] for p in family]
    if field is CoefficientField.QQ:
        # clear denominators so elimination runs on integers
        rows = [[c * lcm(*(v.denominator for v in row)) for c in row] for row in rows]
    return rows


def exact_rank(rows: list[list[Coefficient]]) -> int:
    """Rank by fraction-free (Bareiss) elimination with column pivot search."""
    m = [list(row) for row in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    rank, previous = 0, 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((r for r in range(rank, n_rows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        lead = m[rank][col]
        for r in range(rank + 1, n_rows):
            below = m[r][col]
            for c in range(col + 1, n_cols):
                m[r][c] = (lead * m[r][c] - below * m[rank][c]) / previous
            m[r][col] = 0
        previous = lead
        rank += 1
    return rank


def check_linear_independence(family: Sequence[Poly]) -> Certificate:
    """Full rank of the coefficient matrix over the union of occurring monomials."""
    _, field = _common_shape(family)
    rank = exact_rank(_coefficient_rows(family, field))
    degrees = ", ".join(str(p.degree()) for p in family)
    subcases = [
        Subcase(name="rank", verdict=_verdict(rank == len(family)), note=f"{rank} of {len(family)}"),
        Subcase(name="degrees", verdict="pass", note=f"({degrees})"),
    ]
    return _certify("linear_independence", [list(family)], subcases)


#### Morphisms ####


def check_conformality(m: MorphismPair) -> Certificate:
    """|grad phi1|^2 == |grad phi2|^2, grad phi1 . grad phi2 == 0 and both components harmonic."""
    g1, g2 = gradient(m.phi1), gradient(m.phi2)
    zero = Poly.zero(m.arity)
    norms = sum((a * a - b * b for a, b in zip(g1, g2)), zero)
    dot = sum((a * b for a, b in zip(g1, g2)), zero)
    subcases = [
        _zero_subcase("equal gradient norms", norms),
        _zero_subcase("orthogonal gradients", dot),
        _zero_subcase("phi1 harmonic", laplacian(m.phi1)),
        _zero_subcase("phi2 harmonic", laplacian(m.phi2)),
    ]
    return _certify("conformality", [m.phi1, m.phi2], subcases)


def _compose(p2: Poly, m: MorphismPair) -> Poly:
    if p2.arity != 2:
        raise UsageError(f"target polynomial must have 2 variables, got {p2.arity}")
    return substitute(p2, {0: m.phi1, 1: m.phi2}, arity=m.arity)


def check_composition(p2: Poly, m: MorphismPair) -> Certificate:
    """p2(phi1, phi2) is harmonic."""
    composed = _compose(p2, m)
    residual = laplacian(composed)
    witness = None if residual.is_zero else pretty(residual)
    subcases = [_zero_subcase(f"laplacian of {pretty(p2)} after morphism", residual)]
    return _certify("composition", [p2, m.phi1, m.phi2], subcases, witness)


def check_composed_family(family: Sequence[Poly], m: MorphismPair) -> Certificate:
    """Each p(phi1, phi2) is harmonic and the composed family stays linearly independent."""
    _common_shape(family)
    composed = parallel_map(lambda p: _compose(p, m), family)
    subcases = [
        _zero_subcase(f"{pretty(p)} after morphism", laplacian(c)) for p, c in zip(family, composed)
    ]
    rank = exact_rank(_coefficient_rows(composed, CoefficientField.QQ))
    subcases.append(
        Subcase(
            name="independence",
            verdict=_verdict(rank == len(composed)),
            note=f"rank {rank} of {len(composed)}",
        )
    )
    return _certify("composed_family", [list(family), m.phi1, m.phi2], subcases)


def common_zero_witness(
    divisor: Poly, family: Sequence[Poly], probes: Sequence[Sequence[Scalar | str]]
) -> Certificate:
    """Every family member vanishes at every probe point of the divisor's zero set."""
    points = [tuple(as_rational(v) for v in probe) for probe in probes]
    for point in points:
        if eval_exact(divisor, point):
            raise UsageError(f"probe {tuple(str(v) for v in point)} is not a zero of the divisor")
    subcases = []
    for member in family:
        misses = [pt for pt in points if eval_exact(member, pt)]
        note = None if not misses else f"nonzero at ({', '.join(str(v) for v in misses[0])})"
        subcases.append(Subcase(name=pretty(member), verdict=_verdict(not misses), note=note))
    return _certify("common_zero", [divisor, list(family), points], subcases)


#### Prism boundary ####

PRISM_HEIGHT: float = 1.0
"""Extent of the scanned walls along the last coordinate."""
PRISM_SAMPLES: int = 33
"""Samples per scanned segment."""


def check_prism_vanishing(a: Sequence[Scalar | str]) -> Certificate:
    """psi(a) vanishes on the walls x_i = 0 and x_i = pi/a_i of the prism over x1..x_{d-1}.

    Each wall is covered by three segments parallel to the last axis and one
    diagonal; the eigenvalue subcase requires psi(a) to be harmonic.
    """
    product = psi(a)
    freqs = [f.frequency for f in product.factors]
    d = len(freqs)
    widths = [math.pi / float(abs(ai)) for ai in freqs[:-1]]
    f = product.to_function()
    subcases = [
        Subcase(
            name="eigenvalue",
            verdict=_verdict(product.is_harmonic()),
            note=f"a_d^2 - sum a_i^2 = {product.eigenvalue}",
        )
    ]
    for i, width in enumerate(widths):
        for wall, label in ((0.0, "0"), (width, f"pi/{abs(freqs[i])}")):

            def _point(s: float, height: float) -> list[float]:
                point = [s * w for w in widths] + [height]
                point[i] = wall
                return point

            segments = [segment(_point(s, 0.0), _point(s, PRISM_HEIGHT)) for s in (0.25, 0.5, 0.75)]
            segments.append(segment(_point(0.0, 0.0), _point(1.0, PRISM_HEIGHT)))
            scan = boundary_scan(f, segments, PRISM_SAMPLES)
            subcases.append(
                Subcase(
                    name=f"x{i + 1}={label}",
                    verdict=_verdict(scan.passed),
                    note=f"max |psi| {scan.max_abs:.3e} over {scan.samples} samples",
                )
            )
    return _certify(f"prism_vanishing(d={d})", [freqs], subcases)


#### Floating-point evidence ####


def check_trig_harmonic(product: TrigProduct) -> Certificate:
    """Exact eigenvalue of a separable trigonometric product is zero."""
    freqs = [f.frequency for f in product.factors]
    subcases = [
        Subcase(
            name="eigenvalue",
            verdict=_verdict(product.is_harmonic()),
            note=str(product.eigenvalue),
        )
    ]
    return _certify("trig_harmonic", [[f.kind for f in product.factors], freqs], subcases)


def check_boundary(
    claim_id: str, f: ScalarFunction, pieces: Sequence[tuple[str, Segment]], n: int
) -> Certificate:
    """max |f| <= tol_boundary on each named boundary piece; invalid samples are skipped and counted."""
    subcases = []
    for name, piece in pieces:
        scan = boundary_scan(f, [piece], n)
        subcases.append(
            Subcase(
                name=name,
                verdict=_verdict(scan.passed),
                note=f"max |f| {scan.max_abs:.3e} over {scan.samples} samples, {scan.skipped} skipped",
            )
        )
    return _certify(claim_id, [[(p.start, p.end) for _, p in pieces], n], subcases)


def check_fd_harmonic(
    claim_id: str,
    f: ScalarFunction,
    points: Sequence[Sequence[float]],
    h: Optional[float] = None,
    bound: Optional[float] = None,
    ratio_step: Optional[float] = None,
) -> Certificate:
    """At every point the stencil residual at step h is <= bound and the
    Richardson ratio at `ratio_step` lies in RICHARDSON_RANGE.
    """
    h = config.HZOO_FD_STEP if h is None else h
    bound = config.HZOO_FD_RESIDUAL_BOUND if bound is None else bound
    ratio_step = config.HZOO_FD_RATIO_STEP if ratio_step is None else ratio_step
    low, high = RICHARDSON_RANGE
    subcases = []
    for point in points:
        residual = fd_laplacian(f, point, h)
        ratio = richardson_ratio(f, point, ratio_step)
        small = math.isfinite(residual) and abs(residual) <= bound
        second_order = low <= ratio <= high  # False for NaN
        subcases.append(
            Subcase(
                name="(" + ", ".join(f"{v:.6f}" for v in point) + ")",
                verdict=_verdict(small and second_order),
                note=f"residual {residual:.3e}, ratio {ratio:.3f}",
            )
        )
    inputs = [[tuple(float(v) for v in p) for p in points], h, bound, ratio_step]
    return _certify(claim_id, inputs, subcases)


def check_nodal_soundness(cloud: NodalCloud, f: ScalarFunction) -> Certificate:
    subcases = [
        Subcase(name="points", verdict="pass", note=str(len(cloud.points))),
        Subcase(name="sign changes", verdict=_verdict(cloud.check_soundness(f))),
    ]
    return _certify(
        f"nodal_soundness({cloud.function_id})",
        [cloud.function_id, cloud.lo, cloud.hi, cloud.resolution],
        subcases,
    )
