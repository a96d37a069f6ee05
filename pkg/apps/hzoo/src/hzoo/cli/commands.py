"""Command handlers. Each takes the parsed argparse namespace and returns a Report."""

from __future__ import annotations

import math
import sys
from argparse import Namespace
from datetime import datetime, timezone
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from hzoo.constructions.morphisms import (
    MorphismPair,
    odd_morphism,
    pk_family,
    quadratic_morphism,
    xi_ansatz,
)
from hzoo.constructions.polynomials import f_d, g_d, h_d, planar_vanisher, vandermonde
from hzoo.constructions.transcendental import (
    TrigProduct,
    f0_closure,
    psi,
    strip_functions,
)
from hzoo.core.diffops import ExpPoly
from hzoo.core.errors import UsageError
from hzoo.core.polyring import GaussRational, Poly, as_rational
from hzoo.cli.parser import parse_poly, pretty
from hzoo.numerics.nodal import GridSpec, nodal_sample
from hzoo.numerics.stencils import ScalarFunction, segment
from hzoo.verify.checks import (
    check_boundary,
    check_composed_family,
    check_composition,
    check_conformality,
    check_divides_family,
    check_eigen,
    check_fd_harmonic,
    check_harmonic,
    check_isotropic,
    check_linear_independence,
    check_nodal_soundness,
    check_nondegenerate,
    check_prism_vanishing,
    check_skeleton_vanishing,
    check_trig_harmonic,
    common_zero_witness,
)
from hzoo.verify.models import Certificate, Report

NAMED_POLYS: dict[str, Callable[[int], Poly]] = {
    "fd": f_d,
    "gd": g_d,
    "vandermonde": vandermonde,
}

HALF_STRIP_HEIGHT: float = 3.0
"""Extent of the scanned half-strip wall along x2."""
STRIP_HALF_WIDTH: float = 2.0
"""Strip boundaries are scanned for x1 in [-STRIP_HALF_WIDTH, STRIP_HALF_WIDTH]."""


#### Argument helpers ####


def rationals(text: str) -> list[Fraction]:
    """"3,4,5" -> [3, 4, 5]; entries may be "a/b"."""
    items = [item for item in text.split(",") if item.strip()]
    if not items:
        raise UsageError(f"expected a comma-separated list of rationals, got {text!r}")
    return [as_rational(item) for item in items]


def floats(text: str) -> list[float]:
    try:
        return [float(item) for item in text.split(",")]
    except ValueError as e:
        raise UsageError(f"expected a comma-separated list of numbers, got {text!r}") from e


def gaussian(text: str) -> GaussRational:
    """Parse "a", "bi", "a+bi" or "a-bi" with rational a, b."""
    text = text.strip().replace(" ", "")
    if not text.endswith("i"):
        return GaussRational(as_rational(text))
    body = text[:-1]
    split = max(body.rfind("+"), body.rfind("-"))
    re_text, im_text = (body[:split], body[split:]) if split > 0 else ("0", body)
    if im_text in ("", "+", "-"):
        im_text += "1"
    return GaussRational(as_rational(re_text or "0"), as_rational(im_text))


def _stamp(args: Namespace) -> Optional[str]:
    if args.no_timestamp:
        return None
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _report(args: Namespace, command: str, certificates: list[Certificate], artifacts: list[str]) -> Report:
    return Report(
        command=command,
        generated_at=_stamp(args),
        certificates=certificates,
        artifacts=artifacts,
    )


def _named_poly(name: str, dim: Optional[int]) -> Poly:
    if dim is None:
        raise UsageError(f"--poly {name} needs --dim")
    return NAMED_POLYS[name](dim)


def _checks(args: Namespace, allowed: Sequence[str]) -> list[str]:
    requested = args.check or []
    for check in requested:
        if check not in allowed:
            raise UsageError(f"check '{check}' does not apply to 'gen {args.kind}' (choose from {', '.join(allowed)})")
    return requested


def _trig_label(product: TrigProduct) -> str:
    return "*".join(f"{f.kind.value}({f.frequency}*x{f.variable + 1})" for f in product.factors)


#### gen ####


def _gen_polynomial(args: Namespace) -> Report:
    p = NAMED_POLYS[args.kind](args.dim)
    certificates = []
    for check in _checks(args, ("harmonic", "skeleton", "nondegenerate")):
        if check == "harmonic":
            certificates.append(check_harmonic(p))
        elif check == "skeleton":
            k = args.dim - 2 if args.k is None else args.k
            certificates.append(check_skeleton_vanishing(p, args.dim, k))
        else:
            certificates.append(check_nondegenerate(p))
    return _report(args, f"gen {args.kind}", certificates, [pretty(p)])


def _gen_hd(args: Namespace) -> Report:
    h = h_d(args.dim)
    weight = " + ".join(f"x{i + 1}" for i in range(args.dim))
    certificates = [check_eigen(h, args.dim) for _ in _checks(args, ("eigen",))]
    return _report(args, "gen hd", certificates, [f"exp({weight}) * ({pretty(h.body)})"])


def _morphism_certificates(check: str, m: MorphismPair) -> list[Certificate]:
    if check == "conformal":
        return [check_conformality(m)]
    return [check_harmonic(m.phi1), check_harmonic(m.phi2)]


def _gen_phi(args: Namespace) -> Report:
    m = quadratic_morphism(args.n)
    certificates = [c for check in _checks(args, ("conformal", "harmonic")) for c in _morphism_certificates(check, m)]
    return _report(args, "gen phi", certificates, [pretty(m.phi1), pretty(m.phi2)])


def _gen_pk(args: Namespace) -> Report:
    family = pk_family(args.n, args.k_max)
    certificates = []
    for check in _checks(args, ("harmonic", "divides", "independent")):
        if check == "harmonic":
            certificates.extend(check_harmonic(p) for p in family)
        elif check == "divides":
            certificates.append(check_divides_family(quadratic_morphism(args.n).phi1, family))
        else:
            certificates.append(check_linear_independence(family))
    return _report(args, "gen pk", certificates, [pretty(p) for p in family])


def _gen_odd_morphism(args: Namespace) -> Report:
    g = [parse_poly(text, 1) for text in (args.g or ["1"])]
    m = odd_morphism(args.m, g)
    certificates = []
    for check in _checks(args, ("conformal", "harmonic", "isotropic")):
        if check == "isotropic":
            padded = g + [Poly.zero(1)] * (args.m - 4 - len(g))
            certificates.append(check_isotropic(xi_ansatz(padded)))
        else:
            certificates.extend(_morphism_certificates(check, m))
    return _report(args, "gen odd-morphism", certificates, [pretty(m.phi1), pretty(m.phi2)])


def _gen_psi(args: Namespace) -> Report:
    product = psi(rationals(args.a))
    certificates = []
    for check in _checks(args, ("harmonic", "prism")):
        if check == "harmonic":
            certificates.append(check_trig_harmonic(product))
        else:
            certificates.append(check_prism_vanishing(rationals(args.a)))
    return _report(args, "gen psi", certificates, [_trig_label(product)])


def _gen_planar(args: Namespace) -> Report:
    points = [gaussian(item) for item in args.points.split(",") if item.strip()]
    if not points:
        raise UsageError("--points needs at least one Gaussian rational")
    re, im = planar_vanisher(points)
    certificates = []
    for _ in _checks(args, ("harmonic",)):
        certificates.extend([check_harmonic(re), check_harmonic(im)])
    return _report(args, "gen planar", certificates, [pretty(re), pretty(im)])


GENERATORS: dict[str, Callable[[Namespace], Report]] = {
    "fd": _gen_polynomial,
    "gd": _gen_polynomial,
    "vandermonde": _gen_polynomial,
    "hd": _gen_hd,
    "phi": _gen_phi,
    "pk": _gen_pk,
    "odd-morphism": _gen_odd_morphism,
    "psi": _gen_psi,
    "planar": _gen_planar,
}


def gen(args: Namespace) -> Report:
    return GENERATORS[args.kind](args)


#### Exact verifiers ####


def verify(args: Namespace) -> Report:
    p = parse_poly(args.expr, args.arity)
    if args.eigenvalue is None:
        certificate = check_harmonic(p)
    else:
        weight = rationals(args.weight) if args.weight else [Fraction(0)] * args.arity
        certificate = check_eigen(ExpPoly(tuple(weight), p), args.eigenvalue)
    return _report(args, "verify", [certificate], [pretty(p)])


def skeleton(args: Namespace) -> Report:
    if (args.poly is None) == (args.expr is None):
        raise UsageError("give exactly one of --poly and --expr")
    p = _named_poly(args.poly, args.dim) if args.poly else parse_poly(args.expr, args.dim)
    return _report(args, "skeleton", [check_skeleton_vanishing(p, args.dim, args.k)], [pretty(p)])


def divides(args: Namespace) -> Report:
    divisor = parse_poly(args.divisor, args.arity)
    family = [parse_poly(text, args.arity) for text in args.member]
    certificates = [check_divides_family(divisor, family)]
    if args.probe:
        certificates.append(common_zero_witness(divisor, family, [rationals(p) for p in args.probe]))
    return _report(args, "divides", certificates, [pretty(divisor)])


def independent(args: Namespace) -> Report:
    family = [parse_poly(text, args.arity) for text in args.member]
    return _report(args, "independent", [check_linear_independence(family)], [pretty(p) for p in family])


def _morphism(args: Namespace) -> MorphismPair:
    if args.quadratic is not None:
        return quadratic_morphism(args.quadratic)
    if args.arity is None or args.phi1 is None or args.phi2 is None:
        raise UsageError("give --quadratic N or all of --arity, --phi1 and --phi2")
    return MorphismPair(parse_poly(args.phi1, args.arity), parse_poly(args.phi2, args.arity))


def conformal(args: Namespace) -> Report:
    m = _morphism(args)
    return _report(args, "conformal", [check_conformality(m)], [pretty(m.phi1), pretty(m.phi2)])


def compose(args: Namespace) -> Report:
    m = _morphism(args)
    targets = [parse_poly(text, 2) for text in args.target]
    certificates = [check_composition(p, m) for p in targets]
    if len(targets) > 1:
        certificates.append(check_composed_family(targets, m))
    return _report(args, "compose", certificates, [pretty(p) for p in targets])


#### Numeric evidence ####


def _interior_points(lo: Sequence[float], hi: Sequence[float], count: int, seed: int) -> list[list[float]]:
    rng = np.random.default_rng(seed)
    return rng.uniform(lo, hi, size=(count, len(lo))).tolist()


def halfstrip(args: Namespace) -> Report:
    f0 = f0_closure()
    pieces = [
        ("x1=pi/2", segment((math.pi / 2, 0.0), (math.pi / 2, HALF_STRIP_HEIGHT))),
        ("x2=0", segment((0.0, 0.0), (math.pi / 2, 0.0))),
    ]
    points = _interior_points((-1.2, 0.1), (1.2, 2.0), args.points, args.seed)
    certificates = [
        check_boundary("halfstrip_boundary", f0, pieces, args.samples),
        check_fd_harmonic("halfstrip_fd_harmonic", f0, points),
    ]
    return _report(args, "halfstrip", certificates, [])


def strip(args: Namespace) -> Report:
    pieces = [
        ("x2=0", segment((-STRIP_HALF_WIDTH, 0.0), (STRIP_HALF_WIDTH, 0.0))),
        ("x2=pi", segment((-STRIP_HALF_WIDTH, math.pi), (STRIP_HALF_WIDTH, math.pi))),
    ]
    points = _interior_points((-STRIP_HALF_WIDTH, 0.3), (STRIP_HALF_WIDTH, 2.8), args.points, args.seed)
    certificates = []
    for name, f in zip(("exp_sin", "sinh_sin"), strip_functions()):
        certificates.append(check_boundary(f"strip_boundary({name})", f, pieces, args.samples))
        certificates.append(check_fd_harmonic(f"strip_fd_harmonic({name})", f, points))
    return _report(args, "strip", certificates, [])


def prism(args: Namespace) -> Report:
    a = rationals(args.a)
    return _report(args, "prism", [check_prism_vanishing(a)], [_trig_label(psi(a))])


FUNCTIONS: dict[str, tuple[Callable[[], ScalarFunction], tuple[list[float], list[float]]]] = {
    "f0": (f0_closure, ([-math.pi / 2, 0.0], [math.pi / 2, HALF_STRIP_HEIGHT])),
    "exp-sin": (lambda: strip_functions()[0], ([-STRIP_HALF_WIDTH, 0.0], [STRIP_HALF_WIDTH, math.pi])),
    "sinh-sin": (lambda: strip_functions()[1], ([-STRIP_HALF_WIDTH, 0.0], [STRIP_HALF_WIDTH, math.pi])),
}


def nodal(args: Namespace) -> Report:
    """Write the nodal point cloud as CSV; the report only goes out with --json."""
    sources = [args.poly is not None, args.expr is not None, args.function is not None]
    if sum(sources) != 1:
        raise UsageError("give exactly one of --poly, --expr and --function")
    if args.json and args.out is None:
        raise UsageError("--json on nodal needs --out for the CSV")
    if args.function:
        make, (lo, hi) = FUNCTIONS[args.function]
        f, function_id = make(), args.function
    else:
        if args.dim is None:
            raise UsageError("--poly and --expr need --dim")
        p = _named_poly(args.poly, args.dim) if args.poly else parse_poly(args.expr, args.dim)
        f, function_id = p.to_float_function(), args.poly or pretty(p)
        lo, hi = [-0.5] * p.arity, [0.5] * p.arity
    grid = GridSpec(
        lo=floats(args.lo) if args.lo else lo,
        hi=floats(args.hi) if args.hi else hi,
        resolution=args.resolution,
    )
    cloud = nodal_sample(f, grid, function_id)
    if args.out is None:
        cloud.to_csv(sys.stdout)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as stream:
            cloud.to_csv(stream)
    return _report(args, "nodal", [check_nodal_soundness(cloud, f)], [args.out or "stdout"])
