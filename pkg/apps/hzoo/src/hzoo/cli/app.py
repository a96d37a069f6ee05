import argparse
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from hzoo.cli import commands
from hzoo.core.config import DEFAULT_NODAL_RESOLUTION, TOOL_VERSION
from hzoo.core.errors import HzooError
from hzoo.utils.logs import logger
from hzoo.verify.models import Report

GEN_KINDS = list(commands.GENERATORS)
GEN_CHECKS = [
    "harmonic",
    "skeleton",
    "nondegenerate",
    "eigen",
    "conformal",
    "divides",
    "independent",
    "isotropic",
    "prism",
]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None, help="Write the report (or CSV) here instead of stdout.")
    common.add_argument("--json", action="store_true", help="Emit the JSON report.")
    common.add_argument("--no-timestamp", action="store_true", help="Omit generated_at from reports.")

    parser = argparse.ArgumentParser(
        prog="hzoo",
        description="Generate harmonic polynomials and morphisms and certify their properties.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {TOOL_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="Build a construction, optionally checking it.")
    p.add_argument("kind", choices=GEN_KINDS)
    p.add_argument("--dim", type=int, default=3, help="d for fd, gd, hd and vandermonde.")
    p.add_argument("--k", type=int, default=None, help="Skeleton dimension for --check skeleton (default d-2).")
    p.add_argument("--n", type=int, default=1, help="Half the ambient dimension for phi and pk.")
    p.add_argument("--k-max", type=int, default=3, help="Largest k in the P_k family.")
    p.add_argument("--m", type=int, default=5, help="Odd ambient dimension for odd-morphism.")
    p.add_argument("--g", action="append", help="Ansatz polynomial in x1 (repeatable).")
    p.add_argument("--a", default="3,4,5", help="Frequencies for psi, comma separated.")
    p.add_argument("--points", default="0", help="Gaussian rationals for planar, e.g. '0+1i,2'.")
    p.add_argument("--check", action="append", choices=GEN_CHECKS)
    p.set_defaults(handler=commands.gen)

    p = sub.add_parser("verify", parents=[common], help="Check that an expression is harmonic or an eigenfunction.")
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--expr", required=True)
    p.add_argument("--eigenvalue", default=None, help="Check e^{w.x} p against this eigenvalue.")
    p.add_argument("--weight", default=None, help="Comma-separated weight w (default zero).")
    p.set_defaults(handler=commands.verify)

    p = sub.add_parser("skeleton", parents=[common], help="Check vanishing on the k-skeleton of the unit cube.")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--poly", choices=list(commands.NAMED_POLYS))
    p.add_argument("--expr")
    p.set_defaults(handler=commands.skeleton)

    p = sub.add_parser("divides", parents=[common], help="Check that a divisor divides every family member.")
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--divisor", required=True)
    p.add_argument("--member", action="append", required=True)
    p.add_argument("--probe", action="append", help="Zero of the divisor, e.g. '1,1' (repeatable).")
    p.set_defaults(handler=commands.divides)

    p = sub.add_parser("independent", parents=[common], help="Check linear independence of a family.")
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--member", action="append", required=True)
    p.set_defaults(handler=commands.independent)

    for name, handler, text in (
        ("conformal", commands.conformal, "Check that a pair of polynomials is a harmonic morphism."),
        ("compose", commands.compose, "Check harmonicity of targets composed with a morphism."),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--quadratic", type=int, default=None, help="Use the quadratic morphism on R^{2N}.")
        p.add_argument("--arity", type=int, default=None)
        p.add_argument("--phi1")
        p.add_argument("--phi2")
        if name == "compose":
            p.add_argument("--target", action="append", required=True, help="Polynomial in x1, x2 (repeatable).")
        p.set_defaults(handler=handler)

    p = sub.add_parser("nodal", parents=[common], help="Sample the nodal set on a grid and write CSV.")
    p.add_argument("--poly", choices=list(commands.NAMED_POLYS))
    p.add_argument("--expr")
    p.add_argument("--function", choices=list(commands.FUNCTIONS))
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--lo", default=None, help="Lower box corner; use --lo=-0.5,-0.5 for negatives.")
    p.add_argument("--hi", default=None)
    p.add_argument("--resolution", type=int, default=DEFAULT_NODAL_RESOLUTION)
    p.set_defaults(handler=commands.nodal)

    for name, handler, text in (
        ("halfstrip", commands.halfstrip, "Numeric evidence for the half-strip function."),
        ("strip", commands.strip, "Numeric evidence for the strip functions."),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--samples", type=int, default=200, help="Samples per boundary piece.")
        p.add_argument("--points", type=int, default=50, help="Interior points for the stencil check.")
        p.add_argument("--seed", type=int, default=0)
        p.set_defaults(handler=handler)

    p = sub.add_parser("prism", parents=[common], help="Check that psi(a) vanishes on its prism walls.")
    p.add_argument("--a", required=True)
    p.set_defaults(handler=commands.prism)

    return parser


def render_text(report: Report) -> str:
    lines = [f"command: {report.command}"]
    lines.extend(f"artifact: {artifact}" for artifact in report.artifacts)
    for certificate in report.certificates:
        lines.append(f"{certificate.claim_id}: {certificate.verdict}")
        if certificate.witness is not None:
            lines.append(f"  witness: {certificate.witness}")
    return "\n".join(lines) + "\n"


def to_json(report: Report) -> str:
    return report.model_dump_json(indent=2, by_alias=True) + "\n"


def emit(report: Report, args: argparse.Namespace) -> None:
    if args.command == "nodal":
        # the CSV already went to --out or stdout
        if args.json:
            sys.stdout.write(to_json(report))
        return
    text = to_json(report) if args.json else render_text(report)
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as stream:
            stream.write(text)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        report = args.handler(args)
    except (HzooError, ValidationError) as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_USAGE
    emit(report, args)
    return EXIT_OK if report.passed else EXIT_FAILED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
