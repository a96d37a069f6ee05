import json

import pytest

from hzoo.cli.app import EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, run


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_gen_fd_harmonic(capsys):
    assert run(["gen", "fd", "--dim", "3", "--check", "harmonic"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("command: gen fd\n")
    assert "harmonic: pass" in out


def test_skeleton_fd(capsys):
    assert run(["skeleton", "--dim", "4", "--k", "2", "--poly", "fd", "--json", "--no-timestamp"]) == EXIT_OK
    report = _json(capsys)
    assert report["generated_at"] is None
    (certificate,) = report["certificates"]
    assert certificate["claim_id"] == "skeleton_vanishing(d=4,k=2)"
    assert certificate["verdict"] == "pass"
    assert len(certificate["subcases"]) == 24
    assert len(certificate["inputs_digest"]) == 64


def test_certificate_json_keys(capsys):
    assert run(["skeleton", "--dim", "3", "--k", "1", "--poly", "fd", "--json"]) == EXIT_OK
    (certificate,) = _json(capsys)["certificates"]
    assert set(certificate) == {"claim_id", "inputs_digest", "verdict", "witness", "subcases", "tool_version"}
    assert set(certificate["subcases"][0]) == {"name", "verdict", "note"}


def test_verify_failure_prints_witness(capsys):
    assert run(["verify", "--arity", "2", "--expr", "x1^2"]) == EXIT_FAILED
    out = capsys.readouterr().out
    assert "harmonic: fail" in out
    assert "  witness: 2" in out


def test_verify_eigen():
    assert run(["verify", "--arity", "2", "--expr", "x1 - x2", "--eigenvalue", "2", "--weight", "1,1"]) == EXIT_OK
    assert run(["verify", "--arity", "2", "--expr", "x1 - x2", "--eigenvalue", "1", "--weight", "1,1"]) == EXIT_FAILED


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["verify", "--arity", "2", "--expr", "x3"],
        ["verify", "--arity", "2", "--expr", "x1 x2"],
        ["gen", "psi", "--check", "skeleton"],
        ["gen", "fd", "--dim", "1"],
        ["skeleton", "--dim", "3", "--k", "1"],
        ["skeleton", "--dim", "3", "--k", "5", "--poly", "fd"],
        ["divides", "--arity", "2", "--divisor", "x1 - x2", "--member", "x1", "--probe", "1,0"],
        ["compose", "--target", "x1"],
        ["nodal", "--expr", "x1"],
        ["nodal", "--expr", "x1", "--dim", "1", "--json"],
        ["nodal", "--poly", "fd", "--dim", "2", "--resolution", "1"],
        ["prism", "--a", "3"],
        ["verify", "--arity", "1", "--expr", "*".join(["10^1000"] * 5) + "*x1"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(argv) == EXIT_USAGE


def test_verify_accepts_coefficients_at_the_size_limit(capsys):
    expr = "*".join(["10^1000"] * 4) + "*x1"
    assert run(["verify", "--arity", "1", "--expr", expr, "--json", "--no-timestamp"]) == EXIT_OK
    assert len(_json(capsys)["certificates"][0]["inputs_digest"]) == 64


def test_version(capsys):
    assert run(["--version"]) == EXIT_OK
    assert "hzoo" in capsys.readouterr().out


def test_reports_are_byte_identical(tmp_path):
    paths = [tmp_path / "first.json", tmp_path / "second.json"]
    for path in paths:
        argv = ["gen", "pk", "--n", "2", "--k-max", "2", "--check", "divides", "--check", "independent"]
        assert run(argv + ["--json", "--no-timestamp", "--out", str(path)]) == EXIT_OK
    assert paths[0].read_bytes() == paths[1].read_bytes()
    report = json.loads(paths[0].read_text())
    assert [c["claim_id"] for c in report["certificates"]] == ["divides_family", "linear_independence"]


def test_timestamp_is_present_by_default(capsys):
    assert run(["gen", "vandermonde", "--dim", "2", "--json"]) == EXIT_OK
    report = _json(capsys)
    assert report["generated_at"] is not None
    assert report["artifacts"] == ["x1 - x2"]


def test_gen_kinds(capsys):
    assert run(["gen", "hd", "--dim", "3", "--check", "eigen"]) == EXIT_OK
    assert "artifact: exp(x1 + x2 + x3) * (" in capsys.readouterr().out
    assert run(["gen", "phi", "--n", "2", "--check", "conformal", "--check", "harmonic"]) == EXIT_OK
    assert run(["gen", "odd-morphism", "--m", "5", "--g", "x1", "--check", "conformal", "--check", "isotropic"]) == EXIT_OK
    assert run(["gen", "odd-morphism", "--m", "7", "--g", "x1^2", "--check", "harmonic"]) == EXIT_OK
    assert run(["gen", "psi", "--a", "3,4,5", "--check", "harmonic", "--check", "prism"]) == EXIT_OK
    assert run(["gen", "psi", "--a", "1,1,1", "--check", "harmonic"]) == EXIT_FAILED
    assert run(["gen", "planar", "--points", "0+1i,2,-1/2-3i", "--check", "harmonic"]) == EXIT_OK
    assert run(["gen", "gd", "--dim", "3", "--check", "skeleton", "--k", "1", "--check", "nondegenerate"]) == EXIT_OK


def test_divides_with_probes():
    argv = [
        "divides",
        "--arity", "2",
        "--divisor", "x1^2 - x2^2",
        "--member", "x1^6 - 15*x1^4*x2^2 + 15*x1^2*x2^4 - x2^6",
        "--member", "x1^2 - x2^2",
        "--probe", "1,1",
        "--probe", "2,-2",
    ]
    assert run(argv) == EXIT_OK
    assert run(["divides", "--arity", "2", "--divisor", "2*x1*x2", "--member", "x1^2 - x2^2"]) == EXIT_FAILED


def test_independent():
    assert run(["independent", "--arity", "2", "--member", "x1", "--member", "x2"]) == EXIT_OK
    assert run(["independent", "--arity", "2", "--member", "x1", "--member", "2*x1"]) == EXIT_FAILED


def test_conformal_and_compose(capsys):
    assert run(["conformal", "--quadratic", "2"]) == EXIT_OK
    assert run(["conformal", "--arity", "1", "--phi1", "x1", "--phi2", "x1"]) == EXIT_FAILED
    assert run(["compose", "--quadratic", "1", "--target", "x1^2 - x2^2", "--target", "x1", "--json"]) == EXIT_OK
    capsys.readouterr()
    assert run(["compose", "--quadratic", "1", "--target", "x1^2 + x2^2", "--json"]) == EXIT_FAILED
    report = _json(capsys)
    assert report["certificates"][0]["witness"] is not None


def test_numeric_commands(capsys):
    assert run(["halfstrip", "--samples", "50", "--points", "10"]) == EXIT_OK
    assert run(["strip", "--samples", "50", "--points", "10", "--seed", "3"]) == EXIT_OK
    assert run(["prism", "--a", "3,4,5"]) == EXIT_OK
    assert run(["prism", "--a", "1,1,1"]) == EXIT_FAILED
    out = capsys.readouterr().out
    assert "halfstrip_boundary: pass" in out
    assert "strip_fd_harmonic(sinh_sin): pass" in out


def test_nodal_writes_csv_to_stdout(capsys):
    argv = ["nodal", "--expr", "x1", "--dim", "2", "--lo=-1,-1", "--hi", "1,1", "--resolution", "3"]
    assert run(argv) == EXIT_OK
    assert capsys.readouterr().out == "x1,x2\n-0.5,-1\n-0.5,0\n-0.5,1\n0,-1\n0,0\n0,1\n"


def test_nodal_json_goes_to_stdout_with_csv_in_out(tmp_path, capsys):
    csv_path = tmp_path / "f3.csv"
    argv = ["nodal", "--poly", "fd", "--dim", "3", "--resolution", "9", "--out", str(csv_path), "--json"]
    assert run(argv) == EXIT_OK
    report = _json(capsys)
    assert report["certificates"][0]["claim_id"] == "nodal_soundness(fd)"
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "x1,x2,x3"
    assert len(lines) > 1


def test_nodal_named_functions(tmp_path):
    for name in ("f0", "exp-sin", "sinh-sin"):
        out = tmp_path / f"{name}.csv"
        assert run(["nodal", "--function", name, "--resolution", "11", "--out", str(out)]) == EXIT_OK
        assert out.read_text().startswith("x1,x2\n")


def test_every_subcommand_is_registered():
    parser = build_parser()
    sub = next(a for a in parser._actions if a.dest == "command")
    assert set(sub.choices) == {
        "gen", "verify", "skeleton", "divides", "independent", "conformal",
        "compose", "nodal", "halfstrip", "strip", "prism",
    }
