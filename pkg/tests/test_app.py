import json

import pytest

from app import COMMANDS, build_parser, dispatch, main
from src.verification.report import Report
from src.verification.suites import SUITES
from src.utils.config import get_limits


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_every_command_has_a_subparser():
    parser = build_parser()
    for name in COMMANDS:
        args = parser.parse_args([name, "--ring", "line"])
        assert args.command == name


def test_psharp_text(capsys):
    code, out, _ = run(capsys, "psharp", "--ring", "radial", "--ideal", "x")
    assert code == 0
    assert out == "(x), status=fixpoint"


def test_psharp_json(capsys):
    code, out, _ = run(capsys, "psharp", "--ring", "line", "--ideal", "x", "-D", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "degree-exhausted"
    assert data["final"] == "(0)"
    assert data["trace"] == ["(x)", "(x^2)", "(x^3)"]


def test_ideal_commands(capsys):
    assert run(capsys, "gb", "--ring", "euler", "--ideal", "x*y, x")[1] == "(x)"
    assert run(capsys, "member", "--ring", "plane", "--ideal", "x, y", "--poly", "x*y + x")[1] == "yes"
    assert run(capsys, "nf", "--ring", "plane", "--ideal", "x", "--poly", "x*y + y")[1] == "y"
    assert run(capsys, "disideal", "--ring", "line", "--ideal", "x^2")[1] == "no"
    assert run(capsys, "constants", "--ring", "line", "-D", "4")[1] == "span{1}"


def test_operator_commands(capsys):
    assert run(capsys, "ore", "--left", "D", "--right", "t")[1] == "(t)*D + 1"
    assert run(capsys, "unit-op", "--poly", "t^2")[1] == "(1/2)*D^2"


def test_tensor_length(capsys):
    code, out, _ = run(capsys, "svdp-length", "--elem", "u*t + v*t", "--json")
    assert code == 0
    assert json.loads(out)["length"] == 1


@pytest.mark.parametrize("argv", [
    ["gb", "--ring", "line", "--ideal", "x +"],
    ["gb", "--ring", "torus", "--ideal", "x"],
    ["gb", "--ring", "line"],
    ["verify", "riemann"],
    ["eliminate", "--ring", "plane", "--ideal", "x", "--vars", "z"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "erro:" in err


def test_argparse_errors_return_code(capsys):
    assert main([]) == 2
    assert main(["no-such-command"]) == 2
    capsys.readouterr()


def test_resource_cap(capsys):
    before = get_limits()
    code, _, err = run(capsys, "gb", "--ring", "line", "--ideal", "x^5", "--max-degree", "2")
    assert code == 3
    assert "erro:" in err
    assert get_limits() == before


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "charp-counterexamples", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["lemma"] == "charp-counterexamples"
    assert data["pass"] is True


def _failing_suite(seed=0, cases=None):
    report = Report("always-fails", params={"seed": seed})
    report.check(False, reason="contraexemplo")
    return report


def test_failed_check_sets_exit_code(capsys, monkeypatch):
    monkeypatch.setitem(SUITES, "always-fails", _failing_suite)
    args = build_parser().parse_args(["verify", "always-fails"])
    data, _, ok = dispatch(args)
    assert ok is False
    assert data["counterexamples"] == [{"reason": "contraexemplo"}]
    code, out, _ = run(capsys, "verify", "always-fails", "--json")
    assert code == 1
    assert json.loads(out)["pass"] is False
