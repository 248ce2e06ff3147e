import json
import subprocess
import sys

import pytest

from spectralcurves.cli import JobSpec, UsageError, main, run

L = "D^3 - (6/x^2)*D + 12/x^3 + 1"
EXAMPLE = "@space_curve_example"


def cli(*args):
    proc = subprocess.run([sys.executable, "-m", "spectralcurves", *args],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def structured(capsys, *args):
    code = main([*args, "--format", "structured"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_bc_ideal_report(capsys):
    code, rep = structured(capsys, "bc-ideal", "--op", EXAMPLE)
    assert code == 0 and rep["status"] == "ok"
    res = rep["result"]
    assert res["f3"] == "-mu1^5 + mu2^4"
    assert res["F0"] == "mu1^5 - mu2^4"
    assert res["g2"] == "mu2^4"
    assert {"f1", "f2", "F1", "g1", "flags"} <= set(res)


def test_bc_ideal_flags(capsys):
    _, rep = structured(capsys, "bc-ideal", "--op", EXAMPLE)
    flags = rep["result"]["flags"]
    assert flags["constant_certified"] and flags["projection_divides"]
    assert flags["lam_linear"] and flags["well_defined_on_curve"]
    # the example ideal is not radical, see the decisions ledger
    assert not flags["well_defined_in_ideal"]


def test_check_commute_failure(capsys):
    code, rep = structured(capsys, "check-commute", "--op", L, "--op", "D")
    assert code == 1
    assert rep["status"] == "failure"
    assert rep["certificate"]["pairs"]["[op1,op2]"] == "(-12/x^3) * D + (36/x^4)"


def test_check_commute_success(capsys):
    code, rep = structured(capsys, "check-commute", "--op", EXAMPLE)
    assert code == 0 and rep["result"]["commute"]


def test_factor_at_point(capsys):
    code, rep = structured(capsys, "factor-at", "--op", EXAMPLE, "--point", "0,1,-1")
    assert code == 0
    res = rep["result"]
    assert res["remainder"] == "0"
    assert res["factor"].startswith("D + ")
    assert res["cofactor"].startswith("D^2")


def test_factor_at_excluded_point(capsys):
    code, rep = structured(capsys, "factor-at", "--op", EXAMPLE, "--point", "1,0,0")
    assert code == 1
    assert rep["certificate"]["vanishing"] == ["phi1,1", "phi2,1"]


def test_factor_at_negative_first_coordinate(capsys):
    code, rep = structured(capsys, "factor-at", "--op", EXAMPLE, "--point=-7,16,-32")
    assert code == 0


def test_eval_param(capsys):
    code, rep = structured(capsys, "eval-param", "--op", EXAMPLE,
                           "--param", "1-tau^3;tau^4;-tau^5")
    assert code == 0 and rep["result"]["remainder"] == "0"


def test_dres_and_subres(capsys):
    code, rep = structured(capsys, "dres", "--op", "D^2 - x", "--op", "D")
    assert code == 0
    assert rep["result"] == {"dres": "-x", "constant_coefficients": False}
    code, rep = structured(capsys, "subres", "--op", "D^2 + x", "--op", "D^2 + 3")
    assert rep["result"] == {"phi0": "-x + 3", "phi1": "0"}


def test_bc_pair_and_groebner(capsys):
    code, rep = structured(capsys, "bc-pair", "--op", L, "--op", f"({L})*({L})")
    assert code == 0 and rep["result"]["f"] in ("lam^2 - mu1", "-lam^2 + mu1")
    code, rep = structured(capsys, "groebner", "--poly", "lam^2 - mu1", "--poly", "lam")
    assert code == 0 and rep["result"]["basis"] == ["mu1", "lam"]
    code, rep = structured(capsys, "groebner", "--op", EXAMPLE)
    assert rep["result"]["F0"] == "mu1^5 - mu2^4"


def test_factor_command(capsys):
    code, rep = structured(capsys, "factor", "--op", EXAMPLE)
    assert code == 0
    assert rep["result"]["residual_in_ideal"]
    assert rep["result"]["recomposition_reduces_to_zero"]


def test_usage_and_parse_errors(capsys):
    assert main(["dres", "--op", "D^^2", "--op", "D"]) == 2
    assert "column 2" in capsys.readouterr().err
    assert main(["dres", "--op", "D"]) == 2
    assert main(["factor-at", "--op", EXAMPLE]) == 2
    assert main(["no-such-command"]) == 2
    assert main(["bc-ideal", "--op", "@/nonexistent/file.ops"]) == 2
    assert main(["factor-at", "--op", EXAMPLE, "--point", "1,2"]) == 2
    assert main(["eval-param", "--op", EXAMPLE, "--param", "x;1;2"]) == 2


def test_arity_checked_before_work():
    job = JobSpec("bc-ideal", operators=[])
    with pytest.raises(UsageError):
        run(job)


def test_operator_file(tmp_path, capsys):
    path = tmp_path / "ops.txt"
    path.write_text(f"# pair\n{L}\n\nD\n")
    code, rep = structured(capsys, "check-commute", "--op", f"@{path}")
    assert code == 1


def test_structured_output_is_deterministic():
    runs = [cli("bc-ideal", "--op", EXAMPLE, "--format", "structured") for _ in range(2)]
    assert runs[0] == runs[1]
    assert runs[0][0] == 0


def test_text_output():
    code, out, _ = cli("bc-ideal", "--op", EXAMPLE)
    assert code == 0
    assert "F0: mu1^5 - mu2^4" in out
