import json
import subprocess
import sys

import pytest

from monolift.catalog import named_ideal
from monolift.cli import main
from monolift.lifting import lifted_ideal, vandermonde_lifting_matrix
from monolift.poly import PolyMatrix


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out)


def test_lift_triangle(capsys):
    code, data = run_json(capsys, "lift", "name:triangle", "--t", "2")
    assert code == 0 and data["verdict"] == "pass"
    assert data["results"]["ranks"] == [1, 3, 3, 1]
    assert {c["name"] for c in data["checks"]} >= {"complex", "degreewise_exactness", "betti_agreement"}


def test_lift_is_reproducible(capsys):
    a = run_json(capsys, "lift", "x1^2, x1*x2, x2^3", "--seed", "7")[1]
    b = run_json(capsys, "lift", "x1^2, x1*x2, x2^3", "--seed", "7")[1]
    a.pop("timings"), b.pop("timings")
    assert a == b


def test_lift_with_matrix_file(capsys, tmp_path):
    cfg = tmp_path / "matrix.json"
    cfg.write_text(json.dumps({"mode": "restricted", "t": 1, "provenance": {"random": {"seed": 4}}}))
    code, data = run_json(capsys, "lift", "name:triangle", "--matrix", str(cfg))
    assert code == 0
    assert data["inputs"]["matrix"]["mode"] == "restricted"


def test_cone_matrix_fails_genericity(capsys, tmp_path):
    cfg = tmp_path / "cone.json"
    rows = [["x1", "x1"], ["x2", "x2"], ["x3", "x3"]]
    cfg.write_text(json.dumps({"t": 1, "provenance": {"explicit": rows}}))
    code, data = run_json(capsys, "lift", "name:triangle", "--matrix", str(cfg))
    assert code == 1
    assert any(c["name"] == "genericity" and c["status"] == "fail" for c in data["checks"])


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "betti", "x1^2*x2 + ")
    assert code == 3
    assert "line 1, column" in err


def test_unknown_subcommand(capsys):
    assert run(capsys, "frobnicate")[0] == 3


def test_betti_and_hilbert(capsys):
    code, data = run_json(capsys, "betti", "name:triangle")
    assert code == 0 and data["betti"] == [[1, 3, 3], [2, 5, 3], [3, 6, 1]]
    code, data = run_json(capsys, "hilbert", "name:almost-lex")
    assert data["h_vector"] == [1, 3, 6, 9, 1]


def test_components_and_conditions(capsys, tmp_path):
    code, data = run_json(capsys, "components", "name:almost-lex")
    assert data["count"] == 20 and data["slice_counts"] == [10, 6, 4]
    path = tmp_path / "v.json"
    path.write_text(json.dumps(data["configuration"]))
    code, cond = run_json(capsys, "check-conditions", str(path))
    assert code == 0 and cond["condition2"] and not cond["condition3"]
    assert cond["witness"] == [[3, 1, 3], [2, 1, 4]]
    code, inv = run_json(capsys, "invert", str(path))
    assert code == 0 and inv["round_trip"]
    code, stick = run_json(capsys, "check-stick", str(path))
    assert code == 0 and stick["passed"]


def test_check_stick_away_from_base(capsys, tmp_path):
    code, data = run_json(capsys, "components", "name:lines-through-point")
    path = tmp_path / "v.json"
    path.write_text(json.dumps(data["configuration"]))
    assert run(capsys, "check-stick", str(path))[0] == 1
    assert run(capsys, "check-stick", str(path), "--away-from-w")[0] == 0


def test_malformed_configuration(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{\n  \"grid\": [2, 2],\n  oops }")
    code, _, err = run(capsys, "invert", str(path))
    assert code == 3 and "line 3" in err


def test_construct(capsys):
    code, data = run_json(capsys, "construct", "--h", "1,3,6,9,1", "--t", "2")
    assert code == 0 and data["passed"]


def test_construct_rejects_non_o_sequence(capsys):
    assert run(capsys, "construct", "--h", "1,5,3,6")[0] == 3


def test_verify_initial_and_limits(capsys):
    code, data = run_json(capsys, "verify-initial", "name:triangle")
    assert code == 0 and data["status"] == "verified"


def test_residual(capsys):
    code, data = run_json(capsys, "residual", "name:degree-three-gap")
    assert code == 0 and data["passed"]


@pytest.mark.parametrize("fmt,marker", [("m2", "ideal("), ("singular", "ring R")])
def test_export(capsys, tmp_path, fmt, marker):
    target = tmp_path / f"out.{fmt}"
    code, data = run_json(capsys, "lift", "name:triangle", "--export", fmt, "--export-path", str(target))
    assert code == 0 and str(target) in data["artifacts"]
    assert marker in target.read_text()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "monolift", "betti", "x1*x2, x2*x3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["betti"] == [[1, 2, 2], [2, 3, 1]]


def test_lift_output_parses_back(capsys):
    code, data = run_json(capsys, "lift", "name:triangle", "--t", "2", "--show-matrices")
    A = vandermonde_lifting_matrix(3, 2, (2, 2, 2))
    assert [A.ring.parse(g) for g in data["results"]["generators"]] == lifted_ideal(named_ideal("triangle"), A)
    d3 = PolyMatrix.from_json(A.ring, data["results"]["differentials"][2])
    assert d3.shape == (3, 1)
