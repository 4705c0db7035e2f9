import json

import pytest

from mesq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_product_stuffle_golden(capsys):
    code, out, _ = run(capsys, "product", "--mode", "stuffle", "2", "3")
    assert code == 0
    assert out == "z2z3 + z3z2 + z5"


def test_product_shuffle_golden(capsys):
    code, out, _ = run(capsys, "product", "--mode", "shuffle", "2", "3")
    assert code == 0
    assert out == "z2z3 + 3*z3z2 + 6*z4z1"


def test_product_output_deterministic(capsys):
    outs = {run(capsys, "product", "--mode", "stuffle", "2,1", "3")[1]
            for _ in range(3)}
    assert len(outs) == 1


def test_antipode(capsys):
    code, out, _ = run(capsys, "antipode", "z1z2")
    assert code == 0
    assert out == "z2z1 + z3"


def test_fourier_json_alphas(capsys):
    code, out, _ = run(capsys, "--format", "json", "fourier", "3,2")
    assert code == 0
    payload = json.loads(out)
    mids = {(tuple(t["zeta_index"]), tuple(t["g_index"])): t["alpha"]
            for t in payload["expansion"]["middle"]}
    assert mids == {((3,), (2,)): 3, ((2,), (3,)): 2}


def test_eval_json_schema(capsys):
    code, out, _ = run(capsys, "--format", "json", "eval", "zeta", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["value_re"] == pytest.approx(1.6449340668482, abs=1e-10)
    assert abs(payload["value_im"]) < 1e-12
    assert "context" in payload and "error_estimate" in payload


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "product", "--mode", "bogus", "2", "3")[0] == 2
    assert run(capsys, "eval", "zeta", "1,2")[0] == 2
    assert run(capsys, "reg", "xxy")[0] == 2
    assert main(["verify", "nonexistent"]) == 2


def test_verify_suite_exit_0(capsys):
    code, out, _ = run(capsys, "verify", "hopf", "--max-weight", "4")
    assert code == 0
    assert "pass" in out and "FAIL" not in out


def test_env_var_tolerance(capsys, monkeypatch):
    monkeypatch.setenv("MESQ_TOL", "1e-6")
    code, out, _ = run(capsys, "--format", "json", "eval", "hurwitz", "2",
                       "--N", "50")
    assert code == 0
    assert json.loads(out)["context"]["tolerance"] == 1e-6
