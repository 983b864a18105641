import json

import pytest

from sdcm.cli import main


@pytest.fixture(autouse=True)
def _restore_config():
    from sdcm import config
    saved = (config.N_CHECK, config.EPS_CURV)
    yield
    config.N_CHECK, config.EPS_CURV = saved


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def sq2(tmp_path, capsys):
    path = tmp_path / "sq2.json"
    code, _, _ = run(capsys, "example", "square0", "--r", "2", "-o", str(path))
    assert code == 0
    return str(path)


@pytest.fixture()
def it23(tmp_path, capsys):
    path = tmp_path / "it23.json"
    code, _, _ = run(capsys, "example", "iterated", "--r", "2", "--s", "3",
                     "-o", str(path))
    assert code == 0
    return str(path)


def test_curv_prints_exact_value(capsys):
    code, out, _ = run(capsys, "curv", "1/(1-2*t)")
    assert (code, out.strip()) == (0, "2")
    code, out, _ = run(capsys, "curv", "(1-2*t)/(1-3*t)")
    assert (code, out.strip()) == (0, "3")


def test_curv_interval_format(capsys):
    code, out, _ = run(capsys, "--eps", "1/1000", "curv", "1/(1-t-t^2)")
    assert code == 0
    assert out.startswith("[") and "," in out


def test_curv_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "curv", "1/(1-2t)")
    assert code == 2
    assert "offset 6" in err


def test_curv_nonneg_failure_exit_1(capsys):
    code, _, err = run(capsys, "curv", "1-3*t")
    assert code == 1
    assert "NonNegativityViolation" in err


def test_validate_and_dist(capsys, sq2, it23):
    code, out, _ = run(capsys, "validate", sq2)
    assert code == 0 and "valid" in out
    code, out, _ = run(capsys, "dist", it23, "cbcR", "DtensorS")
    assert (code, out.strip()) == (0, "5")
    code, _, err = run(capsys, "dist", it23, "cbcR", "nope")
    assert code == 2


def test_validate_failure_exit_1(tmp_path, capsys):
    doc = {"name": "bad", "classes": [{"id": "R", "poincare": "1/(1-2*t)"}],
           "order": [], "top": "R"}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 1
    assert "INVALID" in out


def test_table_text_and_json_deterministic(capsys, it23):
    code, text1, _ = run(capsys, "table", it23)
    code2, text2, _ = run(capsys, "table", it23)
    assert code == code2 == 0 and text1 == text2
    assert "cbcR" in text1
    code, out, _ = run(capsys, "table", it23, "--format", "json")
    doc = json.loads(out)
    assert doc["schema"] == 1
    ids = doc["ids"]
    i, j = ids.index("cbcR"), ids.index("DtensorS")
    assert doc["distances"][i][j] == "5"


def test_check_suites(capsys, it23):
    code, out, _ = run(capsys, "check", it23, "--suite", "all")
    assert code == 0
    for name in ("metric-axioms", "direct-edge", "bounds", "trichotomy",
                 "hom-order-consistency", "dagger-isometry", "dagger-fixed-points"):
        assert f"PASS {name}" in out
    code, out, _ = run(capsys, "check", it23, "--suite", "metric",
                       "--format", "json")
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["checks"][0]["check"] == "metric-axioms"
    assert doc["checks"][0]["pass"] is True


def test_check_duality_skips_without_dualizing(tmp_path, capsys):
    doc = {"name": "plain", "classes": [{"id": "R", "poincare": "1"}],
           "order": [], "top": "R"}
    path = tmp_path / "plain.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "check", str(path), "--suite", "duality")
    assert code == 0
    assert "skipped" in out


def test_dot_output(capsys, sq2):
    code, out, _ = run(capsys, "dot", sq2)
    assert code == 0
    assert out.startswith("digraph")
    assert '"D" -> "R" [label="2"];' in out


def test_basechange_and_cobase(tmp_path, capsys, sq2):
    phi = tmp_path / "phi.json"
    phi.write_text(json.dumps({"name": "ext3", "bass_phi": "(3-t)/(1-3*t)",
                               "source": "square_zero_2", "target_name": "S"}))
    out_path = tmp_path / "out.json"
    code, _, _ = run(capsys, "basechange", sq2, str(phi), "-o", str(out_path))
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert {c["id"] for c in doc["classes"]} == {"S", "DtensorS"}
    code, _, _ = run(capsys, "cobase", sq2, str(phi), "-o", str(out_path))
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert {c["id"] for c in doc["classes"]} == {"S", "DtensorS", "cbcR", "cbcD"}
    code, out, _ = run(capsys, "dist", str(out_path), "cbcR", "DtensorS")
    assert (code, out.strip()) == (0, "5")


def test_example_to_stdout(capsys):
    code, out, _ = run(capsys, "example", "iterated", "--r", "3", "--s", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["top"] == "S"
    code, _, err = run(capsys, "example", "iterated", "--r", "3")
    assert code == 2


def test_env_overrides_n_check(capsys, monkeypatch):
    # 1 - t^2 has coefficients 1, 0, -1: a two-term scan passes and yields
    # curvature 0, the default scan reaches the -1 and rejects
    monkeypatch.setenv("SDCM_NCHECK", "2")
    code, out, _ = run(capsys, "curv", "(1-t)*(1+t)")
    assert code == 0 and out.strip() == "0"
    monkeypatch.delenv("SDCM_NCHECK")
    from sdcm import config
    config.N_CHECK = 64
    code, _, err = run(capsys, "curv", "(1-t)*(1+t)")
    assert code == 1


def test_missing_file_exit_2(capsys):
    code, _, err = run(capsys, "validate", "/nonexistent/model.json")
    assert code == 2
