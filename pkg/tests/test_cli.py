import json

import pytest

from main import main
from service.reports import EnumerationRecord, EnumerationSummary, SurfaceReport, VerificationRecord


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ============================================================================
# validate / analyze / classify
# ============================================================================

def test_validate(capsys):
    code, out, _ = run(capsys, "validate", "3,2,5")
    assert code == 0
    assert out.splitlines()[0] == "(3,2,5): valid key sequence"


def test_validate_reports_the_failing_index(capsys):
    code, out, _ = run(capsys, "validate", "2,3,7")
    assert code == 1
    assert out.startswith("(2,3,7): not a key sequence (SmallerPropertyViolated at index 1)")


def test_unparsable_input(capsys):
    code, out, err = run(capsys, "validate", "3,,5")
    assert code == 1
    assert out == ""
    assert "error[parse]:" in err


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "--json", "analyze", "3,2,5")
    assert code == 0
    report = SurfaceReport.model_validate_json(out)
    assert (report.k_bar_x, report.m_omega) == (-5, 1)
    assert report.moduli.kind == "LineModRoots"
    assert report.classification.matched_row == "T1.3"
    assert len(report.equations) == 1


def test_analyze_stops_at_the_failed_stage(capsys):
    code, out, _ = run(capsys, "--json", "analyze", "4,6,11,1")
    assert code == 1
    report = SurfaceReport.model_validate_json(out)
    assert report.failed_stage.tag == "NotNormalForm"
    assert report.k_bar_x is None


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "3,2,4")
    assert code == 0
    assert "m_ω: 0" in out
    assert "note:" in out


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "15,10,24")
    assert code == 0
    assert out.splitlines()[0] == "(15,10,24): LogCanonicalNotLT"


def test_theta_equiv(capsys):
    code, out, _ = run(capsys, "theta-equiv", "3,2,5", "1", "7")
    assert code == 0
    assert "are equivalent" in out
    code, _, err = run(capsys, "theta-equiv", "3,2,5", "1,2", "1")
    assert code == 1
    assert "error[LengthMismatch]:" in err


# ============================================================================
# action / verify-action
# ============================================================================

def test_action_symbolic(capsys):
    code, out, _ = run(capsys, "action", "3,2,5")
    assert code == 0
    assert out == "τ_λ on (3,2,5) (m = 1): (x + λ(1/2·t1^2 + t1·y) + t2, y + t1)\n"


def test_action_rational(capsys):
    code, out, _ = run(capsys, "action", "3,2,5", "--lambda", "2")
    assert code == 0
    assert out.startswith("τ_2 on (3,2,5) (m = 1): (x + ")


def test_action_without_structures(capsys):
    code, _, err = run(capsys, "action", "3,2,3")
    assert code == 1
    assert "error[NoG2aStructure]:" in err


def test_verify_action(capsys):
    code, out, _ = run(capsys, "verify-action", "3,2,5")
    assert code == 0
    assert out.splitlines() == ["τ_λ on (3,2,5): pass", "τ_1 on (3,2,5): pass"]


def test_verify_action_with_fault(capsys):
    code, out, _ = run(capsys, "--json", "verify-action", "--max-m", "1", "--inject-fault")
    assert code == 1
    records = [VerificationRecord.model_validate_json(line) for line in out.splitlines()]
    assert len(records) == 6
    assert not any(r.holds for r in records)
    assert all(r.lemma_agrees is not False for r in records)


def test_verify_action_needs_input(capsys):
    code, _, err = run(capsys, "verify-action")
    assert code == 1
    assert "error[usage]:" in err


# ============================================================================
# resolve
# ============================================================================

def test_resolve_sequence(capsys):
    code, out, _ = run(capsys, "resolve", "3,2,5")
    assert code == 0
    assert "Newton pairs: (2, 3) (-1, 1)" in out
    assert "m_E[line] = 1" in out


def test_resolve_monomial(capsys):
    code, out, _ = run(capsys, "resolve", "--monomial", "2/1")
    assert code == 0
    assert "  E0 (-1)" in out.splitlines()
    assert "  E1 (-2)" in out.splitlines()
    code, out, _ = run(capsys, "resolve", "--monomial", "5/3", "--claims")
    assert code == 0


def test_resolve_monomial_dot(capsys):
    code, out, _ = run(capsys, "resolve", "--monomial", "2/1", "--dot")
    assert code == 0
    assert out.startswith("graph monomial {")
    assert '"E0" [label="E0 (-1)"];' in out
    assert '"E1" -- "E2";' in out or '"E2" -- "E1";' in out


@pytest.mark.parametrize(
    "argv, tag",
    [
        (("resolve", "--monomial", "4/2"), "NotCoprime"),
        (("resolve",), "usage"),
        (("resolve", "3,2,5", "--claims"), "usage"),
    ],
)
def test_resolve_errors(capsys, argv, tag):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert f"error[{tag}]:" in err


# ============================================================================
# enumerate
# ============================================================================

def test_enumerate_del_pezzo(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-omega0", "6", "--max-len", "3", "--filter", "del-pezzo")
    assert code == 0
    lines = out.splitlines()
    assert [line.split()[0] for line in lines[:-1]] == ["(2,1)", "(3,2)", "(3,2,4)", "(3,2,5)"]
    assert lines[-1].startswith("4 of ")


def test_enumerate_json_is_deterministic(capsys):
    argv = ("--json", "enumerate", "--max-omega0", "5", "--max-len", "3", "--workers", "3")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    lines = first.splitlines()
    records = [EnumerationRecord.model_validate_json(line) for line in lines[:-1]]
    summary = EnumerationSummary.model_validate_json(lines[-1])
    assert summary.emitted == len(records) == summary.scanned


def test_enumerate_writes_a_run_log(capsys, tmp_path):
    code, _, _ = run(capsys, "enumerate", "--max-omega0", "3", "--log-dir", str(tmp_path))
    assert code == 0
    [log_file] = list(tmp_path.glob("*.log"))
    assert "RECORD" in log_file.read_text(encoding="utf-8")


@pytest.mark.parametrize(
    "argv, tag",
    [
        (("enumerate", "--max-omega0", "500"), "BoundExceeded"),
        (("enumerate", "--max-omega0", "3", "--filter", "smooth"), "usage"),
        (("enumerate",), "usage"),
    ],
)
def test_enumerate_errors(capsys, argv, tag):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert f"error[{tag}]:" in err


# ============================================================================
# config
# ============================================================================

def test_config_set_and_show(capsys, tmp_path):
    code, _, _ = run(capsys, "--config-dir", str(tmp_path), "config", "set", "enumeration", "workers=8")
    assert code == 0
    saved = json.loads((tmp_path / "enumeration.json").read_text(encoding="utf-8"))
    assert saved["workers"] == 8

    code, out, _ = run(capsys, "--config-dir", str(tmp_path), "--json", "config", "show", "enumeration")
    assert code == 0
    [entry] = json.loads(out)
    assert entry["values"]["workers"] == 8


def test_config_errors(capsys, tmp_path):
    code, _, err = run(capsys, "--config-dir", str(tmp_path), "config", "set", "enumeration", "workers=0")
    assert code == 1
    assert "error[usage]:" in err
    code, _, err = run(capsys, "config", "show", "nope")
    assert code == 1
    code, _, err = run(capsys, "config", "set", "enumeration", "workers")
    assert code == 1
    assert "error[parse]:" in err


def test_engine_exponent_cap_reaches_the_actions(capsys, tmp_path):
    code, _, _ = run(capsys, "--config-dir", str(tmp_path), "config", "set", "engine", "exponent_cap=3")
    assert code == 0
    code, _, err = run(capsys, "--config-dir", str(tmp_path), "verify-action", "--max-m", "4")
    assert code == 1
    assert "error[exponent-overflow]:" in err
    code, _, _ = run(capsys, "verify-action", "--max-m", "2")
    assert code == 0


def test_missing_command(capsys):
    code, _, err = run(capsys)
    assert code == 1
    assert "error[usage]:" in err
