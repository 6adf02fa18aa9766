import json
import subprocess
import sys

from suspcalc.catalog import parse_wedge
from suspcalc.cli import EXIT_BAD_INPUT, EXIT_OK, EXIT_OMITTED, main

SPIN_DESCRIPTOR = {
    "label": "spin example",
    "m": 1,
    "d": 1,
    "torsion": [{"prime": 2, "exponent": 1}],
    "spin": True,
    "theta": {"action": "trivial"},
    "sq2_case": {"case": "not_applicable"},
    "postnikov_trivial": True,
}

OMITTED_DESCRIPTOR = {
    "m": 1,
    "d": 1,
    "torsion": [{"prime": 2, "exponent": 2}],
    "spin": False,
    "theta": {"action": "nontrivial", "j0": 1},
    "sq2_case": {"case": "B", "j1": 1},
    "postnikov_trivial": True,
}


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def run_cli(args, tmp_path, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --------------------------------------------------------------------------
# classify
# --------------------------------------------------------------------------

def test_classify_pretty(tmp_path, capsys):
    path = write(tmp_path, "d.json", SPIN_DESCRIPTOR)
    code, out, _ = run_cli(["classify", path], tmp_path, capsys)
    assert code == EXIT_OK
    assert "S^3 v P^4(2) v S^4 v P^5(2) v S^5 v S^6" in out
    assert "spin-theta-trivial" in out


def test_classify_json_byte_stable(tmp_path, capsys):
    path = write(tmp_path, "d.json", SPIN_DESCRIPTOR)
    code1, out1, _ = run_cli(["classify", path, "--json", "--stages"], tmp_path, capsys)
    code2, out2, _ = run_cli(["classify", path, "--json", "--stages"], tmp_path, capsys)
    assert code1 == code2 == EXIT_OK
    assert out1 == out2


def test_classify_suspension_level_one_unresolved(tmp_path, capsys):
    descriptor = dict(SPIN_DESCRIPTOR, postnikov_trivial=False)
    path = write(tmp_path, "d.json", descriptor)
    code, out, _ = run_cli(["classify", path, "--suspension-level", "1"], tmp_path, capsys)
    assert code == EXIT_OK
    assert "Unresolved" in out


def test_classify_omitted_exit_code(tmp_path, capsys):
    path = write(tmp_path, "d.json", OMITTED_DESCRIPTOR)
    code, _, err = run_cli(["classify", path], tmp_path, capsys)
    assert code == EXIT_OMITTED
    assert "omit the discussion" in err


def test_classify_malformed_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("not json", encoding="utf-8")
    code, _, err = run_cli(["classify", str(path)], tmp_path, capsys)
    assert code == EXIT_BAD_INPUT


def test_classify_unknown_field_rejected(tmp_path, capsys):
    descriptor = dict(SPIN_DESCRIPTOR, surprise=1)
    path = write(tmp_path, "d.json", descriptor)
    code, _, err = run_cli(["classify", path], tmp_path, capsys)
    assert code == EXIT_BAD_INPUT
    assert "surprise" in err


def test_classify_semantic_violation_rejected(tmp_path, capsys):
    descriptor = dict(SPIN_DESCRIPTOR, theta={"action": "nontrivial", "j0": 5})
    path = write(tmp_path, "d.json", descriptor)
    code, _, err = run_cli(["classify", path], tmp_path, capsys)
    assert code == EXIT_BAD_INPUT


def test_classify_nonprime_torsion_rejected(tmp_path, capsys):
    descriptor = dict(SPIN_DESCRIPTOR, torsion=[{"prime": 4, "exponent": 1}])
    path = write(tmp_path, "d.json", descriptor)
    code, _, err = run_cli(["classify", path], tmp_path, capsys)
    assert code == EXIT_BAD_INPUT
    assert "prime" in err


def test_classify_batch_order(tmp_path, capsys):
    batch = [
        dict(SPIN_DESCRIPTOR, label="first"),
        dict(SPIN_DESCRIPTOR, label="second", m=2),
    ]
    path = write(tmp_path, "batch.json", batch)
    code, out, _ = run_cli(["classify", path, "--json"], tmp_path, capsys)
    assert code == EXIT_OK
    payload = json.loads(out)
    assert [item["label"] for item in payload] == ["first", "second"]


def test_classify_validate_flag(tmp_path, capsys):
    path = write(tmp_path, "d.json", SPIN_DESCRIPTOR)
    code, out, _ = run_cli(["classify", path, "--validate"], tmp_path, capsys)
    assert code == EXIT_OK
    assert out.count("[pass]") == 4


def test_report_grammar_roundtrip(tmp_path, capsys):
    path = write(tmp_path, "d.json", SPIN_DESCRIPTOR)
    code, out, _ = run_cli(["classify", path, "--json"], tmp_path, capsys)
    payload = json.loads(out)
    sigma2 = parse_wedge(payload["sigma2"])
    assert sigma2.notation == payload["sigma2"]
    sigma = parse_wedge(payload["sigma"])
    assert sigma.suspend() == sigma2


# --------------------------------------------------------------------------
# cohomotopy
# --------------------------------------------------------------------------

def test_cohomotopy_report(tmp_path, capsys):
    descriptor = {
        "m": 2,
        "d": 0,
        "torsion": [{"prime": 2, "exponent": 1}, {"prime": 2, "exponent": 3}],
        "spin": True,
        "theta": {"action": "trivial"},
        "sq2_case": {"case": "not_applicable"},
        "postnikov_trivial": True,
    }
    path = write(tmp_path, "d.json", descriptor)
    code, out, _ = run_cli(["cohomotopy", path], tmp_path, capsys)
    assert code == EXIT_OK
    assert "coker(H_2)             = Z_(2)^2 + Z/4" in out
    assert "surjective" in out


def test_cohomotopy_trivial_manifold(tmp_path, capsys):
    descriptor = {
        "m": 0, "d": 0, "torsion": [],
        "spin": True, "theta": {"action": "trivial"},
        "sq2_case": {"case": "not_applicable"}, "postnikov_trivial": True,
    }
    path = write(tmp_path, "d.json", descriptor)
    code, out, _ = run_cli(["cohomotopy", path, "--json"], tmp_path, capsys)
    payload = json.loads(out)
    assert payload["coker_H2"]["free_rank"] == 0
    assert payload["coker_H2"]["torsion"] == []
    assert payload["E_surjective"] is True


def test_cohomotopy_omitted(tmp_path, capsys):
    path = write(tmp_path, "d.json", OMITTED_DESCRIPTOR)
    code, _, _ = run_cli(["cohomotopy", path], tmp_path, capsys)
    assert code == EXIT_OMITTED


# --------------------------------------------------------------------------
# normalize
# --------------------------------------------------------------------------

def test_normalize_command(tmp_path, capsys):
    vector = {
        "source": "S^5",
        "entries": [
            {"target": "S^4", "coefficients": {"eta": 1}},
            {"target": "P^4(4)", "coefficients": {"eta~_2": 1}},
        ],
    }
    path = write(tmp_path, "v.json", vector)
    code, out, _ = run_cli(["normalize", path, "--json"], tmp_path, capsys)
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["cofiber"] == "A^6(eta~_2) v S^4"
    assert payload["normal_form"]["entries"][0]["coefficients"] == {}


def test_normalize_rejects_unknown_generator(tmp_path, capsys):
    vector = {"source": "S^5", "entries": [{"target": "S^4", "coefficients": {"zeta": 1}}]}
    path = write(tmp_path, "v.json", vector)
    code, _, _ = run_cli(["normalize", path], tmp_path, capsys)
    assert code == EXIT_BAD_INPUT


# --------------------------------------------------------------------------
# tables / validate
# --------------------------------------------------------------------------

def test_tables_stable_and_filterable(tmp_path, capsys):
    code, full1, _ = run_cli(["tables"], tmp_path, capsys)
    code2, full2, _ = run_cli(["tables"], tmp_path, capsys)
    assert code == code2 == EXIT_OK
    assert full1 == full2
    code3, moore_only, _ = run_cli(["tables", "--filter", "moore"], tmp_path, capsys)
    payload = json.loads(moore_only)
    assert payload["maps_groups"]
    assert all(row["family"] == "moore" for row in payload["maps_groups"])
    code4, chang_only, _ = run_cli(["tables", "--filter", "chang"], tmp_path, capsys)
    chang_payload = json.loads(chang_only)
    assert {row["source"] for row in chang_payload["maps_groups"]} >= {"C^5_eta", "C^6_1"}


def test_validate_command(tmp_path, capsys):
    path = write(tmp_path, "d.json", SPIN_DESCRIPTOR)
    code, out, _ = run_cli(["validate", path], tmp_path, capsys)
    assert code == EXIT_OK
    assert "[pass]" in out


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "suspcalc.cli", "tables", "--filter", "sphere"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["maps_groups"]
