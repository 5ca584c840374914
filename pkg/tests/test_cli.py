import json
import os

import pytest

from koszulkit.cli import main, property_cases_report


def run(argv):
    return main(argv)


def emit(tmp_path, name):
    assert run(["fixtures", "--name", name, "--out-dir", str(tmp_path)]) == 0
    pres = tmp_path / ("%s.presentation.json" % name)
    act = tmp_path / ("%s.action.json" % name)
    return str(pres), (str(act) if act.exists() else None)


def test_fixtures_list(capsys):
    assert run(["fixtures", "--list"]) == 0
    out = capsys.readouterr().out.split()
    assert "sym_3" in out and "sl2_adjoint_takiff" in out


def test_fixtures_unknown(tmp_path):
    assert run(["fixtures", "--name", "nope", "--out-dir",
                str(tmp_path)]) == 2


def test_check_koszul_sym3(tmp_path, capsys):
    pres, _ = emit(tmp_path, "sym_3")
    out = str(tmp_path / "r.json")
    code = run(["check", "--input", pres, "--max-degree", "6",
                "--checks", "koszul", "--out", out])
    assert code == 0
    report = json.loads(open(out).read())
    assert report["schema"] == "koszulkit/1"
    assert report["checks"]["koszul"]["details"]["verdict"] == "Koszul up to 6"
    assert report["verdict"] == "pass"


def test_check_empty_checks_usage_error(tmp_path):
    pres, _ = emit(tmp_path, "sym_1")
    assert run(["check", "--input", pres, "--checks", ""]) == 2
    assert run(["check", "--input", pres, "--checks", "bogus"]) == 2


def test_check_missing_file():
    assert run(["check", "--input", "/nonexistent.json",
                "--checks", "koszul"]) == 2


def test_check_bad_json(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["check", "--input", str(bad), "--checks", "koszul"]) == 2


def test_check_all_with_action(tmp_path):
    pres, act = emit(tmp_path, "c2_sign_takiff")
    out = str(tmp_path / "r.json")
    code = run(["check", "--input", pres, "--action", act,
                "--max-degree", "4", "--checks", "all", "--out", out])
    assert code == 0
    report = json.loads(open(out).read())
    assert report["checks"]["roundtrip"]["status"] == "pass"
    assert report["checks"]["takiff"]["status"] == "skipped"
    mods = report["checks"]["roundtrip"]["details"]["modules"]
    assert sorted(mods) == ["sign", "triv"]


def test_check_sl2_all(tmp_path):
    pres, act = emit(tmp_path, "sl2_adjoint_takiff")
    out = str(tmp_path / "r.json")
    code = run(["check", "--input", pres, "--action", act,
                "--max-degree", "3", "--checks", "all", "--out", out])
    assert code == 0
    report = json.loads(open(out).read())
    assert report["checks"]["takiff"]["status"] == "pass"
    assert report["checks"]["duality"]["status"] == "pass"


def test_check_module_restriction(tmp_path):
    pres, act = emit(tmp_path, "c2_sign_takiff")
    out = str(tmp_path / "r.json")
    code = run(["check", "--input", pres, "--action", act, "--module",
                "sign", "--max-degree", "3", "--checks", "roundtrip",
                "--out", out])
    assert code == 0
    report = json.loads(open(out).read())
    assert sorted(report["checks"]["roundtrip"]["details"]["modules"]) == \
        ["sign"]
    assert run(["check", "--input", pres, "--action", act, "--module",
                "nope", "--checks", "validate"]) == 2


def test_report_determinism_and_diff(tmp_path, capsys):
    pres, act = emit(tmp_path, "dual_numbers")
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    for out in (a, b):
        assert run(["check", "--input", pres, "--max-degree", "4",
                    "--checks", "koszul,hilbert,dual", "--out", out]) == 0
    ra = json.loads(open(a).read())
    rb = json.loads(open(b).read())
    ra.pop("timing")
    rb.pop("timing")
    assert json.dumps(ra, sort_keys=True) == json.dumps(rb, sort_keys=True)
    assert run(["report-diff", a, b]) == 0
    # a genuinely different report diffs nonzero
    c = str(tmp_path / "c.json")
    assert run(["check", "--input", pres, "--max-degree", "3",
                "--checks", "koszul", "--out", c]) == 0
    assert run(["report-diff", a, c]) == 1


def test_check_without_action_runs_duality_with_trivial_provider(tmp_path):
    pres, _ = emit(tmp_path, "ext_2")
    out = str(tmp_path / "r.json")
    code = run(["check", "--input", pres, "--max-degree", "3",
                "--checks", "duality,roundtrip", "--out", out])
    assert code == 0
    report = json.loads(open(out).read())
    assert "k" in report["checks"]["duality"]["details"]["modules"]


def test_property_cases_small():
    r = property_cases_report(7, 40)
    assert r["ok"]
    assert r["stats"]["cases"] == 40
    assert r["stats"]["d_squared_ok"] == 40
    r2 = property_cases_report(7, 40)
    assert json.dumps(r, sort_keys=True) == json.dumps(r2, sort_keys=True)


def test_validation_failure_exit_code(tmp_path):
    # an action whose matrices break the module-algebra law must fail
    # validate with exit 1
    pres, act = emit(tmp_path, "c2_sign_takiff")
    obj = json.loads(open(act).read())
    # corrupt the action of g on the generator: g |-> 2 is not involutive
    obj["action"][1] = [["2"]]
    bad = tmp_path / "bad_action.json"
    bad.write_text(json.dumps(obj))
    code = run(["check", "--input", pres, "--action", str(bad),
                "--checks", "validate"])
    assert code == 1
