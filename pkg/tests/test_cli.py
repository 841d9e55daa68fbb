"""Command line driver: exit codes, report formats, file round trips."""

import json

import pytest

from hopfrec.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out + cap.err


def test_example_then_check_hopf(tmp_path, capsys):
    f = tmp_path / "kz2.json"
    code, out = run(capsys, "example", "kz2", "-o", str(f))
    assert code == 0 and f.exists()
    code, out = run(capsys, "check-hopf", str(f))
    assert code == 0
    assert "result: pass" in out
    for name in ("algebra", "bialgebra", "antipode"):
        assert f"{name}: pass" in out


def test_check_hopf_json_report(tmp_path, capsys):
    f = tmp_path / "ks3.json"
    run(capsys, "example", "ks3", "-o", str(f))
    code, out = run(capsys, "--report", "json", "check-hopf", str(f))
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "check-hopf"
    assert doc["passed"] is True
    assert {c["name"] for c in doc["checks"]} == {"algebra", "bialgebra", "antipode"}
    assert all(c["passed"] for c in doc["checks"])


def test_report_flag_after_subcommand(tmp_path, capsys):
    f = tmp_path / "kz2.json"
    run(capsys, "example", "kz2", "-o", str(f))
    code, out = run(capsys, "check-hopf", str(f), "--report", "json")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_mutated_hopf_is_exit_1_and_names_the_axiom(tmp_path, capsys):
    f = tmp_path / "kz2.json"
    run(capsys, "example", "kz2", "-o", str(f))
    doc = json.loads(f.read_text())
    doc["comult"][1][1][1] = "2"  # grouplike coefficient bumped
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out = run(capsys, "check-hopf", str(bad))
    assert code == 1
    assert "result: FAIL" in out
    assert "coassociativity" in out or "counit" in out
    # failing tuples are listed, not summarized away
    assert " at (" in out


def test_parse_error_is_exit_2(tmp_path, capsys):
    f = tmp_path / "broken.json"
    f.write_text('{"kind": "hopf", "oops"\n')
    code, out = run(capsys, "check-hopf", str(f))
    assert code == 2
    code, out = run(capsys, "check-hopf", str(tmp_path / "missing.json"))
    assert code == 2


def test_unknown_field_is_exit_2(tmp_path, capsys):
    f = tmp_path / "kz2.json"
    run(capsys, "example", "kz2", "-o", str(f))
    doc = json.loads(f.read_text())
    doc["extra"] = True
    f.write_text(json.dumps(doc))
    code, out = run(capsys, "check-hopf", str(f))
    assert code == 2
    assert "unknown fields" in out


def test_wrong_kind_is_exit_2(tmp_path, capsys):
    f = tmp_path / "vec.json"
    run(capsys, "example", "vec-z2", "-o", str(f))
    code, out = run(capsys, "check-hopf", str(f))
    assert code == 2
    assert "expected a hopf payload" in out


def test_bad_example_name_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["example", "nope", "-o", "/dev/null"])
    assert exc.value.code == 2


def test_check_category_with_and_without_fiber(tmp_path, capsys):
    skel = tmp_path / "vec.json"
    fib = tmp_path / "fib.json"
    run(capsys, "example", "vec-z2", "-o", str(skel))
    run(capsys, "example", "vec-z2-fiber", "-o", str(fib))
    code, out = run(capsys, "check-category", str(skel))
    assert code == 0
    assert "pentagon: pass" in out
    assert "tensor-structure" not in out
    code, out = run(capsys, "check-category", str(skel), str(fib))
    assert code == 0
    assert "tensor-structure: pass" in out and "duality: pass" in out


def test_incoherent_category_fails_with_named_tuples(tmp_path, capsys):
    skel = tmp_path / "vecw.json"
    fib = tmp_path / "fib.json"
    run(capsys, "example", "vec-z2-omega", "-o", str(skel))
    run(capsys, "example", "vec-z2-fiber", "-o", str(fib))
    code, out = run(capsys, "check-category", str(skel), str(fib))
    assert code == 1
    assert "compatibility at (1, 1, 1)" in out


def test_reconstruct_writes_verified_hopf(tmp_path, capsys):
    skel = tmp_path / "vec.json"
    fib = tmp_path / "fib.json"
    out_f = tmp_path / "hopf.json"
    run(capsys, "example", "vec-z2", "-o", str(skel))
    run(capsys, "example", "vec-z2-fiber", "-o", str(fib))
    code, out = run(capsys, "reconstruct", str(skel), str(fib), "-o", str(out_f))
    assert code == 0 and out_f.exists()
    code, out = run(capsys, "check-hopf", str(out_f))
    assert code == 0


def test_repcat_writes_skeleton_and_fiber(tmp_path, capsys):
    h = tmp_path / "ks3.json"
    mods = tmp_path / "mods.json"
    out_f = tmp_path / "skel.json"
    run(capsys, "example", "ks3", "-o", str(h))
    run(capsys, "example", "ks3-modules", "-o", str(mods))
    code, out = run(capsys, "repcat", str(h), str(mods), "-o", str(out_f))
    assert code == 0
    fiber_f = tmp_path / "skel.fiber.json"
    assert out_f.exists() and fiber_f.exists()
    code, out = run(capsys, "check-category", str(out_f), str(fiber_f))
    assert code == 0


def test_roundtrip_ks3(tmp_path, capsys):
    h = tmp_path / "ks3.json"
    mods = tmp_path / "mods.json"
    run(capsys, "example", "ks3", "-o", str(h))
    run(capsys, "example", "ks3-modules", "-o", str(mods))
    code, out = run(capsys, "roundtrip", str(h), str(mods))
    assert code == 0
    assert "hopf-morphism: pass" in out
    code, out = run(capsys, "roundtrip", str(h), str(mods), "--report", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True and "gamma" in doc


def test_json_report_carries_failure_records(tmp_path, capsys):
    skel = tmp_path / "vecw.json"
    fib = tmp_path / "fib.json"
    run(capsys, "example", "vec-z2-omega", "-o", str(skel))
    run(capsys, "example", "vec-z2-fiber", "-o", str(fib))
    code, out = run(capsys, "--report", "json", "check-category", str(skel), str(fib))
    assert code == 1
    doc = json.loads(out)
    failing = [c for c in doc["checks"] if not c["passed"]]
    assert failing
    recs = [f for c in failing for f in c["failures"]]
    assert any(f["check"] == "compatibility" and f["index"] == [1, 1, 1] for f in recs)
