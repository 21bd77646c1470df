import json
import subprocess
import sys

import pytest
from conftest import fixture, mutate

from crossedhopf import io
from crossedhopf.cli import EXIT_CLEAN, EXIT_FAIL, EXIT_USAGE, main
from crossedhopf.modules import module_sample
from crossedhopf.tcoalg import tcoalg_equal
from crossedhopf.yetter_drinfeld import ddouble_to_yd


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_trivial_at_ribbon_level(capsys):
    code, out, _ = run(capsys, "check", "demo:trivial", "--level", "ribbon")
    assert code == EXIT_CLEAN
    assert "FAIL" not in out


def test_construct_double_then_check_quasi(capsys, tmp_path):
    d = tmp_path / "d.json"
    assert run(capsys, "construct", "double", "demo:group_algebra2", "-o", str(d))[0] == EXIT_CLEAN
    assert tcoalg_equal(io.load(d), fixture("d_ga2"))
    assert run(capsys, "check", str(d), "--level", "quasi")[0] == EXIT_CLEAN


def test_check_mutated_file_fails_with_a_witness(capsys, tmp_path):
    bad = mutate(fixture("sweedler"), "antipode", 0, (1, 2))
    p = tmp_path / "mutated.json"
    io.save(bad, p)
    code, out, _ = run(capsys, "--format", "json", "check", str(p))
    assert code == EXIT_FAIL
    doc = json.loads(out)
    assert doc["clean"] is False
    fails = [e for r in doc["reports"] for e in r["entries"] if not e["passed"]]
    assert fails and all(e["witness"] for e in fails)


@pytest.mark.parametrize("kind", ["coop", "mirror", "dualcoop", "double"])
def test_every_construction_reloads_clean(capsys, tmp_path, kind):
    p = tmp_path / f"{kind}.json"
    assert run(capsys, "construct", kind, "demo:constant", "-o", str(p))[0] == EXIT_CLEAN
    assert run(capsys, "check", str(p))[0] == EXIT_CLEAN


def test_ribbon_extension_construction(capsys, tmp_path):
    p = tmp_path / "rt.json"
    assert run(capsys, "construct", "ribbon-ext", "demo:double_kz2", "-o", str(p))[0] == EXIT_CLEAN
    assert run(capsys, "check", str(p), "--level", "ribbon")[0] == EXIT_CLEAN
    code, _, err = run(capsys, "construct", "ribbon-ext", "demo:sweedler")
    assert code == EXIT_USAGE and "R-matrix" in err


def test_drinfeld_prints_the_element(capsys):
    code, out, _ = run(capsys, "drinfeld", "demo:double_kz2")
    assert code == EXIT_CLEAN
    assert "u_0 = 1 [1*e^0.1] + 1 [g*e^0.g]" in out


def test_yd_commands(capsys, tmp_path):
    H, D = fixture("constant"), fixture("d_constant")
    io.save(H, tmp_path / "h.json")
    V = ddouble_to_yd(H, [M for M in module_sample(D, max_dim=6) if M.dim == 6][0])
    io.save(V, tmp_path / "v.json")
    for action in ("check", "roundtrip"):
        assert run(capsys, "yd", action, str(tmp_path / "h.json"), str(tmp_path / "v.json"))[0] == EXIT_CLEAN


def test_rib_check_and_sample(capsys, tmp_path):
    out = tmp_path / "objs"
    assert run(capsys, "sample", "rib", "demo:double_kz2", "-o", str(out))[0] == EXIT_CLEAN
    files = sorted(out.glob("rib*.json"))
    assert files
    for f in files:
        assert run(capsys, "rib", "check", "demo:double_kz2", str(f))[0] == EXIT_CLEAN


def test_sample_modules_and_yd(capsys, tmp_path):
    assert run(capsys, "sample", "module", "demo:sweedler", "-o", str(tmp_path / "m"))[0] == EXIT_CLEAN
    assert list((tmp_path / "m").glob("module*.json"))
    assert run(capsys, "sample", "yd", "demo:group_algebra2", "-o", str(tmp_path / "y"))[0] == EXIT_CLEAN
    for f in (tmp_path / "y").glob("yd*.json"):
        assert run(capsys, "yd", "check", "demo:group_algebra2", str(f))[0] == EXIT_CLEAN


def test_demo_emission_and_listing(capsys, tmp_path):
    code, out, _ = run(capsys, "demo", "list")
    assert code == EXIT_CLEAN and "sweedler" in out
    code, out, _ = run(capsys, "demo", "sweedler")
    assert tcoalg_equal(io.loads(out), fixture("sweedler"))
    code, _, err = run(capsys, "demo", "nonsense")
    assert code == EXIT_USAGE and "unknown demo" in err


def test_report_is_deterministic_in_json(capsys):
    argv = ("--format", "json", "report", "demo:sweedler", "demo:double_kz2")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    assert first[0] == EXIT_CLEAN
    doc = json.loads(first[1])
    assert doc["clean"] is True and len(doc["reports"]) >= 4


def test_format_flag_after_the_subcommand(capsys):
    code, out, _ = run(capsys, "check", "demo:group_algebra2", "--format", "json")
    assert code == EXIT_CLEAN
    assert json.loads(out)["clean"] is True


def test_usage_and_parse_errors(capsys, tmp_path):
    assert run(capsys)[0] == EXIT_USAGE
    assert run(capsys, "check")[0] == EXIT_USAGE
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    code, out, _ = run(capsys, "--format", "json", "check", str(broken))
    assert code == EXIT_USAGE
    assert json.loads(out)["error"] == "ParseError"
    io.save(fixture("sweedler"), tmp_path / "h.json")
    code, _, err = run(capsys, "yd", "check", str(tmp_path / "h.json"), str(tmp_path / "h.json"))
    assert code == EXIT_USAGE and "Yetter-Drinfeld" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "crossedhopf", "check", "demo:trivial"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == EXIT_CLEAN
