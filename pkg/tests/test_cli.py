"""CLI driver: parsing, analyze, fixtures, determinism, random cones."""

import io
import json
import subprocess
import sys
from contextlib import redirect_stdout
from pathlib import Path

import pytest

from orderbands.cli import analyze, main, random_cone, run_example, run_falsify
from orderbands.instancefile import ParseError, parse_instance

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "orderbands" / "fixtures"


def run_main(args):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(args)
    return code, buf.getvalue()


def test_parse_rejects_unknown_keys():
    with pytest.raises(ParseError) as e:
        parse_instance("[space s]\nkind = cone_rays\ndata = 1 0\nbogus = 1\n")
    assert "bogus" in str(e.value)


def test_parse_rejects_bad_literals():
    with pytest.raises(ParseError):
        parse_instance("[space s]\nkind = cone_rays\ndata = 1 0.5\n")


def test_parse_line_numbers():
    with pytest.raises(ParseError) as e:
        parse_instance("# c\n[query q]\nop = nonsense\n")
    assert e.value.line == 3


def test_analyze_k4_fixture():
    code, report = analyze(str(FIXTURES / "k4_band.obi"))
    assert code == 0
    assert report["queries"]["band"]["matches_expected"]
    assert report["queries"]["disj"]["result"]["routes_agree"]
    # s-closed has no expectation: recorded verdict only
    assert report["queries"]["sclosed"]["result"].verdict in ("yes", "no", "unknown")


def test_analyze_golden_cones():
    code, report = analyze(str(FIXTURES / "golden_cones.obi"))
    assert code == 0


def test_analyze_examples_fixture():
    code, report = analyze(str(FIXTURES / "examples.obi"))
    assert code == 0


def test_example_command_exit_codes():
    code, rep = run_example("ex_quad")
    assert code == 0 and not rep["mismatches"]


def test_malformed_file_exit_2(tmp_path):
    p = tmp_path / "bad.obi"
    p.write_text("[space s]\nkind = wat\n")
    code, out = run_main(["analyze", str(p)])
    assert code == 2


def test_missing_file_exit_2():
    code, out = run_main(["analyze", "/nonexistent/file.obi"])
    assert code == 2


def test_expect_mismatch_exit_1(tmp_path):
    p = tmp_path / "mismatch.obi"
    p.write_text(
        "[space s]\nkind = cone_rays\ndata = 1 0 ; 0 1\n"
        "[query q]\nop = is_pervasive\ntarget = s\nexpect = no\n"
    )
    code, out = run_main(["analyze", str(p)])
    assert code == 1


def test_determinism_byte_identical(tmp_path):
    args = ["--seed", "3", "--budget", "4", "suite"]
    code1, out1 = run_main(args)
    code2, out2 = run_main(args)
    assert out1 == out2 and code1 == code2 == 0


def test_report_is_json():
    code, out = run_main(["example", "band_h"])
    assert code == 0
    parsed = json.loads(out)
    assert parsed["command"] == "example"


def test_random_cone_golden():
    s1 = random_cone(1, 2, 2)
    assert s1.m == 2
    s7 = random_cone(7, 3, 4)
    assert s7.m == 4
    from orderbands.polyspace import is_lattice_rdp

    assert is_lattice_rdp(s1).is_yes
    assert is_lattice_rdp(s7).is_no
    # determinism
    assert random_cone(7, 3, 4).cone_rays == s7.cone_rays


def test_random_cone_validation():
    with pytest.raises(ValueError):
        random_cone(0, 1, 2)
    with pytest.raises(ValueError):
        random_cone(0, 3, 2)
    with pytest.raises(ValueError):
        random_cone(0, 3, 99)


def test_falsify_runs_clean(tmp_path):
    code, rep = run_falsify(seed=5, budget=4, fixtures_dir=str(tmp_path))
    assert code == 0
    assert not rep["violations"]
    for p in rep["archived"]:
        assert Path(p).exists()


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "orderbands.cli", "example", "namioka3"],
        capture_output=True, text=True, cwd=str(FIXTURES.parents[2]),
    )
    assert proc.returncode == 0
    assert '"mismatches": []' in proc.stdout
