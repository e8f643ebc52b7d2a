import json
import subprocess
import sys
from pathlib import Path

import pytest

import comodcalc
from comodcalc.cli import main, render, render_text, run
from comodcalc.corpus import corpus_names, load

from commands import command_matrix

CORPUS = Path(comodcalc.__file__).parent / "corpus"
FIXTURES = Path(__file__).parent / "fixtures"


def _run(argv):
    return run(argv + ["--output", "json"])


def _path(name):
    return str(CORPUS / f"{name}.json")


# documented examples ---------------------------------------------------------------

@pytest.mark.parametrize("name", corpus_names())
def test_validate_corpus_exit_zero(name):
    report, code, _ = _run(["validate", "--input", _path(name)])
    assert code == 0, [c for c in report["checks"] if c["status"] != "pass"]
    assert report["status"] == "pass"
    assert len(report["checks"]) == sum(report["counts"].values())


def test_kg_chain_cartesian_example():
    report, code, _ = _run(["check", "cartesian", "--object", "M", "--input", _path("kg_chain")])
    assert code == 0
    (arrow,) = report["cartesian"]["arrows"]
    assert arrow["iso"] and arrow["source_dim"] == arrow["target_dim"] == arrow["rank"]


def test_rationalize_jordan_example():
    report, code, _ = _run(["rationalize", "--pairing", "dp2_kx", "--module", "jordan3",
                            "--input", _path("rational")])
    assert code == 0
    r = report["result"]
    assert (r["dim_N"], r["dim_R"], r["dim_quotient"], r["dim_R_quotient"]) == (3, 2, 1, 1)
    assert r["quotient_rational_part_vanishes"] is False


def test_hull_example_is_whole_object():
    # cartesian subobjects of M are determined by the 1-dim fiber at 1: zero or everything
    report, code, _ = _run(["hull", "--object", "M", "--at", "0", "--input", _path("kg_chain")])
    assert code == 0
    assert {k: v["dim"] for k, v in report["result"]["fibers"].items()} == {"0": 2, "1": 1}


def test_coflat_example_fails():
    report, code, _ = _run(["check", "coflat", "--morphism", "dp2_dp3", "--input", _path("coalgebras_gf5")])
    assert code == 1 and report["status"] == "fail"


@pytest.mark.parametrize("fixture", sorted(p.name for p in FIXTURES.glob("*.json")))
def test_expected_report_fixtures(fixture, monkeypatch):
    expected = json.loads((FIXTURES / fixture).read_text(encoding="utf-8"))
    monkeypatch.chdir(CORPUS)
    report, code, _ = _run(expected["argv"])
    assert code == expected["exit_code"]
    assert render(report, "json") == json.dumps(expected["report"], indent=2, sort_keys=True) + "\n"


# exit codes and errors ----------------------------------------------------------------

def test_usage_errors_exit_two(capsys):
    assert run(["frobnicate"])[1] == 2
    assert run(["check", "cartesian", "--input", _path("kg_chain")])[1] == 2
    assert run(["check", "cartesian", "--object", "nope", "--input", _path("kg_chain")])[1] == 2
    assert run(["hull", "--object", "M", "--at", "7", "--input", _path("kg_chain")])[1] == 2
    assert run(["hull", "--object", "M", "--at", "0", "--seed", "[[1]]", "--input", _path("kg_chain")])[1] == 2
    assert run(["validate", "--input", "/nonexistent/file.json"])[1] == 2
    code = main(["check", "object", "--object", "Z"])
    assert code == 2
    assert "usage:" in capsys.readouterr().out


def test_parse_error_exit_two(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"field": {"kind": "gf", "p": 4}}), encoding="utf-8")
    report, code, _ = _run(["validate", "--input", str(bad)])
    assert code == 2
    assert report["error"].startswith("parse error at field.p")


def test_failing_check_exit_one(tmp_path):
    doc = json.loads((CORPUS / "minimal_gf5.json").read_text(encoding="utf-8"))
    doc["coalgebras"]["K"]["eps"] = [[2]]
    f = tmp_path / "broken.json"
    f.write_text(json.dumps(doc), encoding="utf-8")
    report, code, _ = _run(["validate", "--input", str(f)])
    assert code == 1
    (check,) = report["checks"]
    assert check["status"] == "fail"
    # (eps (x) id) Delta(c) = 2c, so each counit law is off by exactly c
    assert check["violations"] == [{"law": "left counit", "witness": [1], "defect": [1]},
                                   {"law": "right counit", "witness": [1], "defect": [1]}]


def test_unsupported_exit_one():
    report, code, _ = _run(["hull", "--object", "ex_trans_1", "--at", "0", "--input", _path("dp_chain")])
    assert code == 1 and report["status"] == "unsupported"
    report, code, _ = _run(["compute", "contratensor", "--left", "T_MC2", "--right", "R_MC2",
                            "--input", _path("coalgebras_gf2")])
    assert code == 1 and report["status"] == "unsupported"


def test_stdin_input(monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO((CORPUS / "minimal_gf5.json").read_text(encoding="utf-8")))
    report, code, _ = _run(["validate", "--input", "-"])
    assert code == 0 and report["command"]["input"] == "-"


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "comodcalc", "validate", "--input", _path("minimal_gf5")],
                         capture_output=True, text=True, check=False)
    assert out.returncode == 0
    assert out.stdout.splitlines()[1] == "status: pass"


# determinism and the text form ----------------------------------------------------------

def _sample(name):
    cmds = command_matrix(load(name))
    return cmds if len(cmds) <= 60 else cmds[::7]


@pytest.mark.parametrize("name", corpus_names())
def test_reports_byte_identical(name):
    for argv in _sample(name):
        full = argv + ["--input", _path(name)]
        a, ca, _ = _run(full)
        b, cb, _ = _run(full)
        assert ca == cb and ca in (0, 1), (argv, a.get("error"))
        assert render(a, "json") == render(b, "json")
        assert render(a, "text") == render(b, "text")
        # the machine form carries everything: it survives a JSON round trip unchanged
        assert json.loads(render(a, "json")) == a


def test_text_form_contains_every_field():
    report, _, _ = _run(["rationalize", "--pairing", "dp2_kx", "--module", "jordan3", "--input", _path("rational")])
    text = render_text(report)
    assert "status: pass" in text
    assert "[pass] pairing" in text
    assert f"result: {json.dumps(report['result'], sort_keys=True)}" in text
