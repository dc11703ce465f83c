import json
import os
import subprocess
import sys

import pytest

from webmodels import cli
from webmodels.ll import TruncCfg
from webmodels.pcr import UsageError, carrier
from webmodels.report import LawReport
from webmodels.spaces import make_space, same_space
from webmodels.summability import d_space
from webmodels.taylor import sample_kleisli, taylor_mat


def strip_timing(obj):
    if isinstance(obj, dict):
        return {k: strip_timing(v) for k, v in obj.items() if k != "timing"}
    if isinstance(obj, list):
        return [strip_timing(v) for v in obj]
    return obj


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(data if isinstance(data, str) else json.dumps(data))
    return p


def test_bundled_smoke_scenario_passes(capsys):
    assert cli.run_scenario(cli.bundled_scenario("pcoh-smoke")) == 0
    out = capsys.readouterr().out
    assert "all pass" in out and "ll: " in out


def test_corrupted_dig_fails_with_witness(tmp_path, capsys):
    sc = write(tmp_path, "mut.json", {"model": "pcoh", "webs": [2], "suites": ["ll.comonad"],
                                      "mutations": {"dig": None}})
    assert cli.run_scenario(sc) == 1
    out = capsys.readouterr().out
    assert "FAIL ll.comonad" in out and '"entry"' in out


def test_unknown_suite_is_usage_error(capsys):
    assert cli.main(["--suite", "ll.nope"]) == 2
    assert "unknown suite" in capsys.readouterr().err


def test_parse_error_has_location(tmp_path, capsys):
    sc = write(tmp_path, "bad.json", '{"model": "pcoh",\n "webs": [1,}')
    assert cli.run_scenario(sc) == 2
    assert "bad.json:2:" in capsys.readouterr().err


@pytest.mark.parametrize("data", [{"modle": "pcoh"}, {"seed": "x"}, {"model": "nope"},
                                  {"mutations": {"zap": None}}, {"webs": [0]}, {"bang_degree": -1}])
def test_schema_errors(tmp_path, data):
    assert cli.run_scenario(write(tmp_path, "s.json", data)) == 2


def test_flags_override_scenario(tmp_path, capsys):
    report = tmp_path / "r.json"
    code = cli.main(["--scenario", "pcoh-smoke", "--suite", "sum.ss", "--model", "rel", "--s-bound", "3",
                     "--report", str(report), "--format", "structured"])
    assert code == 0
    data = json.loads(report.read_text())
    assert data["scenario"]["model"] == "rel" and data["scenario"]["s_bound"] == 3
    assert [s["suite"] for s in data["suites"]] == ["sum"]
    assert json.loads(capsys.readouterr().out)["ok"] is True


def test_structured_report_is_deterministic_across_processes(tmp_path):
    sc = write(tmp_path, "s.json", {"model": "coh", "webs": [1, 2], "suites": "all", "families": 30,
                                    "instances": 20, "report": str(tmp_path / "r.json")})
    outs = []
    for seed in ("1", "2"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        subprocess.run([sys.executable, "-m", "webmodels.cli", "--scenario", str(sc)], env=env, check=True,
                       capture_output=True)
        outs.append(strip_timing(json.loads((tmp_path / "r.json").read_text())))
    assert outs[0] == outs[1]


def test_emit_report_lists_undefined_apart():
    rep = LawReport("demo")
    rep.record("a", "pass")
    rep.record("b", "undefined-sum", {"lhs": "scalar product"})
    rep.record("c", "fail", {"entry": [0, 1], "lhs": "1", "rhs": "0"})
    text = cli.emit_report([rep])
    assert "demo: 1 pass, 1 fail, 1 undefined-sum" in text
    assert "FAIL c: " in text and '"entry": [0, 1]' in text
    assert "UNDEFINED b" in text and "FAIL b" not in text
    data = json.loads(cli.emit_report([rep], "structured"))
    assert data["ok"] is False and data["suites"][0]["counts"]["undefined-sum"] == 1


def test_space_round_trip(tmp_path):
    D = d_space(3, "pcoh")
    cli.save_space(D, tmp_path / "d.json")
    assert same_space(cli.load_space(tmp_path / "d.json"), D)
    G = make_space("coh", {"web": 3, "graph": [(0, 1)]})
    cli.save_space(G, tmp_path / "g.json")
    back = cli.load_space(tmp_path / "g.json")
    assert same_space(back, G) and set(map(frozenset, back.graph.edges)) == set(map(frozenset, G.graph.edges))


def test_matrix_round_trip_and_errors(tmp_path):
    import random
    cfg = TruncCfg(2, 2)
    X, Y = make_space("kothe", 2), make_space("kothe", 1)
    T = taylor_mat(sample_kleisli(X, Y, cfg, random.Random(0)), X, Y, cfg)
    cli.save_matrix(T, tmp_path / "t.json")
    back = cli.load_matrix(tmp_path / "t.json")
    assert back.entries == T.entries and back == T
    # canonical ordering: saving again gives the same bytes
    cli.save_matrix(back, tmp_path / "t2.json")
    assert (tmp_path / "t.json").read_text() == (tmp_path / "t2.json").read_text()
    with pytest.raises(UsageError):
        cli.load_matrix(tmp_path / "t.json", carrier("nonneg"))
    write(tmp_path, "broken.json", {"dom": []})
    with pytest.raises(UsageError):
        cli.load_matrix(tmp_path / "broken.json")


def test_console_script_help():
    out = subprocess.run([sys.executable, "-m", "webmodels.cli", "--help"], capture_output=True, text=True)
    assert out.returncode == 0 and "--bang-degree" in out.stdout


def test_law_report_reexported():
    assert cli.LawReport is LawReport
