import json

import pytest

from argdecide.cli import EXIT_CAP, EXIT_COUNTEREXAMPLE, EXIT_INVALID, EXIT_OK, EXIT_USAGE, main
from argdecide.scenario import bundled, read_scenario

FIG1 = str(bundled("fig1.scenario"))
FIG2 = str(bundled("fig2.scenario"))
FIG2_ROBOT = str(bundled("fig2_robot_first.scenario"))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_decide_json(capsys):
    code, out, _ = run(capsys, "decide", "--scenario", FIG1, "--format", "json")
    assert code == EXIT_OK
    d = json.loads(out)
    assert set(d) == {"justified", "chosen", "active_count", "warranted_count"}
    assert d["chosen"] == ["box1"]
    assert d["active_count"] == 16
    assert d["justified"] == sorted(["better(box1,box3)", "better(box2,box3)", "better(box1,box2)",
                                     "~better(box3,box1)", "~better(box3,box2)", "~better(box2,box1)"])


def test_decide_text_and_order_override(capsys):
    code, out, _ = run(capsys, "decide", "--scenario", FIG1, "--order", "nearer_store>nearer_robot>smaller")
    assert code == EXIT_OK
    assert "chosen: {box2}" in out


def test_decide_experiment(capsys):
    code, out, _ = run(capsys, "decide", "--scenario", FIG2, "--experiment", "box4,box6", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["chosen"] == ["box4"]
    code, _, err = run(capsys, "decide", "--scenario", FIG2, "--experiment", "box4,box9")
    assert code == EXIT_INVALID and "box9" in err


def test_trace(capsys):
    code, out, _ = run(capsys, "trace", "--scenario", FIG2, "--claim", "better(box4,box6)")
    assert code == EXIT_OK
    trees = out.strip().split("\n\n")
    assert len(trees) == 2
    chain = next(t for t in trees if "smaller(box4,box6)" in t.splitlines()[0])
    assert [line[-3:] for line in chain.splitlines()] == ["[U]", "[D]", "[U]"]
    code, out, _ = run(capsys, "trace", "--scenario", FIG2, "--claim", "better(box6,box6)")
    assert code == EXIT_OK and "no active structure" in out


def test_trace_bad_claim(capsys):
    code, _, err = run(capsys, "trace", "--scenario", FIG2, "--claim", "better(box4")
    assert code == EXIT_USAGE and "usage" in err


def test_check_scenario(capsys):
    code, out, _ = run(capsys, "check", "--scenario", FIG1)
    assert code == EXIT_OK and out.strip().endswith("ok")


def test_check_random(capsys, tmp_path):
    code, out, _ = run(capsys, "check", "--random", "20", "--seed", "3", "--out", str(tmp_path))
    assert code == EXIT_OK
    assert "20 scenarios checked, 0 counterexamples" in out
    assert list(tmp_path.iterdir()) == []


def test_check_reports_counterexample(capsys, tmp_path, monkeypatch):
    # a deliberately wrong oracle must be caught and the scenario written out
    import argdecide.cli as cli
    from argdecide.oracle import comparisons_from_scores, lex_preference

    def upside_down(case):
        comps = comparisons_from_scores(case.scores, case.criteria, higher_is_better=False)
        return lex_preference(comps, case.order, case.alternatives)

    monkeypatch.setattr(cli, "oracle_for_case", upside_down)
    code, out, _ = run(capsys, "check", "--random", "5", "--seed", "0", "--out", str(tmp_path))
    assert code == EXIT_COUNTEREXAMPLE
    written = sorted(tmp_path.iterdir())
    assert written and all(p.name.startswith("counterexample_") for p in written)
    # the emitted file is a loadable scenario
    read_scenario(written[0])


def test_simulate(capsys):
    code, out, _ = run(capsys, "simulate", "--scenario", FIG2_ROBOT,
                       "--events", str(bundled("fig2_box5_to_robot.events")), "--format", "json")
    assert code == EXIT_OK
    trace = json.loads(out)
    assert [t["chosen"] for t in trace] == [["box6"], ["box5"]]
    assert trace[0]["event"] is None and trace[1]["event"].startswith("move_box")
    code, out, _ = run(capsys, "simulate", "--scenario", FIG2_ROBOT,
                       "--events", str(bundled("fig2_box6_to_corner.events")))
    assert code == EXIT_OK and out.splitlines()[-1].endswith("chosen {box4, box5}")


@pytest.mark.parametrize("argv", [
    [],
    ["decide"],
    ["frobnicate"],
    ["decide", "--scenario", FIG1, "--format", "xml"],
    ["check", "--scenario", FIG1, "--random", "3"],
    ["decide", "--scenario", "/no/such/file"],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_USAGE


def test_validation_errors(capsys, tmp_path):
    bad = tmp_path / "dup.scenario"
    bad.write_text(bundled("fig1.scenario").read_text().replace("id: box2", "id: box1"))
    code, _, err = run(capsys, "decide", "--scenario", str(bad))
    assert code == EXIT_INVALID and "duplicate" in err
    code, _, _ = run(capsys, "decide", "--scenario", FIG1, "--order", "smaller>nearer_robot")
    assert code == EXIT_INVALID


def test_resource_cap_exit_code(capsys, tmp_path):
    many = tmp_path / "many.scenario"
    boxes = "".join(f"  - {{id: b{i}, x: {i}, y: 0, size: 1}}\n" for i in range(13))
    many.write_text("robot: {x: 0, y: 0}\nstore: {x: 20, y: 0}\ncriteria: [nearer_robot]\nboxes:\n" + boxes)
    code, _, err = run(capsys, "check", "--scenario", str(many))
    assert code == EXIT_CAP and "cap" in err
