import json
import os
import time

import pytest

from intervalcolor.cli import main, run
from intervalcolor.generators import complete, cycle
from intervalcolor.graph import Graph


@pytest.fixture
def out(tmp_path):
    return str(tmp_path)


def write(path, text):
    with open(path, "w") as fh:
        fh.write(text)
    return path


def test_gadget_then_verify(out):
    res = run(["gadget", "F", "--b", "2", "--T", "37", "--color", "--out-dir", out])
    assert res.status == "ok" and len(res.artifacts) == 3
    assert all(os.path.exists(p) for p in res.artifacts)
    g_path, c_path = res.artifacts[0], res.artifacts[1]
    res = run(["verify", "--graph", g_path, "--coloring", c_path])
    assert res.status == "ok" and res.summary == ["interval: yes, colors: 38"]


def test_mirror_flag(out):
    res = run(["gadget", "F", "--b", "1", "--T", "27", "--mirror", "--out-dir", out])
    assert res.status == "ok"
    assert run(["verify", "--graph", res.artifacts[0], "--coloring", res.artifacts[1]]).status == "ok"


def test_verify_rejects_bad_coloring(out):
    g = write(os.path.join(out, "tri.json"), complete(3).to_json())
    c = write(os.path.join(out, "c.json"), json.dumps({"colors": {"0--1": 1, "0--2": 2, "1--2": 3}}))
    res = run(["verify", "--graph", g, "--coloring", c])
    assert res.status == "none" and res.summary[0] == "interval: no"
    assert main(["verify", "--graph", g, "--coloring", c]) == 1


def test_spectrum_triangle(out):
    g = write(os.path.join(out, "triangle.json"), complete(3).to_json())
    res = run(["spectrum", "--graph", g, "--out-dir", out])
    assert res.status == "ok"
    assert res.summary[0] == "spectrum: {} (not interval colorable)"
    data = json.load(open(res.artifacts[0]))
    assert data["achievable"] == [] and data["gaps"] == []


def test_spectrum_witnesses_round_trip(out):
    g = write(os.path.join(out, "c6.json"), cycle(6).to_json())
    res = run(["spectrum", "--graph", g, "--out-dir", out])
    assert res.summary[0] == "spectrum: {2, 3, 4}"
    data = json.load(open(res.artifacts[0]))
    c = write(os.path.join(out, "w.json"), json.dumps({"colors": data["witnesses"]["3"]}))
    assert run(["verify", "--graph", g, "--coloring", c]).status == "ok"


def test_spectrum_budget_timeout(out):
    res = run(["gadget", "F", "--b", "2", "--T", "37", "--out-dir", out])
    start = time.monotonic()
    res = run(["spectrum", "--graph", res.artifacts[0], "--budget", "300", "--out-dir", out])
    assert res.status == "timeout" and time.monotonic() - start < 5
    assert any("undecided" in line for line in res.summary)


def test_boldF_realize(out):
    res = run(["gadget", "boldF", "--k", "1", "--d", "24", "--realize", "99", "--out-dir", out])
    assert res.status == "ok"
    assert run(["verify", "--graph", res.artifacts[0], "--coloring", res.artifacts[1]]).summary == [
        "interval: yes, colors: 99"
    ]
    res = run(["gadget", "boldF", "--k", "1", "--d", "24", "--realize", "80", "--out-dir", out])
    assert res.status == "none"


def test_thickness(out):
    g = write(os.path.join(out, "k5.json"), complete(5).to_json())
    res = run(["thickness", "--graph", g, "--exact", "--out-dir", out])
    assert res.status == "ok" and res.summary == ["thickness: 2 (exact)"]
    res = run(["thickness", "--graph", g, "--out-dir", out])
    assert res.status == "ok" and res.summary[0].startswith("thickness: 2 <= theta <=")
    data = json.load(open(res.artifacts[0]))
    assert sum(len(p["edges"]) for p in data["parts"]) == 10


def test_schedule_and_sessions(out):
    inst = write(os.path.join(out, "inst.csv"), "parent,teacher\na,x\na,y\nb,x\nb,y\n")
    res = run(["schedule", "--instance", inst, "--out-dir", out])
    assert res.status == "ok" and "horizon: 2 slots" in res.summary
    assert open(res.artifacts[0]).readline().strip() == "meeting,parent,teacher,session,slot"
    res = run(["schedule", "--instance", inst, "--horizon", "4", "--out-dir", out])
    assert res.status == "none"
    res = run(["schedule", "--instance", inst, "--sessions", "--format", "json", "--out-dir", out])
    assert res.status == "ok" and len(json.load(open(res.artifacts[0]))["timetable"]) == 4


def test_demo_gaps(out):
    res = run(["demo-gaps", "--k", "1", "--d", "24", "--budget", "300", "--out-dir", out])
    assert res.status == "ok"
    names = sorted(os.path.basename(p) for p in res.artifacts)
    assert names == ["conference_k1_d24.csv", "report.md", "timetable_74_slots.csv", "timetable_99_slots.csv"]
    sched = run(["schedule", "--instance", res.artifacts[0], "--horizon", "80", "--budget", "300", "--out-dir", out])
    assert sched.status in ("none", "timeout")


def test_export_dot(out):
    res = run(["gadget", "F", "--b", "1", "--T", "27", "--color", "--out-dir", out])
    g_path = res.artifacts[0]
    assert Graph.from_json(open(g_path).read()).edge_count == 70
    res = run(["export-dot", "--graph", g_path, "--coloring", res.artifacts[1], "--out-dir", os.path.join(out, "dot")])
    assert res.status == "ok" and open(res.artifacts[0]).read().startswith("graph")


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["spectrum", "--graph", "g.json", "--bogus"],
        ["verify", "--graph", "/nonexistent.json", "--coloring", "/nonexistent.json"],
        ["gadget", "F", "--b", "1"],
        ["gadget", "F", "--b", "1", "--T", "28"],
    ],
)
def test_errors_are_reported(argv):
    res = run(argv)
    assert res.status == "error" and res.summary and res.summary[0]


def test_disconnected_spectrum_error(out):
    from intervalcolor.graph import build_graph

    g = write(os.path.join(out, "two.json"), build_graph(range(4), [(0, 1), (2, 3)]).to_json())
    res = run(["spectrum", "--graph", g])
    assert res.status == "error" and "connected" in res.summary[0]
