import json
import os
import subprocess

import pytest

CLI = os.environ.get("PLANEGERM_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="PLANEGERM_CLI not set")

X = {"order": 12, "terms": [{"i": 1, "j": 0, "c": "1"}]}


def germ(*terms, order=12):
    return {"f1": dict(X, order=order), "f2": {"order": order, "terms": [{"i": i, "j": j, "c": c} for i, j, c in terms]}}


def run(*args, stdin=None):
    p = subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)
    return p.returncode, p.stdout


def test_exit_codes():
    code, out = run("classify", "--inline", json.dumps(germ((1, 1, "1"), (0, 5, "1"))))
    assert code == 0 and json.loads(out)["label"] == "7"
    corank2 = {"f1": {"order": 4, "terms": [{"i": 2, "j": 0, "c": "1"}]}, "f2": {"order": 4, "terms": [{"i": 0, "j": 2, "c": "1"}]}}
    assert run("classify", "--inline", json.dumps(corank2))[0] == 2
    assert run("classify", "--inline", json.dumps(germ((1, 1, "1"), order=5)))[0] == 1
    assert run("classify", "--inline", "{")[0] == 1


def test_output_round_trips_and_is_independent_of_jobs():
    batch = [germ((1, 1, "1"), (0, k, "1")) for k in range(3, 6)] + [
        germ((1, 1, "1"), (0, 6, "1"), (0, 8, "1")),
        germ((1, 1, "1"), (0, 7, "1"), (0, 9, "1")),
        germ((1, 2, "1"), (0, 4, "1"), (0, 5, "1")),
    ]
    code1, out1 = run("classify", "--jobs", "1", stdin=json.dumps(batch))
    code4, out4 = run("classify", "--jobs", "4", stdin=json.dumps(batch))
    assert code1 == code4 == 0
    assert out1 == out4
    labels = [r["label"] for r in json.loads(out1)]
    assert labels == ["3", "5", "7", "8+", "10+", "11_5"]
    assert json.loads(json.dumps(json.loads(out1))) == json.loads(out1)


def test_table_fixtures_scan_project():
    code, out = run("table")
    assert code == 0 and json.loads(out)["pass"] == 30
    code, out = run("fixtures")
    assert code == 0 and json.loads(out)["pass"] == 20
    monge = {"order": 10, "c": [{"i": 1, "j": 1, "v": "1"}, {"i": 5, "j": 0, "v": "1"}]}
    code, out = run("scan", "--inline", json.dumps(monge))
    assert code == 0 and all(g["label"] == "6" for g in json.loads(out)["intervals"])
    code, out = run("project", "--inline", json.dumps({"monge": monge, "viewpoint": {"a": "1/3"}, "row": "6"}))
    assert code == 0 and json.loads(out)["constraints"]["satisfied"]
    code, _ = run("project", "--inline", json.dumps({"monge": {"order": 8, "c": [{"i": 1, "j": 1, "v": "1"}]}}))
    assert code == 2
