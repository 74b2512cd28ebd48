import json
import os
import subprocess

import pytest

BIN = os.environ.get("SPRINGER_STRATA_BIN", "springer-strata")
SUITES = os.environ.get("SPRINGER_SUITE_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "suites"))


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("SPRINGER_STRATA_BUDGET", None)
    full_env.update(env or {})
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env)


def test_strata_rows():
    p = run("strata", "--jordan", "2,1", "--dims", "1,2", "--format", "json")
    assert p.returncode == 0
    assert len(json.loads(p.stdout)["strata"]) == 2

    p = run("strata", "--jordan", "1,1,1", "--dims", "1,2", "--format", "json")
    rows = json.loads(p.stdout)["strata"]
    assert len(rows) == 1
    assert rows[0]["poincare"] == [1, 2, 2, 1]

    p = run("strata", "--jordan", "3", "--dims", "1,2,3", "--format", "json")
    rows = json.loads(p.stdout)["strata"]
    assert [r["poincare"] for r in rows] == [[1]]


def test_verify_exit_codes():
    p = run("verify", "--jordan", "2,1", "--dims", "1,2", "--q", "2", "--format", "json")
    assert p.returncode == 0
    assert json.loads(p.stdout)["totals"]["brute"] == 5

    assert run("verify", "--jordan", "2,2", "--dims", "1,2,3,4", "--q", "3").returncode == 0
    assert run("verify", "--jordan", "2,1", "--dims", "2,1", "--q", "2").returncode == 2


@pytest.mark.parametrize(
    "args",
    [
        ["verify", "--jordan", "1,2", "--dims", "1"],
        ["verify", "--jordan", "2,1", "--dims", "1,4"],
        ["verify", "--jordan", "2,1", "--dims", "1", "--q", "4"],
        ["verify", "--jordan", "2,x", "--dims", "1"],
        ["verify", "--jordan", "2,1"],
        ["verify", "--jordan", "2,1", "--dims", "1", "--format", "xml"],
        ["verify", "--jordan", "2,1", "--dims", "1", "--checks", "bogus"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(args):
    assert run(*args).returncode == 2


def test_budget():
    assert run("verify", "--jordan", "2,1", "--dims", "1,2", "--budget", "20").returncode == 2
    assert run("verify", "--jordan", "2,1", "--dims", "1,2", "--budget", "21").returncode == 0
    assert run("verify", "--jordan", "2,1", "--dims", "1,2", env={"SPRINGER_STRATA_BUDGET": "20"}).returncode == 2
    p = run("verify", "--jordan", "2,1", "--dims", "1,2", "--budget", "21", env={"SPRINGER_STRATA_BUDGET": "20"})
    assert p.returncode == 0


def test_self_test_perturbation():
    base = ["verify", "--jordan", "2,1", "--dims", "1,2", "--perturb-fiber", "0"]
    assert run(*base).returncode == 1
    assert run(*base, "--expect-failure").returncode == 0
    assert run("verify", "--jordan", "2,1", "--dims", "1,2", "--expect-failure").returncode == 1


def test_json_round_trip_and_determinism():
    a = run("verify", "--jordan", "2,2", "--dims", "1,2", "--q", "3", "--format", "json", "--checks", "all")
    b = run("verify", "--jordan", "2,2", "--dims", "1,2", "--q", "3", "--format", "json", "--checks", "all")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    doc = json.loads(a.stdout)
    assert json.dumps(doc, indent=2, ensure_ascii=False) + "\n" == a.stdout
    for key in ("partition", "counts", "nonemptiness", "fibers", "phi_psi", "homogenize", "resolution"):
        assert key in doc["checks"]


def test_csv():
    p = run("verify", "--jordan", "2,1", "--dims", "1,2", "--format", "csv")
    lines = p.stdout.strip().split("\n")
    assert lines[0].startswith("alpha,kappa,")
    assert lines[1].startswith("1;1;1;2,0;1;1;1,")
    assert len(lines) == 3


def test_checks_strata_only():
    p = run("verify", "--jordan", "2,1", "--dims", "1,2", "--checks", "strata", "--format", "json")
    assert p.returncode == 0
    assert json.loads(p.stdout)["totals"]["brute"] is None


def test_suite(tmp_path):
    empty = tmp_path / "empty.json"
    empty.write_text("{}")
    p = run("suite", str(empty))
    assert p.returncode == 0
    assert "0/0 instances passed" in p.stdout

    perturbed = tmp_path / "perturbed.json"
    perturbed.write_text(json.dumps({"instances": [
        {"jordan": [2, 1], "dims": [1, 2], "q": 2, "expect": {"records": [[2, 1, 1], [3, 3, 1]]}}]}))
    assert run("suite", str(perturbed)).returncode == 1

    assert run("suite", str(tmp_path / "missing.json")).returncode == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{ not json")
    assert run("suite", str(broken)).returncode == 2

    shipped = os.path.join(SUITES, "acceptance.json")
    small = tmp_path / "small.json"
    doc = json.load(open(shipped))
    doc["instances"] = [i for i in doc["instances"] if sum(i["jordan"]) <= 3]
    small.write_text(json.dumps(doc))
    p = run("suite", str(small), "--format", "json")
    assert p.returncode == 0
    assert all(row["passed"] for row in json.loads(p.stdout))
