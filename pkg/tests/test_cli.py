import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from geo5.cli import cli


DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def runner():
    return CliRunner()


def test_classify_key_leaf(runner):
    result = runner.invoke(cli, ["classify", str(DATA / "a5_2.json")])
    assert result.exit_code == 0
    assert "A5,2 (certified)" in result.stdout


def test_classify_family_member_as_json(runner):
    result = runner.invoke(cli, ["classify", str(DATA / "sol5_diag.json"), "--json", "--conjugations", "3"])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["label"] == "A5,7^{a,b,-1-a-b}(1, 2/3, 1/3, -2)"
    assert data["invariance"]["invariant"] is True


def test_classify_not_in_key(runner):
    result = runner.invoke(cli, ["classify", str(DATA / "heis5.json")])
    assert result.exit_code == 1
    assert "NotInKey" in result.stdout


def test_classify_unreadable_input(runner, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    assert runner.invoke(cli, ["classify", str(broken)]).exit_code == 2
    assert runner.invoke(cli, ["classify", str(tmp_path / "missing.json")]).exit_code == 2


def test_classify_invalid_algebra(runner, tmp_path):
    doc = {
        "dim": 3,
        "brackets": [
            {"i": 0, "j": 1, "terms": [{"k": 2, "q": "1"}]},
            {"i": 1, "j": 2, "terms": [{"k": 1, "q": "1"}]},
            {"i": 0, "j": 2, "terms": [{"k": 0, "q": "1"}]},
        ],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    result = runner.invoke(cli, ["classify", str(path)])
    assert result.exit_code == 1


def test_atlas_list(runner):
    result = runner.invoke(cli, ["atlas", "list", "--json"])
    assert result.exit_code == 0
    assert len(json.loads(result.stdout)) == 59
    result = runner.invoke(cli, ["atlas", "list", "--category", "1"])
    assert len(result.stdout.strip().splitlines()) == 3


def test_atlas_show(runner):
    result = runner.invoke(cli, ["atlas", "show", "Heis_5", "--json"])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["metadata"]["stabilizer"] == "U(2)"
    assert data["entry"]["algebra"]["dim"] == 5
    assert runner.invoke(cli, ["atlas", "show", "nowhere"]).exit_code == 1


def test_isotropy(runner):
    assert runner.invoke(cli, ["isotropy", "contains", "SO(5)", "SU(2)"]).stdout.strip() == "yes"
    assert runner.invoke(cli, ["isotropy", "contains", "SO(3)_5", "SO(3)"]).stdout.strip() == "no"
    assert runner.invoke(cli, ["isotropy", "contains", "SO(7)", "1"]).exit_code == 1


def test_group_check(runner):
    result = runner.invoke(cli, ["group", "check", "A5,33^{-1,-1}", "--json"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["passed"] is True
    assert runner.invoke(cli, ["group", "check", "S^5"]).exit_code == 1


def test_lattice_commands(runner):
    assert runner.invoke(cli, ["lattice", "unit-check", "x^3 + x^2 - 2*x - 1"]).exit_code == 0
    rejected = runner.invoke(cli, ["lattice", "unit-check", "x^3 - 2"])
    assert rejected.exit_code == 1
    assert "not totally real" in rejected.stdout
    assert runner.invoke(cli, ["lattice", "unit-check", "x^3 +"]).exit_code == 2
    result = runner.invoke(cli, ["lattice", "dirichlet", "x^3 + x^2 - 2*x - 1", "--json"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["verified"] is True


def test_sol_search(runner):
    result = runner.invoke(cli, ["lattice", "sol-search", "--poly", "x^3 - 6*x^2 + 5*x - 1", "--json"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["witness"] == [6, 5]
    assert runner.invoke(cli, ["lattice", "sol-search"]).exit_code == 2
    assert runner.invoke(cli, ["lattice", "sol-search", "--target", "{bad"]).exit_code == 2
    malformed = '{"degree": 3, "normalized_logs": [2, -1, -1]}'
    assert runner.invoke(cli, ["lattice", "sol-search", "--target", malformed]).exit_code == 1


def test_curvature(runner):
    result = runner.invoke(cli, ["curvature", "Sol^3 x E^2", "--json"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["scalar"] == "-2"
