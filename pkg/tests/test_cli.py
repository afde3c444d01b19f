from __future__ import annotations

import io
import json

import jsonschema
import pytest

from schubert_lines import cli
from schubert_lines.acceptance import STAR_GOLDEN
from schubert_lines.arrangements import build
from schubert_lines.linalg import PrimeField


def call(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = cli.run(list(argv), out=out)
    return code, out.getvalue()


def call_json(*argv: str) -> tuple[int, dict]:
    code, text = call(*argv)
    return code, json.loads(text)


@pytest.fixture(scope="module")
def problem_file(tmp_path_factory):
    from schubert_lines.ffverify import segre_instance
    path = tmp_path_factory.mktemp("data") / "problem.json"
    path.write_text(json.dumps(segre_instance(2, PrimeField(5)).problem.to_json()))
    return str(path)


@pytest.fixture(scope="module")
def arrangement_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("data") / "arr.json"
    path.write_text(json.dumps(build(3, PrimeField(5), seed=0).to_json()))
    return str(path)


def test_chow_number_example():
    assert call_json("chow", "number", "--n", "3", "--alphas", "1,1,1,1") == (0, {"value": 2})


def test_chow_product_example():
    code, data = call_json("chow", "product", "--n", "3", "--classes", "(1,0),(1,0)")
    assert code == 0 and data == {"value": {"(2,0)": 1, "(1,1)": 1}}


def test_tableau_star_example():
    code, data = call_json("tableau", "star", "--t", "[[1,2,3],[4]]", "--alpha", "4")
    assert code == 0 and data["value"] == [t.to_json() for t in STAR_GOLDEN]


def test_arrangement_bound_example():
    assert call_json("arrangement", "bound", "--n", "5") == (0, {"value": 6})


def test_build_then_verify_round_trip(tmp_path):
    out = tmp_path / "arr.json"
    code, data = call_json("arrangement", "build", "--n", "4", "--field", "Fp:3", "--seed", "7",
                           "-o", str(out))
    assert code == 0 and data["value"]["verified"]
    assert json.loads(out.read_text()) == data
    code, report = call_json("arrangement", "verify", str(out))
    assert code == 0 and report["value"]["ok"]
    assert call_json("arrangement", "verify", "--input", str(out)) == (code, report)


def test_unknown_flag_exits_64():
    code, data = call_json("chow", "number", "--n", "3", "--bogus", "1")
    assert code == 64 and data["error"]["kind"] == "usage"
    assert call("nosuchgroup")[0] == 64
    assert call("chow", "number", "--n", "3")[0] == 64
    assert call("arrangement", "verify")[0] == 64
    assert call("ff", "solve", "--problem", "/nonexistent/problem.json")[0] == 64


def test_malformed_json_exits_65(tmp_path):
    code, data = call_json("tableau", "star", "--t", "[[1,2", "--alpha", "1")
    assert code == 65 and data["error"]["kind"] == "malformed-json"
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert call("arrangement", "verify", str(bad))[0] == 65
    assert call("ff", "solve", "--problem", str(bad))[0] == 65


@pytest.mark.parametrize("argv", [
    ("tableau", "star", "--t", "[[2,1]]", "--alpha", "1"),
    ("tableau", "star", "--t", "[[1]]", "--alpha", "0"),
    ("chow", "number", "--n", "3", "--alphas", "1,1,1"),
    ("chow", "product", "--n", "3", "--classes", "(3,0)"),
    ("ff", "lines", "--n", "2", "--q", "4"),
    ("ff", "scroll", "--n", "5", "--q", "3"),
    ("ff", "segre", "--n", "2", "--q", "5", "--points", "[1,1],[2,2]"),
    ("arrangement", "build", "--n", "5", "--field", "Fp:2"),
    ("arrangement", "bound", "--n", "2"),
])
def test_domain_errors_exit_2(argv):
    code, data = call_json(*argv)
    assert code == 2
    jsonschema.validate(data, cli.load_schema("error.json"))
    assert data["error"]["kind"] == "domain" and data["error"]["message"]


def test_not_an_arrangement_is_a_domain_error(tmp_path):
    path = tmp_path / "x.json"
    path.write_text(json.dumps({"n": 3}))
    assert call("arrangement", "verify", str(path))[0] == 2


def test_accept_subset_passes():
    code, data = call_json("accept", "--only", "1,2")
    assert code == 0 and data["value"]["passed"]
    assert [c["id"] for c in data["value"]["criteria"]] == [1, 2]
    code, text = call("accept", "--only", "1", "--format", "table")
    assert code == 0 and text.startswith("[PASS]  1.")


def test_table_format():
    code, text = call("ff", "lines", "--n", "2", "--q", "2", "--format", "table")
    assert code == 0 and "closed_form: 7" in text


def test_output_is_byte_identical_across_runs(problem_file):
    for argv in (("arrangement", "build", "--n", "3", "--field", "Fp:5", "--seed", "3"),
                 ("ff", "solve", "--problem", problem_file, "--threads", "3"),
                 ("plactic", "circ", "--s", "[[1,2,3],[4]]", "--t", "[[1,2,3,4]]")):
        assert call(*argv) == call(*argv)


def test_manifest_digest(tmp_path):
    path = tmp_path / "manifest.json"
    code, text = call("chow", "number", "--n", "4", "--alphas", "1,1,1,1,1,1", "--seed", "3",
                      "--manifest", str(path))
    manifest = json.loads(path.read_text())
    jsonschema.validate(manifest, cli.load_schema("manifest.json"))
    assert manifest["digest"] == cli.digest(text.rstrip("\n"))
    assert manifest["subcommand"] == "chow number" and manifest["seed"] == 3
    assert manifest["parameters"]["n"] == 4


LEAVES = {
    "tableau star": ("tableau", "star", "--t", "[[1,2],[3]]", "--alpha", "2"),
    "tableau multistar": ("tableau", "multistar", "--alphas", "1,1,2", "--cap", "3"),
    "tableau count": ("tableau", "count", "--shape", "4,2", "--alphas", "2,2,2"),
    "plactic circ": ("plactic", "circ", "--s", "[[1,2,3],[4]]", "--t", "[[1,2,3,4]]"),
    "plactic lr": ("plactic", "lr", "--lam", "3,2,1", "--mu", "2,1", "--nu", "2,1"),
    "plactic rectify": ("plactic", "rectify", "--skew",
                        '{"outer":[2,1],"inner":[1],"rows":[[null,1],[2]]}'),
    "chow product": ("chow", "product", "--n", "4", "--classes", "(1,0),(2,1)"),
    "chow number": ("chow", "number", "--n", "3", "--classes", "(1,1),(1,1)"),
    "arrangement build": ("arrangement", "build", "--n", "3", "--field", "Fp:5"),
    "arrangement bound": ("arrangement", "bound", "--n", "6"),
    "arrangement minfield": ("arrangement", "minfield", "--n", "4"),
    "arrangement pencil": ("arrangement", "pencil", "--n", "3", "--field", "F7"),
    "ff lines": ("ff", "lines", "--n", "2", "--q", "3", "--list"),
    "ff segre": ("ff", "segre", "--n", "2", "--q", "5"),
    "ff scroll": ("ff", "scroll", "--n", "2", "--q", "5", "--roots", "[1,0],[0,1]"),
    "ff check lemma24": ("ff", "check", "lemma24", "--n", "3", "--q", "5"),
    "ff check restriction": ("ff", "check", "restriction", "--n", "3", "--q", "5"),
    "ff check lemma52": ("ff", "check", "lemma52", "--n", "3", "--q", "5"),
    "accept": ("accept", "--only", "8"),
}


@pytest.mark.parametrize("name", sorted(LEAVES))
def test_outputs_match_schemas(name):
    code, data = call_json(*LEAVES[name])
    assert code == 0, data
    schema_cmd = " ".join(name.split()[:2]) if name.startswith("ff check") else name
    jsonschema.validate(data, cli.load_schema(cli.schema_name(schema_cmd)))


def test_file_inputs_match_schemas(problem_file, arrangement_file):
    code, data = call_json("ff", "solve", "--problem", problem_file)
    assert code == 0 and data["value"]["count"] == 2
    jsonschema.validate(data, cli.load_schema("ff-solve.json"))
    jsonschema.validate(json.load(open(problem_file)), cli.load_schema("problem.json"))
    code, data = call_json("arrangement", "verify", arrangement_file)
    assert code == 0 and data["value"]["ok"]
    jsonschema.validate(data, cli.load_schema("arrangement-verify.json"))


def test_every_schema_is_exercised():
    names = {cli.schema_name(" ".join(k.split()[:2]) if k.startswith("ff check") else k)
             for k in LEAVES} | {"ff-solve.json", "arrangement-verify.json", "error.json",
                                 "manifest.json", "problem.json"}
    from importlib import resources
    shipped = {p.name for p in resources.files("schubert_lines").joinpath("schemas").iterdir()}
    assert shipped == names


def test_solve_reads_stdin(problem_file, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(open(problem_file).read()))
    code, data = call_json("ff", "solve", "--problem", "-")
    assert code == 0 and data["value"]["status"] == "matches prediction"
