"""Command-line surface: output forms, exit codes and error documents"""

import io
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.cli.formatting import emit
from src.cli.main import run
from src.core.supernat import parse_supernatural
from src.spectral import parse_patch
from src.tower import parse_matrix
from tests.strategies import matrices, patches, supernaturals

UNIVERSE = ["--universe-primes", "2,3,5", "--universe-exp", "2"]


def output(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err.strip()


# =============================================================================
# SUPERNATURALS AND PATCHES
# =============================================================================


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["snat", "gcd", "2^inf*3", "2^2*5"], "2^2"),
        (["snat", "lcm", "12", "2^inf"], "2^inf*3"),
        (["snat", "divides", "2^3", "2^inf*3"], "true"),
        (["snat", "divides", "2^inf", "2^9"], "false"),
        (["snat", "cinf", "2^inf*3^inf"], "true"),
        (["snat", "gcd", "1;default=inf", "6"], "2*3"),
    ],
)
def test_snat(capsys, argv, expected):
    code, out, _ = output(capsys, argv)
    assert code == 0
    assert out == expected


def test_json_result(capsys):
    code, out, _ = output(capsys, ["snat", "gcd", "2^inf*3", "2^2*5", "--json"])
    assert code == 0
    assert json.loads(out) == {"result": "2^2"}
    code, out, _ = output(capsys, ["--json", "snat", "cinf", "6"])
    assert json.loads(out) == {"result": False}


def test_parse_errors_exit_with_two(capsys):
    code, out, err = output(capsys, ["snat", "gcd", "2^x", "1"])
    assert code == 2 and out == ""
    assert err.startswith("error:")
    code, _, err = output(capsys, ["snat", "gcd", "2^x", "1", "--json"])
    document = json.loads(err)
    assert code == 2
    assert document["kind"] == "ParseError"
    assert document["position"] == 2
    code, _, _ = output(capsys, ["snat", "gcd", "6"])
    assert code == 2


def test_usage_errors_exit_with_two(capsys):
    assert run([]) == 2
    assert run(["snat", "mod", "2", "3"]) == 2
    assert run(["mat", "embed", "1,0;0,1"]) == 2
    capsys.readouterr()


def test_patch_queries(capsys):
    assert output(capsys, ["patch", "member", "2^inf*3", "--patch", "multiples:2^inf"])[1] == "true"
    assert output(capsys, ["patch", "empty", "--patch", "intersection(divclosure:4,multiples:8)"])[1] == "true"
    assert output(capsys, ["patch", "witness", "--patch", "specz", "--exclude", "6"])[1] == "2^0;default=inf"
    code, out, _ = output(capsys, ["patch", "witness", "--patch", "divclosure:4", "--base", "8"])
    assert code == 0 and out == "none"


def test_patch_from_file(capsys, tmp_path):
    path = tmp_path / "patch.json"
    path.write_text(json.dumps({"union": [{"fgopen": [2]}, "specz"]}), encoding="utf-8")
    code, out, _ = output(capsys, ["patch", "member", "3^inf", "--patch", f"@{path}"])
    assert code == 0 and out == "false"


# =============================================================================
# COVERS, POINTS AND THE TRIVIALIZING CRITERION
# =============================================================================


def test_cover_check(capsys):
    argv = ["cover", "check", "--base", "2", "--gens", "12", "--patch", "multiples:2^inf*3^inf"]
    assert output(capsys, argv) == (0, "true", "")
    assert output(capsys, argv + ["--cross-check"] + UNIVERSE)[:2] == (0, "true")
    assert output(capsys, ["cover", "check", "--sieve", "base:1 gens:6", "--patch", "specz"])[1] == "false"


def test_cross_check_over_a_widened_universe(capsys):
    argv = ["cover", "check", "--sieve", "base:1 gens:2,3", "--patch", "specz", "--cross-check", "--widened"] + UNIVERSE
    assert output(capsys, argv)[:2] == (0, "true")
    argv = ["cover", "check", "--sieve", "base:1 gens:6", "--patch", "specz", "--cross-check", "--widened"] + UNIVERSE
    assert output(capsys, argv)[:2] == (0, "false")


def test_cross_check_rejects_foreign_primes(capsys):
    argv = ["cover", "check", "--sieve", "base:1 gens:7", "--patch", "fgopen:7", "--cross-check"] + UNIVERSE
    code, _, err = output(capsys, argv)
    assert code == 1 and "outside the universe" in err


def test_subcover(capsys):
    argv = ["cover", "subcover", "--sieve", "base:1 gens:2,3,5,7,11", "--patch", "specz"]
    assert output(capsys, argv)[:2] == (0, "2,3")
    code, _, err = output(capsys, ["cover", "subcover", "--sieve", "base:1 gens:6", "--patch", "specz", "--json"])
    assert code == 1
    assert json.loads(err)["kind"] == "PreconditionError"


def test_point(capsys):
    assert output(capsys, ["point", "check", "5^0;default=inf", "--patch", "specz"])[1] == "member"
    assert output(capsys, ["point", "check", "2^inf", "--patch", "specz"])[1] == "nonpoint n=1 family=3,5"
    code, out, _ = output(capsys, ["point", "check", "2^inf", "--patch", "specz", "--json"])
    assert json.loads(out) == {"result": {"kind": "nonpoint", "n": 1, "family": [3, 5]}}


def test_trivializing(capsys):
    assert output(capsys, ["triv", "zariski", "--patch", "powersetprimes"])[1] == "true"
    assert output(capsys, ["triv", "zariski", "--patch", "divclosure:12"])[1] == "false"


# =============================================================================
# POSETS AND TOWERS
# =============================================================================


def test_poset_embed(capsys, tmp_path):
    path = tmp_path / "chain3.poset"
    path.write_text("a < b < c\n", encoding="utf-8")
    assert output(capsys, ["poset", "embed", str(path)])[:2] == (0, "a=2\nb=4\nc=8")
    code, out, _ = output(capsys, ["poset", "embed", str(path), "--json"])
    assert json.loads(out) == {"result": {"a": 2, "b": 4, "c": 8}}
    code, _, _ = output(capsys, ["poset", "embed", str(tmp_path / "missing.poset")])
    assert code == 1


def test_tower(capsys):
    assert output(capsys, ["tower", "snat", "--chain", "2,12,24", "--ratio", "2"])[1] == "2^inf*3"
    assert output(capsys, ["tower", "chain", "2^inf*3", "--k", "3"])[1] == "2,12,24"
    assert output(capsys, ["tower", "snat", "--chain", "2,3"])[0] == 1


# =============================================================================
# MATRICES
# =============================================================================


def test_mat_embed_and_trace(capsys):
    code, out, _ = output(capsys, ["mat", "embed", "0,1;0,0", "--to", "4"])
    assert code == 0
    assert out == "0,0,1,0;0,0,0,1;0,0,0,0;0,0,0,0"
    assert output(capsys, ["mat", "trace", "1,0;0,0"])[1] == "1/2"
    assert output(capsys, ["mat", "embed", "1,0;0,1", "--to", "3"])[0] == 1


def test_mat_conj_and_equivn(capsys):
    code, out, _ = output(capsys, ["mat", "conj", "--n", "2", "--m", "2", "--psi-conj", "2,1;1,1"])
    assert code == 0 and out == "1,1/2;1/2,1/2"
    argv = ["mat", "equivn", "--g", "1,2;0,1", "--h", "1,0;0,1", "--n", "1"]
    assert output(capsys, argv)[1] == "true"
    argv = ["mat", "equivn", "--g", "1,2;0,1", "--h", "1,0;0,1", "--n", "2"]
    assert output(capsys, argv)[1] == "false"


def test_mat_rep(capsys):
    presentation = "generators: x\nrelation: x^2 - 1"
    argv = ["mat", "rep", "--presentation", presentation, "--assign", "x=1,0;0,-1"]
    assert output(capsys, argv)[1] == "true"
    assert output(capsys, argv + ["--push", "4"])[1] == "true"
    weyl = "generators: x, y\nrelation: x*y - y*x - 1"
    argv = ["mat", "rep", "--presentation", weyl, "--assign", "x=0,1;0,0", "--assign", "y=0,0;1,0"]
    assert output(capsys, argv)[1] == "false"
    assert output(capsys, ["mat", "rep", "--presentation", presentation, "--assign", "x"])[0] == 2


def test_relation_text_is_never_evaluated(capsys):
    hostile = "x.subs.__func__.__globals__['__builtins__']['__import__']('os').system('echo hit') + x"
    for relation in [hostile, "x.foo"]:
        argv = ["mat", "rep", "--presentation", f"generators: x\nrelation: {relation}", "--assign", "x=1", "--json"]
        code, out, err = output(capsys, argv)
        assert code == 2 and out == ""
        assert json.loads(err)["kind"] == "ParseError"


def test_non_ascii_digits_are_parse_errors(capsys):
    assert output(capsys, ["snat", "gcd", "2^²", "4"])[0] == 2
    assert output(capsys, ["cover", "check", "--base", "²", "--gens", "2", "--patch", "specz"])[0] == 2
    assert output(capsys, ["cover", "check", "--base", "1", "--gens", "2,³", "--patch", "specz"])[0] == 2


# =============================================================================
# ROUND TRIPS
# =============================================================================


def printed(value, as_json=False) -> str:
    stream = io.StringIO()
    emit(value, as_json, stream)
    text = stream.getvalue().strip()
    return json.loads(text)["result"] if as_json else text


@pytest.mark.property_based
@given(supernaturals(primes=(2, 3, 5, 7, 11)))
@settings(max_examples=1000, deadline=None)
def test_printed_supernaturals_reparse(s):
    assert parse_supernatural(printed(s)) == s
    assert parse_supernatural(printed(s, as_json=True)) == s


@pytest.mark.property_based
@given(patches())
@settings(max_examples=200, deadline=None)
def test_printed_patches_reparse(S_):
    assert parse_patch(printed(S_)) == S_


@pytest.mark.property_based
@given(st.sampled_from([1, 2, 3]), st.data())
@settings(max_examples=100, deadline=None)
def test_printed_matrices_reparse(n, data):
    x = data.draw(matrices(n))
    assert parse_matrix(printed(x)) == x
    assert parse_matrix(printed(x, as_json=True)) == x
