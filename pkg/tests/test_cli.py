import io
import json
import sys

import pytest

from findex.cli import main
from findex.formats import parse_edge_list, parse_graph6, serialize_edge_list
from findex.generators import complete, cycle, star


def run(argv, stdin=None, monkeypatch=None, capsys=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin=None: run(argv, stdin, monkeypatch, capsys)


def test_gen_then_indices(cli):
    code, out, _ = cli(["gen", "--family", "cycle", "--n", "5"])
    assert code == 0
    code, out, _ = cli(["indices", "-"], stdin=out)
    assert code == 0
    assert json.loads(out)["F"] == 40


def test_indices_csv(cli, tmp_path):
    f = tmp_path / "c4.txt"
    f.write_text(serialize_edge_list(cycle(4)))
    code, out, _ = cli(["indices", "--csv", str(f)])
    assert out.splitlines() == ["n,m,M1,M2,F,Fbar,ReZG3,Xi4", "4,4,16,16,32,16,64,64"]


def test_verify_exit_zero(cli):
    code, out, _ = cli(["verify", "-"], stdin=serialize_edge_list(cycle(7)))
    assert code == 0
    assert all(r["verdict"] == "MATCH" for r in json.loads(out))


def test_derive_line_graph_of_star(cli):
    code, out, _ = cli(["derive", "--kind", "L", "-"], stdin="4 3\n0 1\n0 2\n0 3\n")
    assert code == 0
    assert parse_edge_list(out) == complete(3)


def test_derive_provenance_still_parses(cli):
    code, out, _ = cli(["derive", "--kind", "PL", "--provenance", "-"], stdin=serialize_edge_list(star(4)))
    assert out.startswith("# 0 half edge=0 endpoint=0\n")
    assert parse_edge_list(out).n == 6


def test_derive_graph6(cli):
    code, out, _ = cli(["derive", "--kind", "S", "--graph6", "-"], stdin=serialize_edge_list(cycle(3)))
    assert code == 0 and parse_graph6(out).m == 6


def test_graph6_input(cli):
    code, out, _ = cli(["indices", "--format", "graph6", "-"], stdin="Bw\nCr\n")
    assert code == 0
    assert [r["n"] for r in json.loads(out)] == [3, 4]


def test_input_errors_exit_2(cli, tmp_path):
    code, _, err = cli(["indices", "-"], stdin="2 1\n0 0\n")
    assert code == 2 and "line 2" in err
    code, _, err = cli(["indices", str(tmp_path / "missing.txt")])
    assert code == 2
    code, _, _ = cli(["gen", "--family", "cycle", "--n", "2"])
    assert code == 2
    code, _, _ = cli(["gen", "--family", "random", "--n", "4"])
    assert code == 2


def test_disconnected_warns(cli):
    code, _, err = cli(["indices", "-"], stdin="4 1\n0 1\n")
    assert code == 0 and "disconnected" in err


def test_sweep_exit_zero(cli):
    code, out, _ = cli(["sweep", "--count", "5", "--nmax", "6", "--p", "0.3,0.7", "--seed", "2", "--csv"])
    assert code == 0
    assert out.splitlines()[0] == "graph,kind,invariant,source,closed,oracle,verdict"


def test_examples_and_errata(cli):
    code, out, _ = cli(["examples", "--range", "3..6"])
    assert code == 0
    data = json.loads(out)
    assert data["parameters"]["n_range"] == [3, 6]
    code, out, _ = cli(["errata"])
    assert code == 0
    assert len(json.loads(out)["formulas"]) == 30


def test_gen_random_and_output(cli, tmp_path):
    dest = tmp_path / "g.g6"
    code, out, _ = cli(["gen", "--family", "random", "--n", "8", "--p", "0.5", "--seed", "42",
                        "--format", "graph6", "--output", str(dest)])
    assert code == 0 and out == ""
    assert dest.read_text() == "G^pXYK\n"


def test_gen_complete_bipartite(cli):
    code, out, _ = cli(["gen", "--family", "complete_bipartite", "--n", "1", "--n2", "3"])
    assert parse_edge_list(out) == star(4)
