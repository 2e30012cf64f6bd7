import random

import pytest
from hypothesis import given

from findex import indices as ix
from findex.generators import complete, cycle, star
from findex.graph import make_graph, relabel

from conftest import graphs


@pytest.mark.parametrize(
    "g, m1, m2, f, rezg3, xi4",
    [
        (cycle(4), 16, 16, 32, 64, 64),
        (star(4), 12, 9, 30, 36, 84),
        (complete(4), 36, 54, 108, 324, 324),
    ],
)
def test_small_values(g, m1, m2, f, rezg3, xi4):
    assert ix.m1(g) == m1
    assert ix.m2(g) == m2
    assert ix.f_index(g) == f
    assert ix.rezg3(g) == rezg3
    assert ix.xi4(g) == xi4


@pytest.mark.parametrize("n", range(3, 15))
def test_cycle_closed_values(n):
    g = cycle(n)
    assert ix.f_index(g) == 8 * n
    assert ix.rezg3(g) == 16 * n
    assert ix.xi4(g) == 16 * n


def test_coindex_values():
    for n in range(1, 8):
        assert ix.f_coindex_direct(complete(n)) == 0
    # two diagonals of C4, each 2^2 + 2^2
    assert ix.f_coindex_direct(cycle(4)) == 16
    assert ix.f_coindex_direct(cycle(5)) == 4 * 5 * (5 - 3)


def test_report_examples():
    assert ix.report(cycle(4)).as_dict() == dict(n=4, m=4, M1=16, M2=16, F=32, Fbar=16, ReZG3=64, Xi4=64)
    assert ix.report(make_graph(5, [])).as_dict() == dict(n=5, m=0, M1=0, M2=0, F=0, Fbar=0, ReZG3=0, Xi4=0)
    k2 = ix.report(complete(2))
    assert (k2.M1, k2.M2, k2.F, k2.Fbar, k2.ReZG3, k2.Xi4) == (2, 1, 2, 0, 2, 2)


def test_single_vertex_coindex():
    g = make_graph(1, [])
    assert ix.f_coindex_direct(g) == 0 == (g.n - 1) * ix.m1(g) - ix.f_index(g)


@given(graphs())
def test_vertex_and_edge_forms_agree(g):
    assert ix.m1(g) == ix.m1_edge_form(g)
    assert ix.f_index(g) == ix.f_index_edge_form(g)
    assert ix.xi4(g) == ix.xi4_edge_form(g)


@given(graphs())
def test_coindex_identity(g):
    assert ix.f_coindex_direct(g) == (g.n - 1) * ix.m1(g) - ix.f_index(g)


@given(graphs())
def test_invariants_nonnegative(g):
    assert all(v >= 0 for v in ix.report(g).as_dict().values())


@given(graphs())
def test_relabeling_invariance(g):
    perm = list(range(g.n))
    random.Random(g.n * 1000 + g.m).shuffle(perm)
    assert ix.report(relabel(g, perm)) == ix.report(g)


def test_large_values_are_exact():
    k = complete(300)
    assert ix.xi4(k) == 300 * 299**4
    assert isinstance(ix.xi4(k), int)
