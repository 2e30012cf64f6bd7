from itertools import combinations

import pytest
from hypothesis import given

from findex.errors import DuplicateEdge, EndpointOutOfRange, LoopEdge
from findex.generators import complete, cycle, star
from findex.graph import complement_pairs, degrees, is_connected, make_graph

from conftest import graphs


def test_triangle():
    g = make_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g.m == 3
    assert g.edges == ((0, 1), (0, 2), (1, 2))


def test_duplicate_edge_names_pair():
    with pytest.raises(DuplicateEdge) as info:
        make_graph(4, [(0, 1), (1, 0)])
    assert info.value.pair == (1, 0)


def test_loop_and_range_rejected():
    with pytest.raises(LoopEdge):
        make_graph(3, [(1, 1)])
    with pytest.raises(EndpointOutOfRange) as info:
        make_graph(3, [(0, 3)])
    assert info.value.pair == (0, 3)


def test_star_degree_sequence():
    g = make_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    assert degrees(g) == (4, 1, 1, 1, 1)


@pytest.mark.parametrize(
    "g, expected",
    [(cycle(4), (2, 2, 2, 2)), (star(4), (3, 1, 1, 1)), (complete(4), (3, 3, 3, 3))],
)
def test_degrees(g, expected):
    assert degrees(g) == expected


def test_complement_pairs_examples():
    assert list(complement_pairs(complete(4))) == []
    assert list(complement_pairs(cycle(4))) == [(0, 2), (1, 3)]
    assert len(list(complement_pairs(cycle(5)))) == 10 - 5


def test_is_connected():
    assert is_connected(cycle(6))
    two_triangles = make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_connected(two_triangles)
    assert is_connected(make_graph(1, []))
    assert is_connected(make_graph(0, []))


@given(graphs())
def test_handshake(g):
    assert sum(degrees(g)) == 2 * g.m
    for v in range(g.n):
        assert degrees(g)[v] == sum(v in e for e in g.edges)


@given(graphs())
def test_edges_and_complement_partition_all_pairs(g):
    comp = list(complement_pairs(g))
    assert len(comp) == len(set(comp)) == g.n * (g.n - 1) // 2 - g.m
    assert set(comp) | set(g.edges) == set(combinations(range(g.n), 2))
    assert not set(comp) & set(g.edges)


@given(graphs())
def test_round_trip_is_identity(g):
    reversed_pairs = [(v, u) for u, v in reversed(g.edges)]
    assert make_graph(g.n, reversed_pairs) == g
