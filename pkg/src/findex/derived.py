"""Explicit construction of the six derived graphs.

Labeling is fixed so outputs are reproducible:

* ``L``: vertex ``k`` is edge ``k`` of the base graph (canonical order).
* ``S``, ``T1``, ``T2``, ``T``: vertices ``0..n-1`` are the base vertices,
  vertex ``n + k`` stands for edge ``k``.
* ``PL``: built as ``line_graph(subdivision(g))`` and keeps that labeling,
  so vertex ``j`` is edge ``j`` of the subdivision graph. Its provenance
  names the base incidence ``(edge index, endpoint)`` it came from.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import List, Tuple, Union

from .graph import Graph, make_graph


class DerivedKind(str, Enum):
    L = "L"
    S = "S"
    T1 = "T1"
    T2 = "T2"
    T = "T"
    PL = "PL"

    def __str__(self) -> str:
        return self.value


KINDS = tuple(DerivedKind)


@dataclass(frozen=True)
class Original:
    u: int


@dataclass(frozen=True)
class EdgeVertex:
    e: int


@dataclass(frozen=True)
class SubdividedHalf:
    e: int
    u: int


Provenance = Union[Original, EdgeVertex, SubdividedHalf]


@dataclass(frozen=True)
class DerivedGraph:
    kind: DerivedKind
    base: Graph
    graph: Graph
    provenance: Tuple[Provenance, ...]


def _line_edges(g: Graph, offset: int = 0) -> List[Tuple[int, int]]:
    incident = [[] for _ in range(g.n)]
    for k, (u, v) in enumerate(g.edges):
        incident[u].append(k)
        incident[v].append(k)
    # two distinct edges of a simple graph share at most one endpoint
    return [(a + offset, b + offset) for ks in incident for a, b in combinations(ks, 2)]


def _subdivision_edges(g: Graph) -> List[Tuple[int, int]]:
    out = []
    for k, (u, v) in enumerate(g.edges):
        out.append((u, g.n + k))
        out.append((v, g.n + k))
    return out


def _vertex_and_edge_provenance(g: Graph) -> Tuple[Provenance, ...]:
    return tuple(Original(u) for u in range(g.n)) + tuple(EdgeVertex(k) for k in range(g.m))


def line_graph(g: Graph) -> DerivedGraph:
    lg = make_graph(g.m, _line_edges(g))
    return DerivedGraph(DerivedKind.L, g, lg, tuple(EdgeVertex(k) for k in range(g.m)))


def subdivision(g: Graph) -> DerivedGraph:
    sg = make_graph(g.n + g.m, _subdivision_edges(g))
    return DerivedGraph(DerivedKind.S, g, sg, _vertex_and_edge_provenance(g))


def vertex_semitotal(g: Graph) -> DerivedGraph:
    t1 = make_graph(g.n + g.m, _subdivision_edges(g) + list(g.edges))
    return DerivedGraph(DerivedKind.T1, g, t1, _vertex_and_edge_provenance(g))


def edge_semitotal(g: Graph) -> DerivedGraph:
    t2 = make_graph(g.n + g.m, _subdivision_edges(g) + _line_edges(g, offset=g.n))
    return DerivedGraph(DerivedKind.T2, g, t2, _vertex_and_edge_provenance(g))


def total_graph(g: Graph) -> DerivedGraph:
    edges = _subdivision_edges(g) + list(g.edges) + _line_edges(g, offset=g.n)
    return DerivedGraph(DerivedKind.T, g, make_graph(g.n + g.m, edges), _vertex_and_edge_provenance(g))


def paraline(g: Graph) -> DerivedGraph:
    sg = subdivision(g).graph
    pl = line_graph(sg).graph
    # subdivision edge (u, n + k) is the half of base edge k at endpoint u
    prov = tuple(SubdividedHalf(w - g.n, u) for u, w in sg.edges)
    return DerivedGraph(DerivedKind.PL, g, pl, prov)


CONSTRUCTORS = {
    DerivedKind.L: line_graph,
    DerivedKind.S: subdivision,
    DerivedKind.T1: vertex_semitotal,
    DerivedKind.T2: edge_semitotal,
    DerivedKind.T: total_graph,
    DerivedKind.PL: paraline,
}


def construct(kind, g: Graph) -> DerivedGraph:
    return CONSTRUCTORS[DerivedKind(kind)](g)


def expected_degree(dg: DerivedGraph, vertex: int) -> int:
    """Degree the provenance predicts for ``vertex`` of ``dg``."""
    g = dg.base
    d = g.degrees
    src = dg.provenance[vertex]
    kind = dg.kind
    if isinstance(src, Original):
        return 2 * d[src.u] if kind in (DerivedKind.T1, DerivedKind.T) else d[src.u]
    if isinstance(src, SubdividedHalf):
        return d[src.u]
    u, v = g.edges[src.e]
    if kind is DerivedKind.L:
        return d[u] + d[v] - 2
    if kind in (DerivedKind.S, DerivedKind.T1):
        return 2
    return d[u] + d[v]


def degree_fact_violations(dg: DerivedGraph) -> List[str]:
    """List every vertex whose degree contradicts its provenance (empty if none).

    For ``PL`` the multiset condition is also checked: each base vertex ``u``
    owns exactly ``d(u)`` vertices, all of degree ``d(u)``.
    """
    out = []
    if len(dg.provenance) != dg.graph.n:
        out.append(f"{dg.kind}: provenance covers {len(dg.provenance)} of {dg.graph.n} vertices")
        return out
    actual = dg.graph.degrees
    for x in range(dg.graph.n):
        want = expected_degree(dg, x)
        if actual[x] != want:
            out.append(f"{dg.kind}: vertex {x} ({dg.provenance[x]}) has degree {actual[x]}, expected {want}")
    if dg.kind is DerivedKind.PL:
        owners = Counter(p.u for p in dg.provenance)
        for u, du in enumerate(dg.base.degrees):
            if owners.get(u, 0) != du:
                out.append(f"PL: base vertex {u} owns {owners.get(u, 0)} vertices, expected {du}")
        for x, p in enumerate(dg.provenance):
            if dg.base.edges[p.e][0] != p.u and dg.base.edges[p.e][1] != p.u:
                out.append(f"PL: vertex {x} claims endpoint {p.u} not on edge {p.e}")
    return out
