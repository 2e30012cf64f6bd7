"""Degree-based invariants computed straight from their definitions.

These are the oracles for every closed form. Where an invariant has both a
vertex-sum and an edge-sum definition, both are provided and the test suite
checks they agree. Arithmetic is on Python ints, so values are exact at any
size.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, complement_pairs


def m1(g: Graph) -> int:
    """First Zagreb index: sum of squared degrees."""
    return sum(d * d for d in g.degrees)


def m1_edge_form(g: Graph) -> int:
    d = g.degrees
    return sum(d[u] + d[v] for u, v in g.edges)


def m2(g: Graph) -> int:
    """Second Zagreb index: sum over edges of endpoint-degree products."""
    d = g.degrees
    return sum(d[u] * d[v] for u, v in g.edges)


def f_index(g: Graph) -> int:
    """Forgotten index: sum of cubed degrees."""
    return sum(d**3 for d in g.degrees)


def f_index_edge_form(g: Graph) -> int:
    d = g.degrees
    return sum(d[u] ** 2 + d[v] ** 2 for u, v in g.edges)


def f_coindex_direct(g: Graph) -> int:
    """F-coindex by enumerating non-adjacent pairs, with degrees taken in ``g``."""
    d = g.degrees
    return sum(d[u] ** 2 + d[v] ** 2 for u, v in complement_pairs(g))


def rezg3(g: Graph) -> int:
    d = g.degrees
    return sum(d[u] * d[v] * (d[u] + d[v]) for u, v in g.edges)


def xi4(g: Graph) -> int:
    """Sum of fourth powers of degrees."""
    return sum(d**4 for d in g.degrees)


def xi4_edge_form(g: Graph) -> int:
    d = g.degrees
    return sum(d[u] ** 3 + d[v] ** 3 for u, v in g.edges)


@dataclass(frozen=True)
class IndexReport:
    n: int
    m: int
    M1: int
    M2: int
    F: int
    Fbar: int
    ReZG3: int
    Xi4: int

    FIELDS = ("n", "m", "M1", "M2", "F", "Fbar", "ReZG3", "Xi4")

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.FIELDS}


def report(g: Graph) -> IndexReport:
    return IndexReport(
        n=g.n,
        m=g.m,
        M1=m1(g),
        M2=m2(g),
        F=f_index(g),
        Fbar=f_coindex_direct(g),
        ReZG3=rezg3(g),
        Xi4=xi4(g),
    )
