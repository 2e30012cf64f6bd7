"""Immutable simple undirected graphs on vertices ``0..n-1``."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Tuple

from .errors import DuplicateEdge, EndpointOutOfRange, LoopEdge

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph.

    ``edges`` holds canonical ``(min, max)`` pairs in lexicographic order.
    Build instances with :func:`make_graph`; the constructor trusts its input.
    """

    n: int
    edges: Tuple[Edge, ...] = field(default=())

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @cached_property
    def edge_index(self) -> dict:
        """Map each canonical edge to its position in ``edges``."""
        return {e: k for k, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        nbrs = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def make_graph(n: int, edge_list: Iterable[Tuple[int, int]]) -> Graph:
    """Validate ``edge_list`` and return the canonical :class:`Graph`.

    Loops, out-of-range endpoints and repeated pairs are rejected, never
    repaired.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    seen = set()
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if u == v:
            raise LoopEdge((u, v))
        if not (0 <= u < n and 0 <= v < n):
            raise EndpointOutOfRange((u, v), n)
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge((u, v))
        seen.add(e)
    return Graph(n, tuple(sorted(seen)))


def degrees(g: Graph) -> Tuple[int, ...]:
    """Degree sequence of ``g``; entry ``v`` counts the edges containing ``v``."""
    return g.degrees


def complement_pairs(g: Graph) -> Iterator[Edge]:
    """Yield every non-adjacent pair ``(u, v)`` with ``u < v``, lexicographically."""
    adj = g.edge_set
    for e in combinations(range(g.n), 2):
        if e not in adj:
            yield e


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (vacuous for n <= 1)."""
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


def relabel(g: Graph, perm) -> Graph:
    """Return the image of ``g`` under the vertex map ``v -> perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of range(n)")
    return make_graph(g.n, ((perm[u], perm[v]) for u, v in g.edges))
