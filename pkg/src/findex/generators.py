"""Named graph families and seeded random graphs.

Random graphs use :class:`random.Random`, which is MT19937 seeded through
the reference ``init_by_array`` routine with the seed's 32-bit words
(least significant first). Pairs ``(u, v)``, ``u < v``, are visited in
lexicographic order and kept when ``genrand_res53() < p``. Any language
with the reference mt19937ar code reproduces the same graphs.
"""

from __future__ import annotations

import random
from itertools import combinations

from .errors import InvalidProbability, SizeTooSmall
from .graph import Graph, make_graph

SEED_BITS = 64


def _require(name: str, value: int, minimum: int) -> None:
    if value < minimum:
        raise SizeTooSmall(f"{name} requires n >= {minimum}, got {value}")


def cycle(n: int) -> Graph:
    _require("cycle", n, 3)
    return make_graph(n, ((i, (i + 1) % n) for i in range(n)))


def star(n: int) -> Graph:
    """Star on ``n`` vertices with center 0."""
    _require("star", n, 2)
    return make_graph(n, ((0, i) for i in range(1, n)))


def path(n: int) -> Graph:
    _require("path", n, 1)
    return make_graph(n, ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    _require("complete", n, 1)
    return make_graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts ``0..a-1`` and ``a..a+b-1``."""
    _require("complete_bipartite (first part)", a, 1)
    _require("complete_bipartite (second part)", b, 1)
    return make_graph(a + b, ((u, v) for u in range(a) for v in range(a, a + b)))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) driven by MT19937 seeded with ``seed`` (0 <= seed < 2**64)."""
    if not 0.0 <= p <= 1.0:
        raise InvalidProbability(f"edge probability must lie in [0, 1], got {p}")
    if n < 0:
        raise SizeTooSmall(f"random_graph requires n >= 0, got {n}")
    if not 0 <= seed < 2**SEED_BITS:
        raise ValueError(f"seed must be a {SEED_BITS}-bit unsigned integer, got {seed}")
    rng = random.Random(seed)
    return make_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


FAMILIES = {
    "cycle": cycle,
    "star": star,
    "path": path,
    "complete": complete,
}
