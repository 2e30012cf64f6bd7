"""Edge-list and graph6 readers and writers.

Edge-list documents look like::

    # optional comment lines
    4 3
    0 1
    0 2
    0 3

The header gives ``n m``; exactly ``m`` edge lines follow. Serialization is
canonical: sorted edges and no comments.
"""

from __future__ import annotations

from typing import List

from .errors import CountMismatch, DuplicateEdge, FormatSyntaxError, GraphError
from .graph import Graph, make_graph

GRAPH6_HEADER = ">>graph6<<"
_MAX_N_SHORT = 62
_MAX_N_MEDIUM = 258047
_MAX_N_LONG = 68719476735


def _ints(tokens, lineno, text):
    out = []
    pos = 0
    for tok in tokens:
        col = text.index(tok, pos) + 1
        pos = col - 1 + len(tok)
        if not tok.isdigit():
            raise FormatSyntaxError(f"expected a nonnegative integer, got {tok!r}", lineno, col)
        out.append(int(tok))
    return out


def parse_edge_list(doc: str) -> Graph:
    header = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(doc.splitlines(), start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        tokens = text.split()
        if len(tokens) != 2:
            what = "header 'n m'" if header is None else "edge 'u v'"
            raise FormatSyntaxError(f"expected {what}, got {len(tokens)} fields", lineno, 1)
        a, b = _ints(tokens, lineno, raw)
        if header is None:
            header = (a, b)
            continue
        key = (min(a, b), max(a, b))
        try:
            make_graph(header[0], [(a, b)])
            if key in seen:
                raise DuplicateEdge((a, b))
        except GraphError as exc:
            exc.line = lineno
            exc.args = (f"line {lineno}: {exc}",)
            raise
        seen.add(key)
        edges.append((a, b))
    if header is None:
        raise FormatSyntaxError("missing 'n m' header")
    n, m = header
    if m != len(edges):
        raise CountMismatch(m, len(edges))
    return make_graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _encode_size(n: int) -> str:
    if n < 0 or n > _MAX_N_LONG:
        raise GraphError(f"graph6 cannot encode n = {n}")
    if n <= _MAX_N_SHORT:
        return chr(n + 63)
    if n <= _MAX_N_MEDIUM:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def serialize_graph6(g: Graph) -> str:
    """Canonical graph6 line (no header, no newline)."""
    adj = g.edge_set
    bits = [1 if (i, j) in adj else 0 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        body.append(chr(value + 63))
    return _encode_size(g.n) + "".join(body)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise FormatSyntaxError("empty graph6 string")
    for col, ch in enumerate(s, start=1):
        if not 63 <= ord(ch) <= 126:
            raise FormatSyntaxError(f"invalid graph6 character {ch!r}", column=col)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise FormatSyntaxError("truncated graph6 size field")
        n, pos = _join6(vals[2:8]), 8
    else:
        if len(vals) < 4:
            raise FormatSyntaxError("truncated graph6 size field")
        n, pos = _join6(vals[1:4]), 4
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = vals[pos:]
    if len(body) != need:
        raise FormatSyntaxError(f"graph6 body has {len(body)} characters, expected {need} for n = {n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return make_graph(n, edges)


def _join6(vals) -> int:
    out = 0
    for v in vals:
        out = (out << 6) | v
    return out


def parse_graph6_document(doc: str) -> List[Graph]:
    graphs = []
    for lineno, raw in enumerate(doc.splitlines(), start=1):
        if not raw.strip():
            continue
        try:
            graphs.append(parse_graph6(raw))
        except FormatSyntaxError as exc:
            raise FormatSyntaxError(str(exc), lineno, exc.column) from None
    if not graphs:
        raise FormatSyntaxError("no graph6 lines found")
    return graphs


def parse_document(doc: str, fmt: str = "edgelist") -> List[Graph]:
    if fmt == "edgelist":
        return [parse_edge_list(doc)]
    if fmt == "graph6":
        return parse_graph6_document(doc)
    raise ValueError(f"unknown format {fmt!r}")


def serialize(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return serialize_edge_list(g)
    if fmt == "graph6":
        return serialize_graph6(g) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
