"""graph6 and plain edge-list serialisation."""

from __future__ import annotations

import os
from typing import Iterator, TextIO

from .errors import GraphFormatError
from .graph import Graph, from_edge_list

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    # upper triangle, column by column
    for j in range(1, n):
        for i in range(j):
            yield i, j


def encode_graph6(g: Graph) -> str:
    bits = [1 if g.adj[i, j] else 0 for i, j in _pairs(g.n)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        body.append(chr(63 + v))
    return _encode_n(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 record")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} at offset {pos} outside 63..126")
    vals = [ord(ch) - 63 for ch in s]

    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
        if n <= 62:
            raise GraphFormatError("non-canonical long length header")
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        body = vals[8:]
        if n <= 258047:
            raise GraphFormatError("non-canonical long length header")
    else:
        raise GraphFormatError("truncated length header")
    if n < 1:
        raise GraphFormatError("graph6 record encodes zero vertices")

    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) != need:
        raise GraphFormatError(f"expected {need} data characters for n={n}, got {len(body)}")
    bits = []
    for v in body:
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero padding bits")
    edges = [p for p, b in zip(_pairs(n), bits) if b]
    return from_edge_list(n, edges)


def read_graph6_lines(stream: TextIO) -> list[Graph]:
    return [parse_graph6(line) for line in stream if line.strip()]


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{i} {j}" for i, j in g.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by one ``i j`` pair per line; ``#`` lines are comments."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphFormatError("edge list is empty")
    try:
        header = [int(x) for x in rows[0]]
        pairs = [tuple(int(x) for x in r) for r in rows[1:]]
    except ValueError as exc:
        raise GraphFormatError(f"non-integer token in edge list: {exc}") from None
    if len(header) != 2:
        raise GraphFormatError("first line must be 'n m'")
    n, m = header
    if any(len(p) != 2 for p in pairs):
        raise GraphFormatError("each edge line must hold exactly two vertex indices")
    if len(pairs) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(pairs)}")
    try:
        return from_edge_list(n, pairs)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def load_graph(path: str | os.PathLike) -> Graph:
    """Load a file holding a single graph6 record or an edge list."""
    with open(path) as fh:
        text = fh.read()
    body = [l for l in text.splitlines() if l.strip() and not l.lstrip().startswith("#")]
    if len(body) == 1 and len(body[0].split()) == 1:
        return parse_graph6(body[0])
    return parse_edge_list(text)
