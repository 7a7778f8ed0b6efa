"""graph6 and DIMACS edge-format readers/writers."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import ParseError
from .graph import Graph

_HEADER = ">>graph6<<"
_SMALL_MAX = 62
_MEDIUM_MAX = 258047


def _encode_order(n: int) -> str:
    if n <= _SMALL_MAX:
        return chr(n + 63)
    if n <= _MEDIUM_MAX:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError(f"graph6 order {n} too large (max {_MEDIUM_MAX})")


def emit_graph6(g: Graph) -> str:
    n = g.n
    adj = g.adjacency
    # upper triangle, column by column
    bits = [adj[i, j] for j in range(1, n) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | int(b)
        body.append(chr(value + 63))
    return _encode_order(n) + "".join(body)


def parse_graph6(text: str, label: str | None = None) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :]
    if not s:
        raise ParseError("empty graph6 string", 0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", pos)
    data = [ord(ch) - 63 for ch in s]

    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        raise ParseError("graph6 orders above 258047 are not supported", 1)
    else:
        if len(data) < 4:
            raise ParseError("truncated graph6 order field", len(data))
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    if n == 0:
        raise ParseError("graph6 order 0 is not a valid graph", 0)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise ParseError(f"truncated graph6 bit stream: need {nbytes} data bytes, got {len(data) - pos}", len(data))
    if len(data) - pos > nbytes:
        raise ParseError("trailing characters after graph6 bit stream", pos + nbytes)

    adj = np.zeros((n, n), dtype=bool)
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + k // 6]
            if (byte >> (5 - k % 6)) & 1:
                adj[i, j] = adj[j, i] = True
            k += 1
    if nbits % 6 and data[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("non-zero padding bits in graph6 string", len(data) - 1)
    return Graph(adj, label)


def parse_dimacs(text: str, label: str | None = None) -> Graph:
    """Parse ``p edge n m`` followed by ``e u v`` lines (1-indexed)."""
    n = None
    declared_m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate problem line")
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise ParseError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n, declared_m = int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer in problem line") from None
            if n < 1:
                raise ParseError(f"line {lineno}: vertex count must be positive")
        elif fields[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before problem line")
            if len(fields) != 3:
                raise ParseError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer edge endpoint") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"line {lineno}: edge ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise ParseError(f"line {lineno}: self-loop at vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"line {lineno}: unknown line type {fields[0]!r}")
    if n is None:
        raise ParseError("missing problem line")
    if declared_m != len(edges):
        raise ParseError(f"problem line declares {declared_m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges, label)


def emit_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_graph_file(path: str | Path) -> Graph:
    """Load a graph from a ``.g6``/``.graph6`` or DIMACS file (by extension, then content)."""
    path = Path(path)
    text = path.read_text()
    label = path.stem
    if path.suffix in (".g6", ".graph6"):
        return parse_graph6(text.splitlines()[0] if text.strip() else "", label)
    if path.suffix in (".dimacs", ".col", ".clq"):
        return parse_dimacs(text, label)
    first = text.lstrip().split(None, 1)[0] if text.strip() else ""
    if first in ("p", "c"):
        return parse_dimacs(text, label)
    return parse_graph6(text.splitlines()[0] if text.strip() else "", label)
