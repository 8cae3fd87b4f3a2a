"""Graph file formats: edgelist-m (read/write) and sparse6 (read)."""

from __future__ import annotations

from pathlib import Path

from .graph_core import GraphError, MultiGraph


class ParseError(GraphError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def write_edgelist(g: MultiGraph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> MultiGraph:
    rows = []
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((no, body.split()))
    if not rows:
        raise ParseError("empty graph file")
    no, head = rows[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", no)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header must hold two integers", no) from None
    if n < 1 or m < 0:
        raise ParseError("need n >= 1 and m >= 0", no)
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else no
        raise ParseError(f"header announces {m} edges, found {len(body)}", last)
    edges = []
    for no, tok in body:
        if len(tok) != 2:
            raise ParseError("edge line must be 'u v'", no)
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", no) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range 0..{n - 1}", no)
        if u == v:
            raise ParseError("loops are not allowed", no)
        edges.append((u, v))
    return MultiGraph(n, tuple(edges))


def parse_sparse6(text: str) -> MultiGraph:
    """Decode one sparse6 string (optionally with the >>sparse6<< header)."""
    s = text.strip()
    if s.startswith(">>sparse6<<"):
        s = s[len(">>sparse6<<"):]
    if not s.startswith(":"):
        raise ParseError("sparse6 data must start with ':'", 1)
    data = [ord(c) - 63 for c in s[1:]]
    if any(not 0 <= d < 64 for d in data):
        raise ParseError("invalid sparse6 character", 1)
    if not data:
        raise ParseError("truncated sparse6 header", 1)
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) > 1 and data[1] < 63:
        if len(data) < 4:
            raise ParseError("truncated sparse6 header", 1)
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    else:
        if len(data) < 8:
            raise ParseError("truncated sparse6 header", 1)
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        pos = 8
    if n < 1:
        raise ParseError("sparse6 graph has no vertices", 1)
    k = max(1, (n - 1).bit_length())
    bits = []
    for d in data[pos:]:
        bits.extend((d >> (5 - i)) & 1 for i in range(6))
    edges = []
    v = 0
    i = 0
    while i + 1 + k <= len(bits):
        b = bits[i]
        x = 0
        for j in range(k):
            x = (x << 1) | bits[i + 1 + j]
        i += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        elif x < v:
            edges.append((x, v))
        else:
            raise ParseError(f"loop at vertex {v}", 1)
    return MultiGraph(n, tuple(edges))


def parse_graph(text: str) -> MultiGraph:
    t = text.lstrip()
    if t.startswith(":") or t.startswith(">>sparse6<<"):
        return parse_sparse6(text)
    return parse_edgelist(text)


def read_graph(path: str | Path) -> MultiGraph:
    if str(path) == "-":
        import sys

        return parse_graph(sys.stdin.read())
    return parse_graph(Path(path).read_text())


def write_graph(g: MultiGraph, path: str | Path) -> None:
    Path(path).write_text(write_edgelist(g))
