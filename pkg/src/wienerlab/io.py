"""graph6, edge-list and arc-list readers/writers.

graph6 follows the standard ASCII encoding: the vertex count ``N(n)`` in
one, four or eight bytes, then the upper triangle of the adjacency matrix
read column by column, packed six bits per byte, every byte offset by 63.
The plain formats are an ``"n m"`` header line followed by one ``"u v"``
line per edge (or arc ``u -> v``), 0-indexed.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import Digraph, Graph

GRAPH6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        body = data[2:8]
        if len(body) < 6:
            raise ValueError("truncated graph6 size field")
        n = 0
        for b in body:
            n = (n << 6) | (b - 63)
        return n, 8
    body = data[1:4]
    if len(body) < 3:
        raise ValueError("truncated graph6 size field")
    n = 0
    for b in body:
        n = (n << 6) | (b - 63)
    return n, 4


def to_graph6_bytes(g: Graph) -> bytes:
    n = g.n
    out = bytearray(_encode_n(n))
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def to_graph6(g: Graph) -> str:
    return to_graph6_bytes(g).decode("ascii")


def from_graph6(text: str | bytes) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(GRAPH6_HEADER.encode()):
        data = data[len(GRAPH6_HEADER):]
    n, off = _decode_n(data)
    body = data[off:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need}")
    for b in body:
        if not 63 <= b <= 126:
            raise ValueError(f"invalid graph6 byte {b}")
    adj = [0] * n
    k = 0
    total = n * (n - 1) // 2
    j, i = 1, 0
    for b in body:
        v = b - 63
        for s in range(5, -1, -1):
            if k >= total:
                break
            if v >> s & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                j += 1
                i = 0
    return Graph._trusted(tuple(adj))


# -- plain text formats ------------------------------------------------------


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def _parse_pairs(text: str) -> tuple[int, list[tuple[int, int]]]:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise ValueError("empty edge list")
    n, m = int(rows[0][0]), int(rows[0][1])
    pairs = [(int(r[0]), int(r[1])) for r in rows[1:]]
    if len(pairs) != m:
        raise ValueError(f"header announces {m} pairs, found {len(pairs)}")
    return n, pairs


def from_edge_list(text: str) -> Graph:
    n, pairs = _parse_pairs(text)
    g = Graph(n, pairs)
    if g.m != len(pairs):
        raise ValueError("edge list contains duplicate edges")
    return g


def to_arc_list(d: Digraph) -> str:
    lines = [f"{d.n} {d.m}"] + [f"{u} {v}" for u, v in d.arcs]
    return "\n".join(lines) + "\n"


def from_arc_list(text: str) -> Digraph:
    n, pairs = _parse_pairs(text)
    return Digraph(n, pairs)


# -- files -----------------------------------------------------------------


def _looks_like_edge_list(text: str) -> bool:
    for ln in text.splitlines():
        s = ln.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        return len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts)
    return False


def parse_graphs(text: str) -> list[Graph]:
    """Parse graph6 (one graph per line) or a single edge list, autodetected."""
    if _looks_like_edge_list(text):
        return [from_edge_list(text)]
    graphs = []
    for ln in text.splitlines():
        s = ln.strip()
        if not s or s.startswith("#"):
            continue
        graphs.append(from_graph6(s))
    return graphs


def read_graphs(path: str | Path) -> list[Graph]:
    return parse_graphs(Path(path).read_text())


def write_graph6(path: str | Path, graphs: Iterable[Graph], header: str | None = None) -> int:
    count = 0
    with open(path, "w") as fh:
        if header is not None:
            fh.write(f"# {header}\n")
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
            count += 1
    return count


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for ln in lines:
        s = ln.strip()
        if s and not s.startswith("#"):
            yield from_graph6(s)
