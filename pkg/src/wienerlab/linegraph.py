"""Line graph and its iterates."""

from __future__ import annotations

from .graph import Graph


def line_graph(g: Graph) -> Graph:
    """Vertex ``i`` of the result is ``g.edges[i]``; two vertices are
    adjacent iff the edges share an endpoint."""
    incident = [0] * g.n
    for i, (u, v) in enumerate(g.edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    adj = tuple(
        (incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(g.edges)
    )
    return Graph._trusted(adj)


def iterated_line_graph(g: Graph, i: int) -> Graph:
    if i < 0:
        raise ValueError("iteration count must be nonnegative")
    for _ in range(i):
        g = line_graph(g)
    return g


def line_graph_size(g: Graph) -> int:
    """``|E(L(G))|`` without building ``L(G)``."""
    return sum(d * (d - 1) // 2 for d in g.degrees)


def line_graph_degrees(g: Graph) -> list[int]:
    deg = g.degrees
    return [deg[u] + deg[v] - 2 for u, v in g.edges]

