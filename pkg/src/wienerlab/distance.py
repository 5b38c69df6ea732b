"""All-pairs unweighted distances by bitset BFS."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Digraph, Graph, iter_bits

#: Marks a pair with no (directed) path.  Never a valid distance.
UNREACHABLE = -1


@dataclass(frozen=True, eq=False)
class DistMatrix:
    """``entries[u, v]`` is the length of a shortest ``u -> v`` path or
    :data:`UNREACHABLE`.  ``symmetric`` is true for undirected sources."""

    n: int
    entries: np.ndarray
    symmetric: bool

    def __getitem__(self, uv: tuple[int, int]) -> int:
        return int(self.entries[uv])

    def reachable(self, u: int, v: int) -> bool:
        return self.entries[u, v] != UNREACHABLE

    def row(self, u: int) -> np.ndarray:
        return self.entries[u]

    def reachable_mask(self) -> np.ndarray:
        return self.entries != UNREACHABLE


def bfs_layers(adj: tuple[int, ...], source: int) -> list[int]:
    """BFS layers from ``source`` as bitsets: ``layers[d]`` holds the
    vertices at distance exactly ``d``."""
    seen = 1 << source
    frontier = seen
    layers = [frontier]
    while True:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        nxt &= ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)
        frontier = nxt


def bfs_apsp(g: Graph | Digraph) -> DistMatrix:
    n = g.n
    adj = g.out_adj if isinstance(g, Digraph) else g.adj
    entries = np.full((n, n), UNREACHABLE, dtype=np.int32)
    for s in range(n):
        row = entries[s]
        for d, layer in enumerate(bfs_layers(adj, s)):
            for v in iter_bits(layer):
                row[v] = d
    return DistMatrix(n, entries, symmetric=isinstance(g, Graph))


def distance_sums(adj: tuple[int, ...]) -> list[int]:
    """Per-vertex sum of distances to the reachable vertices."""
    out = []
    for s in range(len(adj)):
        total = 0
        for d, layer in enumerate(bfs_layers(adj, s)):
            total += d * layer.bit_count()
        out.append(total)
    return out
