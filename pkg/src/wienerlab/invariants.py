"""Distance-based indices: Wiener (undirected, disconnected, directed),
Szeged, Schultz, Gutman, transmissions, betweenness and reach counts.

Every value is an exact Python ``int`` (or ``Fraction`` for betweenness).
Unreachable pairs never contribute: for graphs they are skipped, for
digraphs they count as distance 0, which is the same thing in a sum.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .distance import bfs_apsp, bfs_layers
from .errors import DisconnectedError
from .graph import Digraph, Graph, iter_bits


def _require_connected(g: Graph, what: str) -> None:
    if not g.is_connected():
        raise DisconnectedError(f"{what} needs a connected graph")


def _distance_total(adj) -> int:
    total = 0
    for s in range(len(adj)):
        for d, layer in enumerate(bfs_layers(adj, s)):
            if d:
                total += d * layer.bit_count()
    return total


def wiener(g: Graph) -> int:
    """Sum of distances over unordered pairs joined by a path."""
    w = _distance_total(g.adj) // 2
    if g.n and not g.is_connected():
        parts = sum(_distance_total(g.induced(c).adj) // 2 for c in g.components())
        assert parts == w
    return w


def wiener_digraph(d: Digraph) -> int:
    """Sum of ``d(u, v)`` over ordered pairs; no path counts as 0."""
    return _distance_total(d.out_adj)


def transmission(g: Graph, v: int) -> int:
    return sum(d * layer.bit_count() for d, layer in enumerate(bfs_layers(g.adj, v)))


def transmissions(g: Graph) -> list[int]:
    return [transmission(g, v) for v in range(g.n)]


def szeged(g: Graph) -> int:
    """Sum over edges ``ij`` of ``n_i * n_j``, where ``n_i`` counts the
    vertices strictly closer to ``i`` than to ``j``."""
    _require_connected(g, "Szeged index")
    if g.m == 0:
        return 0
    dist = bfs_apsp(g).entries
    e = np.asarray(g.edges, dtype=np.intp)
    di, dj = dist[e[:, 0]], dist[e[:, 1]]
    ni = (di < dj).sum(axis=1, dtype=np.int64)
    nj = (dj < di).sum(axis=1, dtype=np.int64)
    return sum(int(a) * int(b) for a, b in zip(ni, nj))


def schultz(g: Graph) -> int:
    """``sum_{u<v} (deg u + deg v) d(u, v)``, i.e. ``sum_u deg(u) * trans(u)``."""
    _require_connected(g, "Schultz index")
    deg = g.degrees
    return sum(deg[v] * t for v, t in enumerate(transmissions(g)))


def gutman(g: Graph) -> int:
    """``sum_{u<v} deg(u) deg(v) d(u, v)``."""
    _require_connected(g, "Gutman index")
    deg = g.degrees
    adj = g.adj
    total = 0
    for s in range(g.n):
        acc = 0
        for d, layer in enumerate(bfs_layers(adj, s)):
            if d:
                acc += d * sum(deg[v] for v in iter_bits(layer))
        total += deg[s] * acc
    return total // 2


def eta(g: Graph) -> int:
    """``Sz(G) - W(G)``, never negative."""
    value = szeged(g) - wiener(g)
    assert value >= 0
    return value


def component_orders(g: Graph) -> list[int]:
    return [len(c) for c in g.components()]


def n2_n3(f: Graph) -> tuple[int, int]:
    """Second and third elementary symmetric sums of the component orders."""
    e1 = e2 = e3 = 0
    for s in component_orders(f):
        e3 += e2 * s
        e2 += e1 * s
        e1 += s
    return e2, e3


# -- digraphs ---------------------------------------------------------------


def _out_adjacency(d: Digraph | Graph) -> tuple[int, ...]:
    return d.out_adj if isinstance(d, Digraph) else d.adj


def betweenness(d: Digraph | Graph) -> list[Fraction]:
    """Geodesic betweenness over ordered reachable pairs, exact.

    ``B(x)`` sums ``sigma_uv(x) / sigma_uv`` over ordered pairs ``(u, v)``
    with ``u != x != v``.  An undirected graph is read as the symmetric
    digraph.
    """
    adj = _out_adjacency(d)
    n = len(adj)
    out = [Fraction(0)] * n
    for s in range(n):
        sigma = [0] * n
        sigma[s] = 1
        layers = bfs_layers(adj, s)
        preds: list[list[int]] = [[] for _ in range(n)]
        for k in range(1, len(layers)):
            prev = layers[k - 1]
            for w in iter_bits(layers[k]):
                for v in iter_bits(prev):
                    if adj[v] >> w & 1:
                        sigma[w] += sigma[v]
                        preds[w].append(v)
        delta = [Fraction(0)] * n
        for k in range(len(layers) - 1, 0, -1):
            for w in iter_bits(layers[k]):
                coeff = (1 + delta[w]) / sigma[w]
                for v in preds[w]:
                    delta[v] += sigma[v] * coeff
        for v in range(n):
            if v != s:
                out[v] += delta[v]
    return out


def p_pairs(d: Digraph | Graph) -> int:
    """Number of ordered pairs ``u != v`` with a directed ``u -> v`` path."""
    adj = _out_adjacency(d)
    return sum(sum(layer.bit_count() for layer in bfs_layers(adj, s)) - 1 for s in range(len(adj)))


def reach_counts(d: Digraph) -> list[tuple[int, int]]:
    """Per vertex ``(t, s)``: vertices reachable from it and vertices
    reaching it, both counting the vertex itself."""
    return [(d.reach_mask(v).bit_count(), d.reach_mask(v, reverse=True).bit_count()) for v in range(d.n)]


def directed_tree_arc_sum(d: Digraph) -> int:
    """``sum over arcs a -> b of s(a) * t(b)`` with inclusive reach counts.

    On an oriented tree every directed path through arc ``a -> b`` starts
    at a vertex reaching ``a`` and ends at a vertex reachable from ``b``,
    so the sum counts each path once per arc, i.e. equals ``W(D)``.
    """
    counts = reach_counts(d)
    return sum(counts[a][1] * counts[b][0] for a, b in d.arcs)


INDICES = {
    "wiener": wiener,
    "szeged": szeged,
    "schultz": schultz,
    "gutman": gutman,
    "eta": eta,
}
