"""Structural graph quantities: girth, eccentricities, blocks,
connectivity, clique counts and matching number."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .distance import bfs_layers
from .errors import DisconnectedError, TooLargeError
from .graph import Graph, iter_bits

ACYCLIC = math.inf


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or :data:`ACYCLIC` for forests."""
    best = ACYCLIC
    adj = g.adj
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            du = dist[u]
            if 2 * du + 1 >= best:
                break
            for w in iter_bits(adj[u]):
                if w not in dist:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, du + dist[w] + 1)
    return best


@dataclass(frozen=True)
class Eccentricities:
    ecc: tuple[int, ...]
    diameter: int
    radius: int


def eccentricities(g: Graph) -> Eccentricities:
    if g.n == 0:
        raise DisconnectedError("empty graph has no eccentricities")
    ecc = []
    for v in range(g.n):
        layers = bfs_layers(g.adj, v)
        if sum(x.bit_count() for x in layers) != g.n:
            raise DisconnectedError("eccentricities need a connected graph")
        ecc.append(len(layers) - 1)
    diam, rad = max(ecc), min(ecc)
    assert rad <= diam <= 2 * rad
    return Eccentricities(tuple(ecc), diam, rad)


def diameter(g: Graph) -> int:
    return eccentricities(g).diameter


def radius(g: Graph) -> int:
    return eccentricities(g).radius


@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    edges: tuple[tuple[int, int], ...]
    complete: bool

    @property
    def order(self) -> int:
        return len(self.vertices)


def blocks(g: Graph) -> list[Block]:
    """Biconnected components, sorted by their smallest vertex tuple.

    Bridges are two-vertex blocks; an isolated vertex (only possible for
    ``K_1``) is a one-vertex block.
    """
    if not g.is_connected():
        raise DisconnectedError("blocks need a connected graph")
    n = g.n
    if n == 1:
        return [Block(frozenset([0]), (), True)]
    adj = g.adj
    disc = [-1] * n
    low = [0] * n
    clock = 0
    found: list[Block] = []
    edge_stack: list[tuple[int, int]] = []
    disc[0] = low[0] = clock
    clock += 1
    stack = [(0, -1, iter(list(iter_bits(adj[0]))))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                edge_stack.append((v, w))
                disc[w] = low[w] = clock
                clock += 1
                stack.append((w, v, iter(list(iter_bits(adj[w])))))
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if not stack:
            break
        u = stack[-1][0]
        low[u] = min(low[u], low[v])
        if low[v] >= disc[u]:
            comp = []
            while True:
                e = edge_stack.pop()
                comp.append((min(e), max(e)))
                if e == (u, v):
                    break
            verts = frozenset(x for e in comp for x in e)
            k = len(verts)
            found.append(Block(verts, tuple(sorted(comp)), len(comp) == k * (k - 1) // 2))
    found.sort(key=lambda b: sorted(b.vertices))
    return found


def cut_vertices(g: Graph) -> set[int]:
    if g.n <= 2:
        return set()
    seen: dict[int, int] = {}
    for b in blocks(g):
        for v in b.vertices:
            seen[v] = seen.get(v, 0) + 1
    return {v for v, c in seen.items() if c > 1}


CONNECTIVITY_MAX_N = 16


def vertex_connectivity(g: Graph) -> int:
    if g.n > CONNECTIVITY_MAX_N:
        raise TooLargeError(f"vertex connectivity is brute force, n <= {CONNECTIVITY_MAX_N}")
    if not g.is_connected():
        raise DisconnectedError("connectivity needs a connected graph")
    n = g.n
    full = (1 << n) - 1
    delta = g.min_degree
    for k in range(delta):
        if n - k < 2:
            break
        for cut in combinations(range(n), k):
            mask = 0
            for v in cut:
                mask |= 1 << v
            rest = full & ~mask
            start = (rest & -rest).bit_length() - 1
            if g.component_mask(start, rest) != rest:
                return k
    return delta


def edge_connectivity(g: Graph) -> int:
    if g.n > CONNECTIVITY_MAX_N:
        raise TooLargeError(f"edge connectivity is brute force, n <= {CONNECTIVITY_MAX_N}")
    if not g.is_connected():
        raise DisconnectedError("connectivity needs a connected graph")
    n = g.n
    if n == 1:
        return 0
    adj = g.adj
    best = g.min_degree
    for half in range(1 << (n - 1)):
        side = (half << 1) | 1
        if side == (1 << n) - 1:
            continue
        outside = ~side
        cut = 0
        for v in iter_bits(side):
            cut += (adj[v] & outside).bit_count()
            if cut >= best:
                break
        if cut < best:
            best = cut
    return best


def connectivity(g: Graph) -> tuple[int, int]:
    """``(vertex connectivity, edge connectivity)`` by cut enumeration."""
    return vertex_connectivity(g), edge_connectivity(g)


def clique_counts(g: Graph) -> tuple[int, int]:
    """Numbers of triangles and of ``K_4`` subgraphs."""
    adj = g.adj
    k3 = k4 = 0
    for u in range(g.n):
        higher_u = adj[u] >> (u + 1) << (u + 1)
        for v in iter_bits(higher_u):
            common = higher_u & adj[v] & ~((2 << v) - 1)
            k3 += common.bit_count()
            for w in iter_bits(common):
                k4 += (common & adj[w] & ~((2 << w) - 1)).bit_count()
    return k3, k4


MATCHING_MAX_N = 20


def matching_number(g: Graph) -> int:
    """Size of a maximum matching.

    A greedy matching gives a lower bound; the exact value comes from an
    exhaustive branch on the lowest unmatched vertex, memoised on the set
    of still-available vertices and cut off once a perfect matching of the
    remaining set is reached.
    """
    if g.n > MATCHING_MAX_N:
        raise TooLargeError(f"matching search is exponential, n <= {MATCHING_MAX_N}")
    adj = g.adj

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        cap = (mask.bit_count()) // 2
        res = best(rest)
        if res == cap:
            return res
        for w in iter_bits(adj[v] & rest):
            res = max(res, 1 + best(rest & ~(1 << w)))
            if res == cap:
                break
        return res

    return best((1 << g.n) - 1)
