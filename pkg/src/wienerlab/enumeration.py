"""Isomorph-free generation: free trees, connected graphs, regular graphs,
edge orientations and the diameter-at-most-4 tree family.

Trees come from canonical level sequences (the Wright-Richmond-Odlyzko-
McKay successor rule).  Connected graphs come from canonical vertex
augmentation: a child ``G + x`` of a parent ``P`` is kept iff ``x`` lies in
the automorphism orbit of the canonical deletion vertex of ``G`` (see
:func:`_deletion_candidates`), and isomorphic children of one parent are
merged by canonical adjacency.  Filters with a sound hereditary bound
(edge count, maximum degree, bipartiteness, regular deficit) prune the
search; the rest are applied to the finished graphs only.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import asdict, dataclass
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from .canon import canonical_labeling, relabel_adjacency
from .errors import TooLargeError
from .graph import Digraph, Graph, iter_bits
from .io import iter_graph6_lines, write_graph6
from .structure import eccentricities, matching_number

TREE_MAX_N = 22
GRAPH_MAX_N = 9
SPARSE_GRAPH_MAX_N = 14
SPARSE_MAX_CYCLOMATIC = 3
REGULAR4_MAX_N = 12
ORIENT_MAX_M = 24

CACHE_ENV = "WIENERLAB_CACHE"


# -- trees ------------------------------------------------------------------


def _next_rooted_tree(levels: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split_tree(levels: list[int]) -> tuple[list[int], list[int]]:
    """Split off the subtree of the first child of the root."""
    m = len(levels)
    for i in range(2, len(levels)):
        if levels[i] == 1:
            m = i
            break
    left = [x - 1 for x in levels[1:m]]
    rest = [0] + levels[m:]
    return left, rest


def _next_tree(levels: list[int]) -> list[int] | None:
    left, rest = _split_tree(levels)
    lh, rh = max(left), max(rest)
    valid = rh >= lh
    if valid and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return levels
    p = len(left)
    nxt = _next_rooted_tree(levels, p)
    if nxt is not None and levels[p] > 2:
        new_left, _ = _split_tree(nxt)
        suffix = list(range(1, max(new_left) + 2))
        nxt[-len(suffix):] = suffix
    return nxt


def tree_level_sequences(n: int) -> Iterator[list[int]]:
    """Level sequences (root at level 0) of the free trees on ``n``
    vertices, one per isomorphism class, each rooted at a center."""
    if not 1 <= n <= TREE_MAX_N:
        raise TooLargeError(f"tree generation supports 1 <= n <= {TREE_MAX_N}")
    if n <= 2:
        yield list(range(n))
        return
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_tree(levels)
        if levels is not None:
            yield levels
            levels = _next_rooted_tree(levels)


def level_parents(levels: Sequence[int]) -> list[int]:
    parent = [-1] * len(levels)
    last_at: list[int] = []
    for i, lv in enumerate(levels):
        del last_at[lv:]
        if lv:
            parent[i] = last_at[lv - 1]
        last_at.append(i)
    return parent


def levels_to_tree(levels: Sequence[int]) -> Graph:
    parent = level_parents(levels)
    return Graph(len(levels), [(parent[i], i) for i in range(1, len(levels))])


def levels_wiener(levels: Sequence[int]) -> int:
    """Wiener index of the tree with this level sequence, as
    ``sum over edges of s * (n - s)``."""
    n = len(levels)
    parent = level_parents(levels)
    size = [1] * n
    total = 0
    for i in range(n - 1, 0, -1):
        s = size[i]
        total += s * (n - s)
        size[parent[i]] += s
    return total


def trees(n: int) -> Iterator[Graph]:
    """Pairwise non-isomorphic trees on ``n`` vertices."""
    for levels in tree_level_sequences(n):
        yield levels_to_tree(levels)


@lru_cache(maxsize=None)
def tree_count(n: int) -> int:
    return sum(1 for _ in tree_level_sequences(n))


# -- P_r-factors of trees ---------------------------------------------------


def has_path_factor(tree: Graph, r: int) -> bool:
    """Whether the vertices of ``tree`` split into paths on ``r`` vertices.

    Leaf-up dynamic program.  For a vertex ``v`` the state set holds 0 if
    the subtree of ``v`` can be covered completely, and ``j >= 1`` if it
    can be covered except for a path of ``j`` vertices ending at ``v``
    that still has to continue through the parent edge.
    """
    assert tree.is_tree()
    n = tree.n
    if r < 1 or n % r:
        return False
    if r == 1:
        return True
    order = [0]
    parent = [-1] * n
    for v in order:
        for w in tree.neighbors(v):
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    state: list[set[int]] = [set() for _ in range(n)]
    for v in reversed(order):
        kids = [w for w in tree.neighbors(v) if w != parent[v]]
        bad = [w for w in kids if 0 not in state[w]]
        if len(bad) > 2:
            return False
        out: set[int] = set()
        if not bad:
            out.add(1)
            singles = kids
        else:
            singles = bad if len(bad) == 1 else []
        for w in singles:
            for j in state[w]:
                if j:
                    if j + 1 < r:
                        out.add(j + 1)
                    elif j + 1 == r:
                        out.add(0)
        pairs = combinations(kids, 2) if not bad else ([tuple(bad)] if len(bad) == 2 else [(bad[0], w) for w in kids if w != bad[0]])
        for a, b in pairs:
            for j1 in state[a]:
                if j1 and (r - 1 - j1) in state[b]:
                    out.add(0)
                    break
        if not out:
            return False
        state[v] = out
    return 0 in state[0]


def path_factor_bruteforce(tree: Graph, r: int) -> bool:
    """Exact cover of the vertex set by ``r``-vertex paths, by search."""
    n = tree.n
    if r < 1 or n % r:
        return False
    paths: list[int] = []

    def extend(p: list[int]):
        if len(p) == r:
            if p[0] <= p[-1]:
                mask = 0
                for v in p:
                    mask |= 1 << v
                paths.append(mask)
            return
        for w in tree.neighbors(p[-1]):
            if w not in p:
                extend(p + [w])

    for v in range(n):
        extend([v])
    by_low: dict[int, list[int]] = {}
    for mask in set(paths):
        by_low.setdefault((mask & -mask).bit_length() - 1, []).append(mask)
    full = (1 << n) - 1

    def cover(used: int) -> bool:
        if used == full:
            return True
        free = ~used & full
        low = (free & -free).bit_length() - 1
        return any(cover(used | p) for p in by_low.get(low, []) if not p & used)

    return cover(0)


# -- filters ----------------------------------------------------------------


@dataclass(frozen=True)
class EnumFilter:
    """Predicates on the generated graphs.  ``None``/``False`` means "no
    constraint".  ``m``, ``max_m``, ``cyclomatic``, ``max_cyclomatic``,
    ``max_degree``, ``regular`` and ``bipartite`` prune during search."""

    m: int | None = None
    max_m: int | None = None
    cyclomatic: int | None = None
    max_cyclomatic: int | None = None
    regular: int | None = None
    max_degree: int | None = None
    min_degree: int | None = None
    diameter: int | None = None
    radius: int | None = None
    eulerian: bool = False
    all_odd: bool = False
    perfect_matching: bool = False
    path_factor: int | None = None
    bipartite: bool = False
    bipartition: tuple[int, int] | None = None

    def edge_range(self, n: int) -> tuple[int, int]:
        lo, hi = n - 1, n * (n - 1) // 2
        for exact in (self.m, None if self.cyclomatic is None else n - 1 + self.cyclomatic):
            if exact is not None:
                lo, hi = max(lo, exact), min(hi, exact)
        if self.max_m is not None:
            hi = min(hi, self.max_m)
        if self.max_cyclomatic is not None:
            hi = min(hi, n - 1 + self.max_cyclomatic)
        if self.regular is not None:
            lo, hi = max(lo, n * self.regular // 2), min(hi, n * self.regular // 2)
        if self.bipartite or self.bipartition is not None:
            hi = min(hi, (n // 2) * (n - n // 2))
        return lo, hi

    def degree_cap(self, n: int) -> int:
        cap = n - 1
        for d in (self.max_degree, self.regular):
            if d is not None:
                cap = min(cap, d)
        return cap

    def needs_bipartite(self) -> bool:
        return self.bipartite or self.bipartition is not None

    def accepts(self, g: Graph) -> bool:
        lo, hi = self.edge_range(g.n)
        if not lo <= g.m <= hi:
            return False
        deg = g.degrees
        if g.n and max(deg) > self.degree_cap(g.n):
            return False
        if self.regular is not None and any(d != self.regular for d in deg):
            return False
        if self.min_degree is not None and g.n and min(deg) < self.min_degree:
            return False
        if self.eulerian and any(d % 2 for d in deg):
            return False
        if self.all_odd and any(d % 2 == 0 for d in deg):
            return False
        if self.needs_bipartite():
            colors = g.two_coloring()
            if colors is None:
                return False
            if self.bipartition is not None:
                ones = sum(colors)
                if sorted((ones, g.n - ones)) != sorted(self.bipartition):
                    return False
        if self.diameter is not None or self.radius is not None:
            ecc = eccentricities(g)
            if self.diameter is not None and ecc.diameter != self.diameter:
                return False
            if self.radius is not None and ecc.radius != self.radius:
                return False
        if self.perfect_matching and (g.n % 2 or matching_number(g) != g.n // 2):
            return False
        if self.path_factor is not None:
            if not g.is_tree() or not has_path_factor(g, self.path_factor):
                return False
        return True

    def to_json(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in asdict(self).items() if v not in (None, False)}


NO_FILTER = EnumFilter()


def check_caps(n: int, filt: EnumFilter) -> None:
    if n < 1:
        raise TooLargeError("graph enumeration needs n >= 1")
    if n <= GRAPH_MAX_N:
        return
    lo, hi = filt.edge_range(n)
    sparse = hi - n + 1 <= SPARSE_MAX_CYCLOMATIC
    if n <= SPARSE_GRAPH_MAX_N and (sparse or filt.degree_cap(n) <= 3):
        return
    if n <= REGULAR4_MAX_N and filt.regular == 4:
        return
    raise TooLargeError(
        f"connected graphs with n > {GRAPH_MAX_N} need cyclomatic number <= {SPARSE_MAX_CYCLOMATIC}"
        f" or maximum degree <= 3 (n <= {SPARSE_GRAPH_MAX_N}), or 4-regularity (n <= {REGULAR4_MAX_N})"
    )


# -- canonical augmentation -------------------------------------------------


def _component(adj: Sequence[int], start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _is_noncut(adj: Sequence[int], v: int, full: int, deg: Sequence[int]) -> bool:
    if deg[v] <= 1:
        return True
    allowed = full & ~(1 << v)
    start = (allowed & -allowed).bit_length() - 1
    return _component(adj, start, allowed) == allowed


def _deletion_candidates(adj: Sequence[int], x: int) -> list[int] | None:
    """Non-cut vertices sharing the minimal key ``(degree, sum of
    neighbour degrees)``, provided ``x`` is one of them; else ``None``."""
    n = len(adj)
    deg = [a.bit_count() for a in adj]
    keys = [(deg[v], sum(deg[w] for w in iter_bits(adj[v]))) for v in range(n)]
    kx = keys[x]
    full = (1 << n) - 1
    ties = [x]
    for v in range(n):
        if v == x or keys[v] > kx:
            continue
        if _is_noncut(adj, v, full, deg):
            if keys[v] < kx:
                return None
            ties.append(v)
    return ties


class _Augmenter:
    SPLIT_LEVEL = 6

    def __init__(self, n: int, filt: EnumFilter, part: tuple[int, int] = (0, 1)):
        self.n = n
        self.filt = filt
        self.lo, self.hi = filt.edge_range(n)
        self.cap = filt.degree_cap(n)
        self.part_index, self.part_count = part
        self.split_level = min(n, self.SPLIT_LEVEL)
        self._split_counter = 0

    def _edge_ok(self, k: int, m: int) -> bool:
        """Can a connected graph on ``k`` vertices and ``m`` edges still grow
        to ``n`` vertices with an edge count in ``[lo, hi]``?"""
        rest = self.n - k
        most = m + rest * k + rest * (rest - 1) // 2
        return m + rest <= self.hi and most >= self.lo

    def _regular_ok(self, deg: Sequence[int], k: int) -> bool:
        r = self.filt.regular
        rest = self.n - k
        deficit = 0
        for d in deg:
            if r - d > rest:
                return False
            deficit += r - d
        return deficit <= r * rest

    def run(self) -> Iterator[tuple[int, ...]]:
        yield from self._expand((0,), 1, 1, 0)

    def _expand(self, adj: tuple[int, ...], k: int, aut: int, m: int) -> Iterator[tuple[int, ...]]:
        if k == self.split_level and self.part_count > 1:
            idx = self._split_counter
            self._split_counter += 1
            if idx % self.part_count != self.part_index:
                return
        if k == self.n:
            yield adj
            return
        deg = [a.bit_count() for a in adj]
        cap = self.cap
        open_mask = 0
        for v in range(k):
            if deg[v] < cap:
                open_mask |= 1 << v
        colour_classes = None
        if self.filt.needs_bipartite():
            colour_classes = [0, 0]
            side = [0] * k
            seen = 1
            frontier = 1
            while frontier:
                nxt = 0
                for u in iter_bits(frontier):
                    for w in iter_bits(adj[u] & ~seen):
                        side[w] = side[u] ^ 1
                    nxt |= adj[u]
                nxt &= ~seen
                seen |= nxt
                frontier = nxt
            for v in range(k):
                colour_classes[side[v]] |= 1 << v
        max_size = min(cap, k, self.hi - m - (self.n - k - 1))
        seen_codes: set[tuple[int, ...]] = set()
        candidates = list(iter_bits(open_mask))
        for size in range(1, max_size + 1):
            if not self._edge_ok(k + 1, m + size):
                continue
            for subset in combinations(candidates, size):
                s_mask = 0
                for v in subset:
                    s_mask |= 1 << v
                if colour_classes is not None and s_mask & colour_classes[0] and s_mask & colour_classes[1]:
                    continue
                child = list(adj)
                for v in subset:
                    child[v] |= 1 << k
                child.append(s_mask)
                if self.filt.regular is not None:
                    cdeg = list(deg)
                    for v in subset:
                        cdeg[v] += 1
                    cdeg.append(size)
                    if not self._regular_ok(cdeg, k + 1):
                        continue
                ties = _deletion_candidates(child, k)
                if ties is None:
                    continue
                labeling, child_aut, orbits = canonical_labeling(tuple(child))
                if len(ties) > 1:
                    chosen = max(ties, key=labeling.__getitem__)
                    if orbits[chosen] != orbits[k]:
                        continue
                canon = relabel_adjacency(tuple(child), labeling)
                if aut > 1:
                    if canon in seen_codes:
                        continue
                    seen_codes.add(canon)
                yield from self._expand(canon, k + 1, child_aut, m + size)


def iter_connected_graphs(
    n: int, filt: EnumFilter = NO_FILTER, part: tuple[int, int] = (0, 1)
) -> Iterator[Graph]:
    """Stream (in search order) of pairwise non-isomorphic connected graphs
    on ``n`` vertices passing ``filt``, canonically labelled.

    ``part = (i, c)`` restricts the stream to the ``i``-th of ``c``
    disjoint sub-streams; the union over ``i`` is the full stream.
    """
    check_caps(n, filt)
    for adj in _Augmenter(n, filt, part).run():
        g = Graph._trusted(adj)
        if filt.accepts(g):
            yield g


def _cache_path(n: int, filt: EnumFilter) -> tuple[Path, str] | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    params = json.dumps({"generator": "connected", "n": n, "filter": filt.to_json()}, sort_keys=True)
    tag = "".join(f"_{k}{v}" for k, v in sorted(filt.to_json().items())).replace(" ", "")
    return Path(root) / f"connected_n{n}{tag}.g6", params


def _load_spool(path: Path, params: str) -> list[Graph] | None:
    try:
        with open(path) as fh:
            header = fh.readline().strip()
            if header != f"# {params}":
                return None
            return list(iter_graph6_lines(fh))
    except OSError:
        return None


def _run_part(args) -> list[Graph]:
    n, filt, part = args
    return list(iter_connected_graphs(n, filt, part))


@lru_cache(maxsize=64)
def _connected_cached(n: int, filt: EnumFilter, threads: int) -> tuple[Graph, ...]:
    spool = _cache_path(n, filt)
    if spool is not None:
        loaded = _load_spool(*spool)
        if loaded is not None:
            return tuple(loaded)
    if threads > 1:
        from multiprocessing import get_context

        with get_context("fork").Pool(threads) as pool:
            chunks = pool.map(_run_part, [(n, filt, (i, threads)) for i in range(threads)])
        found = [g for chunk in chunks for g in chunk]
    else:
        found = list(iter_connected_graphs(n, filt))
    from .io import to_graph6_bytes

    found.sort(key=to_graph6_bytes)
    if spool is not None:
        path, params = spool
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        write_graph6(tmp, found, header=params)
        tmp.replace(path)
    return tuple(found)


def connected_graphs(n: int, filt: EnumFilter = NO_FILTER, threads: int = 1) -> list[Graph]:
    """All connected graphs on ``n`` vertices passing ``filt``, one per
    isomorphism class, canonically labelled and sorted by graph6 code (the
    canonical merge order, independent of ``threads``)."""
    check_caps(n, filt)
    return list(_connected_cached(n, filt, max(1, threads)))


def regular_graphs(n: int, r: int, threads: int = 1) -> list[Graph]:
    """Connected ``r``-regular graphs on ``n`` vertices (``r <= 4``
    beyond the free cap)."""
    if (n * r) % 2 or r >= n:
        return []
    return connected_graphs(n, EnumFilter(regular=r), threads)


def connected_graphs_upto(n_max: int, filt: EnumFilter = NO_FILTER) -> Iterator[Graph]:
    for n in range(1, n_max + 1):
        yield from connected_graphs(n, filt)


# -- labelled brute force (oracle) ------------------------------------------


def labeled_connected_count(n: int) -> int:
    """Connected labelled graphs on ``n`` vertices, by the exponential
    formula ``c_n = 2^C(n,2) - sum_k C(n-1,k-1) c_k 2^C(n-k,2)``."""
    c = [0, 1]
    for k in range(2, n + 1):
        total = 2 ** (k * (k - 1) // 2)
        for j in range(1, k):
            total -= math.comb(k - 1, j - 1) * c[j] * 2 ** ((k - j) * (k - j - 1) // 2)
        c.append(total)
    return c[n]


# -- orientations -----------------------------------------------------------


def orientation(g: Graph, mask: int) -> Digraph:
    """Edge ``i = (u, v)`` (``u < v``) points ``u -> v`` unless bit ``i`` of
    ``mask`` is set."""
    arcs = [(v, u) if mask >> i & 1 else (u, v) for i, (u, v) in enumerate(g.edges)]
    return Digraph(g.n, arcs)


def orientations(g: Graph, mode: str = "all") -> Iterator[Digraph]:
    """All ``2^m`` orientations (``mode`` ``"all"``), or only the acyclic
    or strongly connected ones, in increasing ``mask`` order."""
    if g.m > ORIENT_MAX_M:
        raise TooLargeError(f"orientation enumeration needs m <= {ORIENT_MAX_M}")
    if mode not in ("all", "acyclic", "strong"):
        raise ValueError(f"unknown orientation mode {mode!r}")
    for mask in range(1 << g.m):
        d = orientation(g, mask)
        if mode == "acyclic" and not d.is_acyclic():
            continue
        if mode == "strong" and not d.is_strongly_connected():
            continue
        yield d


ORIENT_BATCH = 4096


def orientation_table(g: Graph, masks: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """For each mask: ``(W(D), D acyclic, D strongly connected)``.

    Batched breadth-first closure with ``float32`` matrix products; exact
    because entries only count walks on at most 24 vertices before being
    thresholded to 0/1.
    """
    n = g.n
    masks = np.asarray(masks, dtype=np.int64)
    e = np.asarray(g.edges, dtype=np.intp).reshape(-1, 2)
    w_out = np.zeros(len(masks), dtype=np.int64)
    acyc = np.zeros(len(masks), dtype=bool)
    strong = np.zeros(len(masks), dtype=bool)
    eye = np.eye(n, dtype=bool)
    for lo in range(0, len(masks), ORIENT_BATCH):
        chunk = masks[lo:lo + ORIENT_BATCH]
        b = len(chunk)
        flip = ((chunk[:, None] >> np.arange(len(e))) & 1).astype(bool)
        a = np.zeros((b, n, n), dtype=np.float32)
        tails = np.where(flip, e[:, 1], e[:, 0])
        heads = np.where(flip, e[:, 0], e[:, 1])
        rows = np.repeat(np.arange(b), len(e))
        a[rows, tails.ravel(), heads.ravel()] = 1.0
        within = np.broadcast_to(eye, (b, n, n)).copy()
        total = np.zeros(b, dtype=np.int64)
        for d in range(1, n):
            step = np.matmul(within.astype(np.float32), a) > 0
            new = step & ~within
            counts = new.sum(axis=(1, 2))
            if not counts.any():
                break
            total += d * counts
            within |= step
        plus = np.matmul(within.astype(np.float32), a) > 0
        w_out[lo:lo + b] = total
        acyc[lo:lo + b] = ~plus[:, eye].any(axis=1)
        strong[lo:lo + b] = within.all(axis=(1, 2))
    return w_out, acyc, strong


# -- trees of diameter at most 4 --------------------------------------------


def _diam4_gain(p: int, big_n: int) -> int:
    """Contribution of a child block of ``p`` vertices (the child plus its
    ``p - 1`` leaves) above the star value ``(n-1)^2``."""
    return (p - 1) * (big_n - p)


def diam4_wiener(parts: Sequence[int]) -> int:
    """W of the tree whose center has children carrying ``p_i - 1``
    leaves: ``(n-1)^2 + sum (p_i - 1)(n - 1 - p_i)`` with ``n - 1 = sum p_i``."""
    big_n = sum(parts)
    return big_n * big_n + sum(_diam4_gain(p, big_n) for p in parts)


def diam4_tree(parts: Sequence[int]) -> Graph:
    """Center 0; child ``i`` then its leaves, child by child."""
    edges = []
    nxt = 1
    for p in parts:
        child = nxt
        edges.append((0, child))
        edges += [(child, child + j) for j in range(1, p)]
        nxt += p
    return Graph(nxt, edges)


def _diam4_canonical(parts: Sequence[int]) -> bool:
    """One representative per isomorphism class (parts nonincreasing)."""
    big = [p for p in parts if p > 1]
    if len(big) != 1:
        return True
    ones = len(parts) - 1
    return ones >= 1 and big[0] - 1 >= ones


def diam4_partitions_upto(w_limit: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """``(parts, W)`` for every tree of diameter at most 4 with ``2 <= n``
    and ``W <= w_limit``, each isomorphism class once."""
    if w_limit > 10**6:
        raise TooLargeError("diameter-4 sweep supports W_limit <= 10^6")
    big_n = 1
    while big_n * big_n <= w_limit:
        budget = w_limit - big_n * big_n

        def rec(remaining: int, max_part: int, acc: list[int], gain: int):
            if remaining == 0:
                if _diam4_canonical(acc):
                    yield tuple(acc), big_n * big_n + gain
                return
            for p in range(min(max_part, remaining), 0, -1):
                g2 = gain + _diam4_gain(p, big_n)
                if g2 > budget:
                    continue
                acc.append(p)
                yield from rec(remaining - p, p, acc, g2)
                acc.pop()

        yield from rec(big_n, big_n, [], 0)
        big_n += 1


def diam4_trees_upto(w_limit: int) -> Iterator[tuple[Graph, int]]:
    for parts, w in diam4_partitions_upto(w_limit):
        yield diam4_tree(parts), w
