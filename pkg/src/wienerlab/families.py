"""Named graph families with documented, reproducible vertex labels.

Every constructor checks the structural invariant of its family before
returning; a violated invariant raises ``AssertionError`` (a bug), a bad
parameter raises :class:`BadParamsError`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from .errors import BadParamsError
from .graph import Graph
from .structure import girth, radius, vertex_connectivity

Edge = tuple[int, int]


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParamsError(msg)


def _clique(vs: Sequence[int]) -> list[Edge]:
    return list(combinations(vs, 2))


def _path_edges(vs: Sequence[int]) -> list[Edge]:
    return list(zip(vs, vs[1:]))


# -- classical families -----------------------------------------------------


def path(n: int) -> Graph:
    """``P_n`` on ``0 - 1 - ... - n-1``."""
    _need(n >= 1, "path needs n >= 1")
    g = Graph(n, _path_edges(range(n)))
    assert g.m == n - 1 and g.is_tree()
    return g


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    g = Graph(n, _path_edges(range(n)) + [(0, n - 1)])
    assert g.m == n and all(d == 2 for d in g.degrees)
    return g


def star(n: int) -> Graph:
    """``S_n = K_{1,n-1}`` with center 0."""
    _need(n >= 1, "star needs n >= 1")
    g = Graph(n, [(0, v) for v in range(1, n)])
    assert g.m == n - 1
    return g


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    g = Graph(n, _clique(range(n)))
    assert g.m == n * (n - 1) // 2
    return g


def complete_bipartite(p: int, q: int) -> Graph:
    """Parts ``0..p-1`` and ``p..p+q-1``."""
    _need(p >= 1 and q >= 1, "complete bipartite graph needs p, q >= 1")
    g = Graph(p + q, [(u, p + v) for u in range(p) for v in range(q)])
    assert g.m == p * q
    return g


def caterpillar(leaf_counts: Sequence[int]) -> Graph:
    """Spine ``0..s-1`` (``s = len(leaf_counts)``); spine vertex ``i``
    gets ``leaf_counts[i]`` pendant leaves, numbered after the spine in
    spine order."""
    s = len(leaf_counts)
    _need(s >= 1 and all(c >= 0 for c in leaf_counts), "caterpillar needs a nonempty spine and leaf counts >= 0")
    edges = _path_edges(range(s))
    nxt = s
    for i, c in enumerate(leaf_counts):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    g = Graph(nxt, edges)
    assert g.is_tree() and is_caterpillar(g)
    return g


def is_caterpillar(g: Graph) -> bool:
    """A tree whose non-leaf vertices induce a path (or nothing)."""
    if not g.is_tree():
        return False
    inner = [v for v in range(g.n) if g.degree(v) > 1]
    if len(inner) <= 1:
        return True
    core = g.induced(inner)
    return core.is_tree() and core.max_degree <= 2


def generalized_star(ks: Sequence[int]) -> Graph:
    """Center 0; branch ``i`` is a path of ``ks[i]`` vertices hanging off
    the center, branches numbered consecutively."""
    t = len(ks)
    _need(t >= 3, "generalized star needs t >= 3 branches")
    _need(all(k >= 1 for k in ks), "branch lengths must be positive")
    edges: list[Edge] = []
    nxt = 1
    for k in ks:
        branch = list(range(nxt, nxt + k))
        edges.append((0, branch[0]))
        edges += _path_edges(branch)
        nxt += k
    g = Graph(nxt, edges)
    assert g.is_tree() and g.m == sum(ks) and g.degree(0) == t
    return g


def habc(a: int, b: int, c: int) -> Graph:
    """``H_{a,b,c}``: degree-3 vertices ``u = 0`` and ``w = 2`` joined
    through ``1``.  Pendant paths of lengths ``a`` and ``b`` hang at ``u``,
    the single pendant vertex ``3`` and a path of length ``c`` at ``w``;
    paths are numbered ``a`` first, then ``b``, then ``c``."""
    _need(a >= 1 and b >= 1 and c >= 1, "H needs a, b, c >= 1")
    edges: list[Edge] = [(0, 1), (1, 2), (2, 3)]
    nxt = 4
    for root, length in ((0, a), (0, b), (2, c)):
        vs = [root] + list(range(nxt, nxt + length))
        edges += _path_edges(vs)
        nxt += length
    g = Graph(nxt, edges)
    deg = g.degrees
    assert g.n == a + b + c + 4 and g.is_tree()
    assert deg.count(3) == 2 and deg.count(1) == 4
    return g


def theta(a: int, b: int, c: int) -> Graph:
    """Hubs 0 and 1 joined by paths with ``a``, ``b``, ``c`` inner
    vertices, numbered in that order."""
    _need(a >= b >= c >= 0 and b >= 1, "theta needs a >= b >= c >= 0 and b >= 1")
    edges: list[Edge] = []
    nxt = 2
    for k in (a, b, c):
        edges += _path_edges([0] + list(range(nxt, nxt + k)) + [1])
        nxt += k
    g = Graph(nxt, edges)
    assert g.n == a + b + c + 2 and g.m == g.n + 1 and g.is_connected()
    return g


# -- cubic chain ------------------------------------------------------------

# Each block is (order, edges, entry, exit); entry/exit are the degree-2
# attachment vertices (exit is None for an end block, whose single degree-2
# vertex serves as entry).
_DIAMOND = (4, [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)], 1, 2)  # K4 - e, p=1, q=2
_END5 = (5, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)], 0, None)
# Triangle 0-1-2 whose corners 1, 2 reach the degree-2 vertices 3, 4 of a K4 - e on 3..6.
_END7 = (7, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)], 0, None)


def cubic_chain(n: int) -> Graph:
    """``L_n``: two end blocks joined through a chain of ``K_4 - e``
    gadgets by bridges.  Ends are two 5-blocks for ``n = 2 mod 4`` and a
    5-block plus a 7-block for ``n = 0 mod 4``; blocks are numbered left
    to right."""
    _need(n >= 10 and n % 2 == 0, "cubic chain needs even n >= 10")
    if n % 4 == 2:
        right, inner = _END5, (n - 10) // 4
    else:
        right, inner = _END7, (n - 12) // 4
    edges: list[Edge] = []
    offset = 0

    def place(block):
        nonlocal offset
        order, bedges, entry, exit_ = block
        edges.extend((u + offset, v + offset) for u, v in bedges)
        base = offset
        offset += order
        return base + entry, (None if exit_ is None else base + exit_)

    tail, _ = place(_END5)
    for _ in range(inner):
        p, q = place(_DIAMOND)
        edges.append((tail, p))
        tail = q
    head, _ = place(right)
    edges.append((tail, head))
    g = Graph(offset, edges)
    assert g.n == n and g.is_connected() and all(d == 3 for d in g.degrees)
    return g


# -- section 5 and 11 families ----------------------------------------------


def radius_gadget(n: int, r: int, s: int) -> Graph:
    """``G_{n,r,s}`` from the cycle ``v_1 ... v_{2r}``: ``v_1`` becomes a
    clique on ``0..s-1``, ``v_2`` a clique on the next ``t = n-2r+2-s``
    labels, and ``v_3 .. v_{2r}`` follow in order."""
    _need(r >= 3 and n >= 2 * r, "radius gadget needs r >= 3 and n >= 2r")
    _need(1 <= s <= n - 2 * r + 1, "radius gadget needs 1 <= s <= n - 2r + 1")
    t = n - 2 * r + 2 - s
    v1 = list(range(s))
    v2 = list(range(s, s + t))
    rest = list(range(s + t, n))  # v_3 .. v_{2r}
    edges = _clique(v1) + _clique(v2) + [(a, b) for a in v1 for b in v2]
    edges += [(b, rest[0]) for b in v2] + [(a, rest[-1]) for a in v1]
    edges += _path_edges(rest)
    g = Graph(n, edges)
    assert radius(g) == r
    return g


def eulerian_c3(n: int) -> Graph:
    """``C_{n,3}``: cycle ``0..n-3`` plus triangle ``0, n-2, n-1``."""
    _need(n >= 5, "C_{n,3} needs n >= 5")
    edges = _path_edges(range(n - 2)) + [(0, n - 3), (0, n - 2), (0, n - 1), (n - 2, n - 1)]
    g = Graph(n, edges)
    assert g.is_connected() and all(d % 2 == 0 for d in g.degrees)
    return g


def _join_by_path(n: int, left: list[Edge], p: int, a: int, right: list[Edge], q: int, b: int) -> Graph:
    """Left part on ``0..p-1``, inner path vertices next, right part
    last; the path runs from left vertex ``a`` to right vertex ``b``."""
    inner = n - p - q
    _need(inner >= 0, "order too small for the two parts")
    rshift = p + inner
    edges = list(left) + [(u + rshift, v + rshift) for u, v in right]
    edges += _path_edges([a] + list(range(p, p + inner)) + [b + rshift])
    return Graph(n, edges)


def dumbbell(n: int, p: int, q: int) -> Graph:
    """``K_p`` and ``K_q`` joined by a path between their last / first
    vertices; path length ``n - p - q + 1``."""
    _need(p >= 1 and q >= 1, "dumbbell needs p, q >= 1")
    g = _join_by_path(n, _clique(range(p)), p, p - 1, _clique(range(q)), q, 0)
    assert g.is_connected() and g.m == p * (p - 1) // 2 + q * (q - 1) // 2 + n - p - q + 1
    return g


def barbell(n: int, p1: int, p2: int, q1: int, q2: int) -> Graph:
    """``K_{p1,p2}`` and ``K_{q1,q2}`` joined by a path attached to the
    first vertex of each first part."""
    _need(min(p1, p2, q1, q2) >= 1, "barbell needs all part sizes >= 1")
    left = complete_bipartite(p1, p2).edges
    right = complete_bipartite(q1, q2).edges
    g = _join_by_path(n, left, p1 + p2, 0, right, q1 + q2, 0)
    assert g.is_connected() and g.m == p1 * p2 + q1 * q2 + n - p1 - p2 - q1 - q2 + 1
    return g


def connectivity_min(n: int, k: int) -> Graph:
    """``K_k + (K_1 u K_{n-k-1})``: ``K_k`` on ``0..k-1``, the lone vertex
    ``k``, the other clique on ``k+1..n-1``."""
    _need(1 <= k <= n - 2, "connectivity_min needs 1 <= k <= n - 2")
    core = list(range(k))
    big = list(range(k + 1, n))
    edges = _clique(core) + _clique(big) + [(c, v) for c in core for v in [k] + big]
    g = Graph(n, edges)
    if n <= 16:
        assert vertex_connectivity(g) == k
    else:
        assert g.degree(k) == k
    return g


def nanotube60(k: int) -> Graph:
    """(6,0) tube fullerene on ``12k`` vertices.

    Cap A is the hexagon ``0..5``, rings ``1..k-1`` are 12-cycles at
    ``6 + 12(i-1) ..``, cap B is the hexagon at ``12k-6 ..``.  Cap A
    meets ring 1 at even positions; consecutive rings meet at
    alternating parities; cap B takes the parity ring ``k-1`` left free.
    """
    _need(k >= 2, "nanotube needs k >= 2")
    edges: list[Edge] = []
    cap_a = list(range(6))
    rings = [list(range(6 + 12 * i, 18 + 12 * i)) for i in range(k - 1)]
    cap_b = list(range(12 * k - 6, 12 * k))
    for cyc in [cap_a, cap_b] + rings:
        edges += _path_edges(cyc) + [(cyc[0], cyc[-1])]
    edges += [(cap_a[i], rings[0][2 * i]) for i in range(6)]
    parity = 1
    for lo, hi in zip(rings, rings[1:]):
        edges += [(lo[j], hi[j]) for j in range(parity, 12, 2)]
        parity ^= 1
    edges += [(cap_b[i], rings[-1][2 * i + parity]) for i in range(6)]
    g = Graph(12 * k, edges)
    assert g.m == 18 * k and all(d == 3 for d in g.degrees) and g.is_connected()
    assert girth(g) == 5
    return g


def _check_bipartition(g: Graph, p: int, q: int) -> None:
    colors = g.two_coloring()
    assert colors is not None
    ones = sum(colors)
    assert sorted((ones, g.n - ones)) == sorted((p, q))


def bipartition_tree_min(p: int, q: int) -> Graph:
    """Centers 0 (of ``K_{1,p-1}``) and 1 (of ``K_{1,q-1}``) joined; the
    leaves of 0 come first."""
    _need(p >= q >= 1, "bipartition needs p >= q >= 1")
    edges = [(0, 1)] + [(0, 2 + i) for i in range(p - 1)] + [(1, p + 1 + i) for i in range(q - 1)]
    g = Graph(p + q, edges)
    assert g.is_tree()
    _check_bipartition(g, p, q)
    return g


def bipartition_tree_max(p: int, q: int) -> Graph:
    """Path ``0..2q-2`` with ``ceil((p-q+1)/2)`` leaves at vertex 0 and
    ``floor((p-q+1)/2)`` at vertex ``2q-2``."""
    _need(p >= q >= 1, "bipartition needs p >= q >= 1")
    spine = 2 * q - 1
    extra = p - q + 1
    left = (extra + 1) // 2
    edges = _path_edges(range(spine))
    nxt = spine
    for end, cnt in ((0, left), (spine - 1, extra - left)):
        for _ in range(cnt):
            edges.append((end, nxt))
            nxt += 1
    g = Graph(nxt, edges)
    assert g.is_tree()
    _check_bipartition(g, p, q)
    return g


def bipartition_unicyclic_min(p: int, q: int) -> Graph:
    """4-cycle ``0-1-2-3`` with ``p-2`` leaves at 0 and ``q-2`` at 1."""
    _need(p >= q >= 2, "unicyclic bipartition needs p >= q >= 2")
    edges = [(0, 1), (1, 2), (2, 3), (0, 3)]
    nxt = 4
    for end, cnt in ((0, p - 2), (1, q - 2)):
        for _ in range(cnt):
            edges.append((end, nxt))
            nxt += 1
    g = Graph(nxt, edges)
    assert g.is_connected() and g.m == g.n
    _check_bipartition(g, p, q)
    return g


# -- FamilySpec ---------------------------------------------------------------

_REGISTRY: dict[str, tuple[Callable[..., Graph], str]] = {
    "path": (path, "n"),
    "cycle": (cycle, "n"),
    "star": (star, "n"),
    "complete": (complete, "n"),
    "complete_bipartite": (complete_bipartite, "p,q"),
    "caterpillar": (lambda *c: caterpillar(c), "leaf counts..."),
    "generalized_star": (lambda *k: generalized_star(k), "k1,...,kt"),
    "H": (habc, "a,b,c"),
    "theta": (theta, "a,b,c"),
    "cubic_chain": (cubic_chain, "n"),
    "radius_gadget": (radius_gadget, "n,r,s"),
    "eulerian_c3": (eulerian_c3, "n"),
    "dumbbell": (dumbbell, "n,p,q"),
    "barbell": (barbell, "n,p1,p2,q1,q2"),
    "connectivity_min": (connectivity_min, "n,k"),
    "nanotube60": (nanotube60, "k"),
    "bipartition_tree_min": (bipartition_tree_min, "p,q"),
    "bipartition_tree_max": (bipartition_tree_max, "p,q"),
    "bipartition_unicyclic_min": (bipartition_unicyclic_min, "p,q"),
}

FAMILY_TAGS = tuple(_REGISTRY)


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``"tag:p1,p2,..."`` (``"H:3,2,4"``, ``"nanotube60:3"``)."""
        tag, _, rest = text.strip().partition(":")
        if tag not in _REGISTRY:
            raise BadParamsError(f"unknown family {tag!r}; known: {', '.join(FAMILY_TAGS)}")
        try:
            params = tuple(int(x) for x in rest.split(",")) if rest.strip() else ()
        except ValueError:
            raise BadParamsError(f"family parameters must be integers: {rest!r}") from None
        return cls(tag, params)

    def __str__(self) -> str:
        return f"{self.tag}:{','.join(map(str, self.params))}"


def build(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    if spec.tag not in _REGISTRY:
        raise BadParamsError(f"unknown family {spec.tag!r}")
    fn, signature = _REGISTRY[spec.tag]
    try:
        return fn(*spec.params)
    except TypeError:
        raise BadParamsError(f"{spec.tag} expects parameters ({signature})") from None


# -- random instances ---------------------------------------------------------


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree from a random Pruefer sequence."""
    if n <= 2:
        return Graph(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (v for v in range(n) if degree[v] == 1)
    edges.append((u, w))
    return Graph(n, edges)


def random_connected_graph(n: int, rng: random.Random, extra: float = 0.3) -> Graph:
    """Random spanning tree plus each remaining pair with probability ``extra``."""
    tree = random_tree(n, rng)
    edges = set(tree.edges)
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < extra:
            edges.add((u, v))
    return Graph(n, sorted(edges))


def random_block_graph(order: int, rng: random.Random, max_clique: int = 4) -> Graph:
    """Connected graph whose blocks are all cliques: cliques are glued
    one at a time at a random existing vertex."""
    _need(order >= 1, "block graph needs order >= 1")
    edges: list[Edge] = []
    n = 1
    while n < order:
        size = min(rng.randint(2, max_clique), order - n + 1)
        at = rng.randrange(n)
        clique = [at] + list(range(n, n + size - 1))
        edges += _clique(clique)
        n += size - 1
    g = Graph(order, edges)
    assert g.is_connected()
    return g


def _glue(parts: Sequence[Graph], identify: Sequence[tuple[int, int, int, int]]) -> Graph:
    """Disjoint union of ``parts`` with vertex ``(part a, vertex x)``
    identified with ``(part b, vertex y)`` for each entry; the merged
    graph is relabelled densely in order of first appearance."""
    offsets = []
    total = 0
    for p in parts:
        offsets.append(total)
        total += p.n
    parent = list(range(total))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, x, b, y in identify:
        ra, rb = find(offsets[a] + x), find(offsets[b] + y)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    label: dict[int, int] = {}
    for v in range(total):
        label.setdefault(find(v), len(label))
    edges = set()
    for p, off in zip(parts, offsets):
        for u, v in p.edges:
            a, b = label[find(off + u)], label[find(off + v)]
            assert a != b, "gluing created a loop"
            edges.add((min(a, b), max(a, b)))
    return Graph(len(label), sorted(edges))


def _residue_orders(residue: int, r: int, cap: int) -> list[int]:
    return [x for x in range(1, cap + 1) if x % r == residue % r]


# Orders up to this bound are drawn from the exhaustive list of connected
# graphs (or trees); larger ones come from random generators.
SAMPLE_ENUM_MAX_N = 7


def _sample_connected(order: int, rng: random.Random, trees_only: bool) -> Graph:
    from .enumeration import connected_graphs, trees

    if order <= SAMPLE_ENUM_MAX_N:
        pool = list(trees(order)) if trees_only else connected_graphs(order)
        return rng.choice(pool)
    if trees_only:
        return random_tree(order, rng)
    return random_connected_graph(order, rng, extra=rng.choice((0.1, 0.3, 0.6)))


@dataclass(frozen=True)
class CongruenceClass:
    """Shared data of a class ``G(H, F)``: the supervertex graphs ``hs``,
    the superedge graphs ``fs`` and, per superedge, its two attachment
    vertices (possibly equal)."""

    r: int
    t: int
    hs: tuple[Graph, ...]
    fs: tuple[Graph, ...]
    ends: tuple[tuple[int, int], ...]

    def member(self, rng: random.Random) -> Graph:
        """A random member: random tree over the supervertices, random
        attachment vertices in the chosen ``H``s."""
        ell = len(self.hs)
        order = list(range(ell))
        rng.shuffle(order)
        parts = list(self.hs) + list(self.fs)
        identify = []
        for j, f_ends in enumerate(self.ends):
            child = order[j + 1]
            parent = order[rng.randrange(j + 1)]
            a, b = (child, parent) if rng.random() < 0.5 else (parent, child)
            fj = ell + j
            identify.append((fj, f_ends[0], a, rng.randrange(self.hs[a].n)))
            identify.append((fj, f_ends[1], b, rng.randrange(self.hs[b].n)))
        g = _glue(parts, identify)
        assert g.is_connected()
        assert g.n == sum(h.n for h in self.hs) + sum(f.n - 2 for f in self.fs)
        return g


def congruence_class(r: int, t: int, ell: int, rng: random.Random, trees_only: bool = False) -> CongruenceClass:
    _need(r >= 2 and 0 <= t < r and ell >= 2, "congruence class needs r >= 2, 0 <= t < r, l >= 2")
    if trees_only:
        _need(t == 0 and r % 2 == 0, "tree variant needs t = 0 and even r")
    cap = r + 8
    h_orders = _residue_orders(-t, r, cap)
    f_orders = _residue_orders(t + 2, r, cap)
    hs = tuple(_sample_connected(rng.choice(h_orders), rng, trees_only) for _ in range(ell))
    fs = tuple(_sample_connected(rng.choice(f_orders), rng, trees_only) for _ in range(ell - 1))
    ends = tuple((rng.randrange(f.n), rng.randrange(f.n)) for f in fs)
    return CongruenceClass(r, t, hs, fs, ends)


def build_congruence_instance(r: int, t: int, ell: int, seed: int, trees_only: bool = False) -> tuple[Graph, Graph]:
    """Two members of one seeded class ``G(H, F)`` (``G^T`` when
    ``trees_only``)."""
    rng = random.Random(seed)
    cls = congruence_class(r, t, ell, rng, trees_only)
    return cls.member(rng), cls.member(rng)


def build_gxy_instance(r: int, p: int, seed: int) -> tuple[Graph, list[Graph]]:
    """``(Gamma, [G_1..G_p])``: ``p`` block graphs of order ``r`` joined
    into one connected graph by ``p - 1`` extra edges forming a tree."""
    _need(r >= 2 and p >= 2, "needs r >= 2 and p >= 2")
    rng = random.Random(seed)
    parts = [random_block_graph(r, rng) for _ in range(p)]
    edges = [(i * r + u, i * r + v) for i, g in enumerate(parts) for u, v in g.edges]
    for i in range(1, p):
        j = rng.randrange(i)
        a, b = j * r + rng.randrange(r), i * r + rng.randrange(r)
        edges.append((min(a, b), max(a, b)))
    gamma = Graph(p * r, edges)
    assert gamma.is_connected()
    return gamma, parts


# -- segments and k-proportional trees ---------------------------------------


def segments(tree: Graph) -> list[int]:
    """Sorted lengths of the maximal paths whose inner vertices have
    degree 2 and whose ends are leaves or branching vertices."""
    assert tree.is_tree()
    if tree.n <= 1:
        return []
    deg = tree.degrees
    ends = [v for v in range(tree.n) if deg[v] != 2]
    out = []
    for s in ends:
        for w in tree.neighbors(s):
            prev, cur, length = s, w, 1
            while deg[cur] == 2:
                nxt = next(x for x in tree.neighbors(cur) if x != prev)
                prev, cur, length = cur, nxt, length + 1
            if s < cur:
                out.append(length)
    return sorted(out)


def random_skeleton(e: int, rng: random.Random) -> Graph:
    """Random tree with ``e`` edges and no vertex of degree 2 (rejection
    over Pruefer sequences).  Needs ``e == 1`` or ``e >= 3``."""
    _need(e == 1 or e >= 3, "a tree without degree-2 vertices has 1 or >= 3 edges")
    while True:
        t = random_tree(e + 1, rng)
        if 2 not in t.degrees:
            return t


def subdivide(skeleton: Graph, lengths: Sequence[int]) -> Graph:
    """Replace skeleton edge ``i`` by a path of ``lengths[i]`` edges; new
    vertices are numbered after the skeleton, edge by edge."""
    _need(len(lengths) == skeleton.m and all(x >= 1 for x in lengths), "one positive length per edge")
    edges: list[Edge] = []
    nxt = skeleton.n
    for (u, v), ln in zip(skeleton.edges, lengths):
        inner = list(range(nxt, nxt + ln - 1))
        nxt += ln - 1
        edges += _path_edges([u] + inner + [v])
    return Graph(nxt, edges)


def build_kproportional_pair(
    topology: int | Graph,
    k: int,
    mult_a: Sequence[int],
    mult_b: Sequence[int],
) -> tuple[Graph, Graph]:
    """Two ``k``-proportional trees on one skeleton: skeleton edge ``i``
    becomes a segment of length ``k * mult[i]``.  ``topology`` is either an
    explicit skeleton (no degree-2 vertices) or a seed for
    :func:`random_skeleton` with ``len(mult_a)`` edges."""
    _need(k >= 1, "k must be >= 1")
    _need(len(mult_a) == len(mult_b), "both assignments need the same number of segments")
    _need(sum(mult_a) == sum(mult_b), "assignments give different orders")
    if isinstance(topology, Graph):
        skel = topology
        _need(skel.is_tree() and 2 not in skel.degrees, "skeleton must be a tree without degree-2 vertices")
    else:
        skel = random_skeleton(len(mult_a), random.Random(topology))
    t1 = subdivide(skel, [k * x for x in mult_a])
    t2 = subdivide(skel, [k * x for x in mult_b])
    assert t1.n == t2.n
    s1, s2 = segments(t1), segments(t2)
    assert len(s1) == len(s2) and all(x % k == 0 for x in s1 + s2)
    return t1, t2


def random_kproportional_pair(k: int, rng: random.Random, max_segments: int = 7, max_mult: int = 4) -> tuple[Graph, Graph]:
    e = rng.choice([1] + list(range(3, max_segments + 1)))
    mult_a = [rng.randint(1, max_mult) for _ in range(e)]
    total = sum(mult_a)
    # a second composition of the same total into e positive parts
    cuts = sorted(rng.sample(range(1, total), e - 1)) if e > 1 else []
    mult_b = [b - a for a, b in zip([0] + cuts, cuts + [total])]
    return build_kproportional_pair(rng.randrange(2**32), k, mult_a, mult_b)


__all__ = [
    "FAMILY_TAGS",
    "CongruenceClass",
    "FamilySpec",
    "barbell",
    "bipartition_tree_max",
    "bipartition_tree_min",
    "bipartition_unicyclic_min",
    "build",
    "build_congruence_instance",
    "build_gxy_instance",
    "build_kproportional_pair",
    "caterpillar",
    "complete",
    "complete_bipartite",
    "congruence_class",
    "connectivity_min",
    "cubic_chain",
    "cycle",
    "dumbbell",
    "eulerian_c3",
    "generalized_star",
    "habc",
    "is_caterpillar",
    "nanotube60",
    "path",
    "radius_gadget",
    "random_block_graph",
    "random_connected_graph",
    "random_kproportional_pair",
    "random_skeleton",
    "random_tree",
    "segments",
    "star",
    "subdivide",
    "theta",
]
