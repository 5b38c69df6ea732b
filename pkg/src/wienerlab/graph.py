"""Simple undirected graphs and digraphs on vertices ``0..n-1``.

Adjacency is kept as one Python ``int`` bitset per vertex, alongside the
sorted edge (or arc) list.  Both views are built once and never mutated.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


class Graph:
    """Immutable simple graph.

    Invariants: no loops, no multi-edges, ``edges`` sorted with ``u < v``,
    and ``adj[v]`` has bit ``w`` set iff ``(min(v,w), max(v,w))`` is an edge.
    """

    __slots__ = ("n", "adj", "edges", "_degrees")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._set(n, tuple(adj))

    def _set(self, n: int, adj: tuple[int, ...]) -> None:
        self.n = n
        self.adj = adj
        edges = []
        for u in range(n):
            for v in iter_bits(adj[u] >> (u + 1)):
                edges.append((u, u + 1 + v))
        self.edges = tuple(edges)
        self._degrees = None

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        """Build from neighbour bitsets; symmetry and loop-freeness are checked."""
        adj = tuple(int(a) for a in adj)
        n = len(adj)
        for v in range(n):
            if adj[v] >> v & 1:
                raise ValueError(f"self-loop at {v}")
            if adj[v] >> n:
                raise ValueError(f"neighbour out of range at {v}")
            for w in iter_bits(adj[v]):
                if not adj[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
        g = cls.__new__(cls)
        g._set(n, adj)
        return g

    @classmethod
    def _trusted(cls, adj: tuple[int, ...]) -> "Graph":
        g = cls.__new__(cls)
        g._set(len(adj), adj)
        return g

    # -- basic accessors -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> tuple[int, ...]:
        if self._degrees is None:
            self._degrees = tuple(a.bit_count() for a in self.adj)
        return self._degrees

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def min_degree(self) -> int:
        return min(self.degrees) if self.n else 0

    @property
    def max_degree(self) -> int:
        return max(self.degrees) if self.n else 0

    def neighbors(self, v: int) -> list[int]:
        return bits_to_list(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @property
    def cyclomatic_number(self) -> int:
        """``m - n + c`` where ``c`` is the number of components."""
        return self.m - self.n + len(self.components())

    # -- connectivity ----------------------------------------------------

    def component_mask(self, v: int, allowed: int | None = None) -> int:
        """Bitset of vertices reachable from ``v`` inside ``allowed``."""
        if allowed is None:
            allowed = (1 << self.n) - 1
        adj = self.adj
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= adj[u]
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def components(self) -> list[list[int]]:
        left = (1 << self.n) - 1
        comps = []
        while left:
            v = (left & -left).bit_length() - 1
            comp = self.component_mask(v, left)
            comps.append(bits_to_list(comp))
            left &= ~comp
        return comps

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return self.component_mask(0) == (1 << self.n) - 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def two_coloring(self) -> list[int] | None:
        """Proper 2-colouring (colour 0 for the smallest vertex of each
        component) or ``None`` when the graph has an odd cycle."""
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in iter_bits(self.adj[u]):
                    if color[w] < 0:
                        color[w] = color[u] ^ 1
                        stack.append(w)
                    elif color[w] == color[u]:
                        return None
        return color

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None

    # -- derived graphs ---------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled to ``0..k-1`` in increasing order."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        adj = []
        for v in vs:
            a = 0
            for w in iter_bits(self.adj[v]):
                i = index.get(w)
                if i is not None:
                    a |= 1 << i
            adj.append(a)
        return Graph._trusted(tuple(adj))

    def remove_vertex(self, v: int) -> "Graph":
        return self.induced(u for u in range(self.n) if u != v)

    def remove_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._trusted(tuple(adj))

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError(f"self-loop at {u}")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._trusted(tuple(adj))

    def add_vertex(self, neighbor_mask: int = 0) -> "Graph":
        """Append vertex ``n`` joined to the vertices in ``neighbor_mask``."""
        n = self.n
        adj = list(self.adj)
        for w in iter_bits(neighbor_mask):
            adj[w] |= 1 << n
        adj.append(neighbor_mask)
        return Graph._trusted(tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            a = 0
            for w in iter_bits(self.adj[v]):
                a |= 1 << perm[w]
            adj[perm[v]] = a
        return Graph._trusted(tuple(adj))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        adj = list(self.adj) + [a << shift for a in other.adj]
        return Graph._trusted(tuple(adj))

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(("Graph", self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    def __getstate__(self):
        return self.adj

    def __setstate__(self, state):
        self._set(len(state), tuple(state))


class Digraph:
    """Immutable digraph without loops or duplicate arcs."""

    __slots__ = ("n", "out_adj", "in_adj", "arcs")

    def __init__(self, n: int, arcs: Iterable[Sequence[int]] = ()):
        out_adj = [0] * n
        for a in arcs:
            u, v = int(a[0]), int(a[1])
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if out_adj[u] >> v & 1:
                raise ValueError(f"duplicate arc ({u}, {v})")
            out_adj[u] |= 1 << v
        self._set(tuple(out_adj))

    def _set(self, out_adj: tuple[int, ...]) -> None:
        n = len(out_adj)
        in_adj = [0] * n
        arcs = []
        for u in range(n):
            for v in iter_bits(out_adj[u]):
                in_adj[v] |= 1 << u
                arcs.append((u, v))
        self.n = n
        self.out_adj = out_adj
        self.in_adj = tuple(in_adj)
        self.arcs = tuple(arcs)

    @classmethod
    def from_out_adjacency(cls, out_adj: Sequence[int]) -> "Digraph":
        d = cls.__new__(cls)
        d._set(tuple(int(a) for a in out_adj))
        return d

    @property
    def m(self) -> int:
        return len(self.arcs)

    def underlying(self) -> Graph:
        return Graph(self.n, self.arcs)

    def reach_mask(self, v: int, reverse: bool = False) -> int:
        """Bitset of vertices reachable from ``v`` (or reaching ``v``)."""
        adj = self.in_adj if reverse else self.out_adj
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= adj[u]
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def is_strongly_connected(self) -> bool:
        if self.n <= 1:
            return True
        full = (1 << self.n) - 1
        return self.reach_mask(0) == full and self.reach_mask(0, reverse=True) == full

    def is_acyclic(self) -> bool:
        indeg = [a.bit_count() for a in self.in_adj]
        ready = [v for v in range(self.n) if indeg[v] == 0]
        seen = 0
        while ready:
            u = ready.pop()
            seen += 1
            for w in iter_bits(self.out_adj[u]):
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
        return seen == self.n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Digraph) and self.out_adj == other.out_adj

    def __hash__(self) -> int:
        return hash(("Digraph", self.out_adj))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={list(self.arcs)})"

    def __getstate__(self):
        return self.out_adj

    def __setstate__(self, state):
        self._set(tuple(state))
