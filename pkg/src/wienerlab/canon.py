"""Canonical labelling by partition refinement and individualisation.

The search is the classic individualise-refine tree: equitable refinement
of an ordered partition, individualising a vertex of the first non-trivial
cell at each level.  Leaves are compared by the adjacency rows under the
induced labelling and the largest certificate wins.  Leaves equal to the
first leaf (or the current best) yield automorphisms, which prune sibling
subtrees lying in one orbit of the pointwise stabiliser of the current
path.  The group order is the product of first-path orbit sizes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import TooLargeError
from .graph import Graph, iter_bits
from .io import to_graph6_bytes

CANON_MAX_N = 32


@dataclass(frozen=True)
class CanonForm:
    code: bytes
    aut_order: int
    labeling: tuple[int, ...]
    orbits: tuple[int, ...]

    def __str__(self) -> str:
        return self.code.decode("ascii")


def _refine(adj, cells, splitters):
    n_cells_target = sum(len(c) for c in cells)
    queue = deque(splitters)
    queued = {id(c) for c in splitters}
    while queue and len(cells) < n_cells_target:
        w = queue.popleft()
        queued.discard(id(w))
        wmask = 0
        for v in w:
            wmask |= 1 << v
        new_cells = []
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups: dict[int, list[int]] = {}
            for v in c:
                k = (adj[v] & wmask).bit_count()
                if k in groups:
                    groups[k].append(v)
                else:
                    groups[k] = [v]
            if len(groups) == 1:
                new_cells.append(c)
                continue
            frags = [groups[k] for k in sorted(groups)]
            new_cells.extend(frags)
            if id(c) in queued:
                queue.remove(c)
                queued.discard(id(c))
                for f in frags:
                    queue.append(f)
                    queued.add(id(f))
            else:
                big = 0
                for i in range(1, len(frags)):
                    if len(frags[i]) > len(frags[big]):
                        big = i
                for i, f in enumerate(frags):
                    if i != big:
                        queue.append(f)
                        queued.add(id(f))
        cells = new_cells
    return cells


def _orbit_roots(n, gens):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(x) for x in range(n)]


class _Search:
    def __init__(self, adj):
        self.adj = adj
        self.n = len(adj)
        self.first_cert = None
        self.first_order = None
        self.first_path = None
        self.best_cert = None
        self.best_order = None
        self.gens: list[tuple[int, ...]] = []
        self.aut_order = 1

    def _certificate(self, order):
        adj = self.adj
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            r = 0
            for w in iter_bits(adj[v]):
                r |= 1 << pos[w]
            rows.append(r)
        return tuple(rows)

    def _automorphism(self, order_a, order_b):
        gamma = [0] * self.n
        for a, b in zip(order_a, order_b):
            gamma[a] = b
        return tuple(gamma)

    def _fixing(self, path):
        return [g for g in self.gens if all(g[v] == v for v in path)]

    def run(self, cells, path, first):
        n = self.n
        if len(cells) == n:
            order = [c[0] for c in cells]
            cert = self._certificate(order)
            if self.first_cert is None:
                self.first_cert = self.best_cert = cert
                self.first_order = self.best_order = order
                self.first_path = list(path)
                return n + 1
            if cert == self.first_cert:
                self.gens.append(self._automorphism(self.first_order, order))
                k = 0
                fp = self.first_path
                while k < len(path) and k < len(fp) and path[k] == fp[k]:
                    k += 1
                return k
            if cert == self.best_cert:
                self.gens.append(self._automorphism(self.best_order, order))
            elif cert > self.best_cert:
                self.best_cert = cert
                self.best_order = order
            return n + 1

        depth = len(path)
        t = 0
        while len(cells[t]) == 1:
            t += 1
        target = cells[t]
        explored: list[int] = []
        for v in list(target):
            if explored:
                stab = self._fixing(path)
                if stab:
                    roots = _orbit_roots(n, stab)
                    rv = roots[v]
                    if any(roots[u] == rv for u in explored):
                        continue
            rest = [u for u in target if u != v]
            single = [v]
            child = cells[:t] + [single, rest] + cells[t + 1:]
            child = _refine(self.adj, child, [single])
            explored.append(v)
            ret = self.run(child, path + [v], first and len(explored) == 1)
            if ret < depth:
                return ret
        if first:
            stab = self._fixing(path)
            roots = _orbit_roots(n, stab)
            r0 = roots[explored[0]]
            self.aut_order *= sum(1 for u in target if roots[u] == r0)
        return n + 1


def canonical_labeling(adj: tuple[int, ...]) -> tuple[list[int], int, list[int]]:
    """``(labeling, aut_order, orbits)`` for raw neighbour bitsets, where
    ``labeling[v]`` is the canonical position of ``v`` and ``orbits[v]``
    is the smallest vertex in the automorphism orbit of ``v``."""
    n = len(adj)
    if n > CANON_MAX_N:
        raise TooLargeError(f"canonical form supports n <= {CANON_MAX_N}")
    if n == 0:
        return [], 1, []
    start = [list(range(n))]
    cells = _refine(adj, start, [start[0]])
    s = _Search(adj)
    s.run(cells, [], True)
    labeling = [0] * n
    for i, v in enumerate(s.best_order):
        labeling[v] = i
    return labeling, s.aut_order, _orbit_roots(n, s.gens)


def relabel_adjacency(adj: tuple[int, ...], labeling: list[int]) -> tuple[int, ...]:
    out = [0] * len(adj)
    for v, row in enumerate(adj):
        r = 0
        for w in iter_bits(row):
            r |= 1 << labeling[w]
        out[labeling[v]] = r
    return tuple(out)


def canonical_form(g: Graph) -> CanonForm:
    labeling, aut_order, orbits = canonical_labeling(g.adj)
    code = to_graph6_bytes(g.relabel(labeling))
    return CanonForm(code, aut_order, tuple(labeling), tuple(orbits))


def canonical_code(g: Graph) -> bytes:
    return canonical_form(g).code


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees) != sorted(g2.degrees):
        return False
    return canonical_form(g1).code == canonical_form(g2).code
