from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest
from hypothesis import settings

from wienerlab import Graph
from wienerlab.canon import canonical_code

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph(len(index), [(index[u], index[v]) for u, v in h.edges])


def labeled_graphs(n: int):
    """Every labelled graph on ``n`` vertices (test oracle, n <= 6)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def brute_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees) != sorted(g2.degrees):
        return False
    target = set(g2.edges)
    for perm in itertools.permutations(range(g1.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in target for u, v in g1.edges):
            return True
    return False


def iso_classes(graphs) -> dict[bytes, Graph]:
    out: dict[bytes, Graph] = {}
    for g in graphs:
        out.setdefault(canonical_code(g), g)
    return out


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240501)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.write_sep("=", "acceptance criteria")
        for num in sorted(results):
            terminalreporter.write_line(results[num])
