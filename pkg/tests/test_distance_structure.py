from __future__ import annotations

import itertools
import math

import networkx as nx
import pytest
from hypothesis import given

from strategies import connected_graphs, digraphs, graphs
from conftest import to_nx
from wienerlab import UNREACHABLE, Graph, bfs_apsp
from wienerlab.errors import DisconnectedError, TooLargeError
from wienerlab.families import complete, cycle, path, star
from wienerlab.structure import (
    ACYCLIC,
    blocks,
    clique_counts,
    connectivity,
    edge_connectivity,
    eccentricities,
    girth,
    matching_number,
    vertex_connectivity,
)


def test_apsp_examples():
    d = bfs_apsp(path(3))
    assert d[0, 2] == 2 and d[0, 1] == 1
    assert bfs_apsp(Graph(2))[0, 1] == UNREACHABLE
    c = bfs_apsp(cycle(4))
    assert c[0, 2] == 2 and all(c[u, v] == 1 for u, v in cycle(4).edges)
    assert bfs_apsp(Graph(0)).n == 0


@given(graphs())
def test_apsp_matches_networkx(g):
    d = bfs_apsp(g)
    ref = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    for u in range(g.n):
        for v in range(g.n):
            assert d[u, v] == ref[u].get(v, UNREACHABLE)
    assert d.symmetric
    assert (d.entries == d.entries.T).all()


@given(digraphs())
def test_digraph_apsp_triangle_inequality(dg):
    d = bfs_apsp(dg)
    h = nx.DiGraph(list(dg.arcs))
    h.add_nodes_from(range(dg.n))
    ref = dict(nx.all_pairs_shortest_path_length(h))
    for u, v, w in itertools.product(range(dg.n), repeat=3):
        assert d[u, v] == ref[u].get(v, UNREACHABLE)
        if d.reachable(u, v) and d.reachable(v, w):
            assert d[u, w] <= d[u, v] + d[v, w]


def test_girth_examples():
    assert girth(complete(4)) == 3
    assert girth(cycle(7)) == 7
    assert girth(path(9)) == ACYCLIC


@given(graphs())
def test_girth_matches_networkx(g):
    ref = nx.girth(to_nx(g))
    assert girth(g) == (ACYCLIC if math.isinf(ref) else ref)


@pytest.mark.parametrize("g,diam,rad", [(path(5), 4, 2), (cycle(6), 3, 3), (complete(7), 1, 1)])
def test_eccentricity_examples(g, diam, rad):
    e = eccentricities(g)
    assert (e.diameter, e.radius) == (diam, rad)


def test_eccentricity_disconnected():
    with pytest.raises(DisconnectedError):
        eccentricities(Graph(2))


@given(connected_graphs())
def test_eccentricity_matches_networkx(g):
    e = eccentricities(g)
    h = to_nx(g)
    assert list(e.ecc) == [nx.eccentricity(h, v) for v in range(g.n)]
    assert e.radius <= e.diameter <= 2 * e.radius


def test_block_examples():
    assert all(b.complete and len(b.vertices) == 2 for b in blocks(path(5)))
    (c4,) = blocks(cycle(4))
    assert not c4.complete
    bowtie = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert sorted(sorted(b.vertices) for b in blocks(bowtie)) == [[0, 1, 2], [2, 3, 4]]
    assert all(b.complete for b in blocks(bowtie))


@given(connected_graphs(min_n=2))
def test_blocks_match_networkx_and_partition_edges(g):
    ours = sorted(sorted(b.vertices) for b in blocks(g))
    ref = sorted(sorted(c) for c in nx.biconnected_components(to_nx(g)))
    assert ours == ref
    covered = []
    for b in blocks(g):
        vs = set(b.vertices)
        covered += [e for e in g.edges if e[0] in vs and e[1] in vs]
    assert sorted(covered) == list(g.edges)


def test_connectivity_examples():
    assert vertex_connectivity(cycle(8)) == 2
    assert vertex_connectivity(complete(5)) == 4
    assert vertex_connectivity(path(4)) == 1


def test_connectivity_size_cap():
    with pytest.raises(TooLargeError):
        connectivity(cycle(17))


@given(connected_graphs(min_n=2, max_n=8))
def test_connectivity_matches_networkx(g):
    h = to_nx(g)
    k, lam = connectivity(g)
    assert k == nx.node_connectivity(h)
    assert lam == nx.edge_connectivity(h) == edge_connectivity(g)
    assert k <= lam <= g.min_degree


@pytest.mark.parametrize("g,counts", [(complete(4), (4, 1)), (cycle(5), (0, 0)), (complete(5), (10, 5))])
def test_clique_count_examples(g, counts):
    assert clique_counts(g) == counts


@given(graphs())
def test_clique_counts_match_networkx(g):
    cl = [c for c in nx.enumerate_all_cliques(to_nx(g)) if len(c) in (3, 4)]
    assert clique_counts(g) == (sum(len(c) == 3 for c in cl), sum(len(c) == 4 for c in cl))


@pytest.mark.parametrize("g,nu", [(path(4), 2), (star(5), 1), (cycle(6), 3)])
def test_matching_examples(g, nu):
    assert matching_number(g) == nu


@given(graphs(max_n=10))
def test_matching_matches_networkx(g):
    assert matching_number(g) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


def test_matching_size_cap():
    with pytest.raises(TooLargeError):
        matching_number(path(21))
