from __future__ import annotations

import itertools
import math
import random

import networkx as nx
import pytest
from hypothesis import given

from strategies import graphs, permutations
from conftest import brute_isomorphic, from_nx, labeled_graphs, to_nx
from wienerlab import Graph, canonical_form, is_isomorphic, iterated_line_graph, line_graph
from wienerlab.canon import canonical_code
from wienerlab.errors import TooLargeError
from wienerlab.families import complete, complete_bipartite, cycle, habc, path, star
from wienerlab.linegraph import line_graph_size


def test_line_graph_examples():
    assert is_isomorphic(line_graph(star(4)), complete(3))
    assert is_isomorphic(line_graph(cycle(5)), cycle(5))
    assert line_graph(path(4)).m == 2
    assert line_graph(Graph(3)).n == 0


def test_iterated_examples():
    assert iterated_line_graph(path(4), 0) == path(4)
    assert is_isomorphic(iterated_line_graph(star(4), 2), complete(3))
    # each step shortens a path by one vertex: P5 -> P4 -> P3 -> P2 -> K1
    assert iterated_line_graph(path(5), 3) == path(2)
    assert iterated_line_graph(path(5), 4).n == 1
    assert iterated_line_graph(path(3), 2).n == 1
    assert iterated_line_graph(path(3), 3).n == 0
    assert line_graph(habc(128, 128, 128)).n == 387


@given(graphs())
def test_line_graph_matches_networkx(g):
    ours = line_graph(g)
    ref = nx.line_graph(to_nx(g))
    assert ours.n == ref.number_of_nodes() and ours.m == ref.number_of_edges()
    mapping = {e: i for i, e in enumerate(g.edges)}
    assert sorted(tuple(sorted((mapping[tuple(sorted(a))], mapping[tuple(sorted(b))]))) for a, b in ref.edges) == list(ours.edges)


@pytest.mark.parametrize("n", range(1, 8))
def test_line_graph_edge_count_identity(n):
    from wienerlab.enumeration import connected_graphs

    for g in connected_graphs(n):
        assert line_graph(g).m == sum(math.comb(d, 2) for d in g.degrees) == line_graph_size(g)


def test_canonical_form_random_relabelings():
    rnd = random.Random(7)
    c5 = cycle(5)
    ref = canonical_form(c5).code
    for _ in range(100):
        perm = list(range(5))
        rnd.shuffle(perm)
        assert canonical_form(c5.relabel(perm)).code == ref


@pytest.mark.parametrize(
    "g,order", [(complete(4), 24), (cycle(6), 12), (path(5), 2), (complete_bipartite(2, 3), 12), (star(6), 120)]
)
def test_automorphism_group_order(g, order):
    assert canonical_form(g).aut_order == order
    gm = nx.algorithms.isomorphism.GraphMatcher(to_nx(g), to_nx(g))
    assert sum(1 for _ in gm.isomorphisms_iter()) == order


@given(graphs(max_n=10).flatmap(lambda g: permutations(g.n).map(lambda p: (g, p))))
def test_canonical_form_is_relabeling_invariant(gp):
    g, perm = gp
    h = g.relabel(perm)
    assert canonical_code(g) == canonical_code(h)
    assert canonical_form(g).aut_order == canonical_form(h).aut_order


@pytest.mark.parametrize("n", range(1, 6))
def test_canonical_form_agrees_with_permutation_oracle(n):
    reps = {}
    for g in labeled_graphs(n):
        reps.setdefault(canonical_code(g), g)
    classes = list(reps.values())
    assert len(classes) == [1, 2, 4, 11, 34][n - 1]
    for a, b in itertools.combinations(classes, 2):
        assert not brute_isomorphic(a, b)


def test_canonical_form_pairs_n6_against_networkx():
    classes = {}
    for g in labeled_graphs(6):
        classes.setdefault(canonical_code(g), g)
    assert len(classes) == 156
    atlas = [from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() == 6]
    assert {canonical_code(g) for g in atlas} == set(classes)


def test_is_isomorphic_line_star():
    assert is_isomorphic(line_graph(star(4)), complete(3))
    assert brute_isomorphic(line_graph(star(4)), complete(3))
    assert not is_isomorphic(path(4), star(4))


def test_canon_size_cap():
    with pytest.raises(TooLargeError):
        canonical_form(path(33))
