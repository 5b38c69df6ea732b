from __future__ import annotations

import math
from collections import Counter

import networkx as nx
import numpy as np
import pytest

from conftest import from_nx, iso_classes, labeled_graphs
from wienerlab import Graph, canonical_form, is_isomorphic, wiener, wiener_digraph
from wienerlab.canon import canonical_code
from wienerlab.enumeration import (
    EnumFilter,
    connected_graphs,
    diam4_partitions_upto,
    diam4_trees_upto,
    diam4_wiener,
    has_path_factor,
    iter_connected_graphs,
    labeled_connected_count,
    orientation,
    orientation_table,
    orientations,
    path_factor_bruteforce,
    regular_graphs,
    tree_count,
    trees,
)
from wienerlab.errors import TooLargeError
from wienerlab.families import complete, complete_bipartite, cycle, path, star
from wienerlab.structure import diameter

TREES = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106, 11: 235, 12: 551}
CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


@pytest.mark.parametrize("n", sorted(TREES))
def test_tree_counts(n):
    found = list(trees(n))
    assert len(found) == TREES[n] == tree_count(n)
    assert all(t.is_tree() and t.n == n for t in found)
    assert len({canonical_code(t) for t in found}) == len(found)


def test_tree_examples():
    four = list(trees(4))
    assert {wiener(t) for t in four} == {9, 10}
    assert any(is_isomorphic(t, path(4)) for t in four) and any(is_isomorphic(t, star(4)) for t in four)


@pytest.mark.parametrize("n", range(1, 11))
def test_cayley_count(n):
    total = sum(math.factorial(n) // canonical_form(t).aut_order for t in trees(n))
    assert total == n ** (n - 2) if n > 1 else total == 1


@pytest.mark.parametrize("n", range(2, 9))
def test_trees_match_networkx(n):
    ref = {canonical_code(from_nx(t)) for t in nx.nonisomorphic_trees(n)}
    assert {canonical_code(t) for t in trees(n)} == ref


def test_tree_cap():
    with pytest.raises(TooLargeError):
        list(trees(23))


@pytest.mark.parametrize("n", range(1, 7))
def test_connected_against_labeled_brute_force(n):
    brute = iso_classes(g for g in labeled_graphs(n) if g.is_connected())
    ours = connected_graphs(n)
    assert len(ours) == len(brute) == CONNECTED[n]
    assert {canonical_code(g) for g in ours} == set(brute)


def test_connected_seven_and_labeled_oracle():
    ours = connected_graphs(7)
    assert len(ours) == 853
    labeled = sum(math.factorial(7) // canonical_form(g).aut_order for g in ours)
    assert labeled == labeled_connected_count(7) == 1866256
    assert len({canonical_code(g) for g in ours}) == 853


def test_deterministic_and_partitioned():
    whole = [g for g in iter_connected_graphs(6)]
    again = [g for g in iter_connected_graphs(6)]
    assert whole == again
    parts = [g for i in range(3) for g in iter_connected_graphs(6, part=(i, 3))]
    assert sorted(canonical_code(g) for g in parts) == sorted(canonical_code(g) for g in whole)
    assert connected_graphs(6) == connected_graphs(6, threads=2)


@pytest.mark.parametrize(
    "filt",
    [
        EnumFilter(m=7),
        EnumFilter(regular=3),
        EnumFilter(bipartite=True),
        EnumFilter(bipartition=(4, 3)),
        EnumFilter(eulerian=True),
        EnumFilter(diameter=3),
        EnumFilter(radius=2),
        EnumFilter(cyclomatic=2),
        EnumFilter(max_degree=3, min_degree=2),
        EnumFilter(perfect_matching=True),
        EnumFilter(all_odd=True),
    ],
)
def test_filter_soundness(filt):
    for n in (6, 7):
        post = [g for g in connected_graphs(n) if filt.accepts(g)]
        assert sorted(canonical_code(g) for g in connected_graphs(n, filt)) == sorted(canonical_code(g) for g in post)


def test_examples_from_brief():
    assert len(connected_graphs(4)) == 6
    cubic6 = connected_graphs(6, EnumFilter(regular=3))
    assert len(cubic6) == 2
    assert any(is_isomorphic(g, complete_bipartite(3, 3)) for g in cubic6)


@pytest.mark.parametrize("n,r,count", [(4, 3, 1), (5, 2, 1), (6, 3, 2), (8, 3, 5), (10, 3, 19), (7, 4, 2), (8, 4, 6)])
def test_regular_counts(n, r, count):
    assert len(regular_graphs(n, r)) == count


def test_cubic_at_eight_cross_check():
    capped = [g for g in connected_graphs(8, EnumFilter(m=12, max_degree=3))]
    assert len(capped) == len(regular_graphs(8, 3)) == 5


def test_enumeration_caps():
    with pytest.raises(TooLargeError):
        connected_graphs(10)
    assert len(connected_graphs(10, EnumFilter(cyclomatic=0))) == 106


def test_orientation_examples():
    assert len(list(orientations(path(3)))) == 4
    assert len(list(orientations(cycle(3)))) == 8
    assert len(list(orientations(cycle(3), "strong"))) == 2
    assert len(list(orientations(cycle(3), "acyclic"))) == 6
    assert len(list(orientations(Graph(1)))) == 1


def test_orientation_mask_convention():
    d = orientation(path(3), 0b10)
    assert d.arcs == ((0, 1), (2, 1))


@pytest.mark.parametrize("g", [cycle(5), complete(4), complete_bipartite(2, 3), path(5)])
def test_orientation_table_matches_scalar(g):
    masks = np.arange(1 << g.m)
    w, acyc, strong = orientation_table(g, masks)
    for mask in range(1 << g.m):
        d = orientation(g, mask)
        assert w[mask] == wiener_digraph(d)
        assert acyc[mask] == d.is_acyclic()
        assert strong[mask] == d.is_strongly_connected()


@pytest.mark.parametrize("n", range(2, 11))
def test_path_factor_detector(n):
    for t in trees(n):
        for r in (2, 3, 4):
            assert has_path_factor(t, r) == path_factor_bruteforce(t, r)


def test_diam4_closed_form_matches_bfs():
    seen = 0
    for g, w in diam4_trees_upto(600):
        assert g.is_tree() and diameter(g) <= 4
        assert w == wiener(g)
        seen += 1
    assert seen > 1000


def test_diam4_classes_are_distinct_and_complete():
    limit = 200
    ours = Counter(canonical_code(g) for g, _ in diam4_trees_upto(limit))
    assert max(ours.values()) == 1
    ref = set()
    for n in range(2, 16):
        for t in trees(n):
            if diameter(t) <= 4 and wiener(t) <= limit:
                ref.add(canonical_code(t))
    assert set(ours) == ref


def test_diam4_small_examples():
    values = {w for _, w in diam4_partitions_upto(50)}
    assert 20 in values and diam4_wiener([2, 2]) == 20
    assert all((n - 1) ** 2 in values for n in range(2, 8))
    brute = {wiener(t) for n in range(2, 9) for t in trees(n) if diameter(t) <= 4 and wiener(t) <= 50}
    assert values == brute
