from __future__ import annotations

import json
import math
import random

import pytest

from wienerlab import is_isomorphic, wiener, wiener_digraph
from wienerlab.enumeration import connected_graphs, diam4_partitions_upto, orientation, orientations, trees
from wienerlab.errors import BadParamsError, TooLargeError
from wienerlab.families import complete_bipartite, cycle, path, theta
from wienerlab.search import (
    CONJECTURE_IDS,
    ConjVerdict,
    InverseMiss,
    inverse_wiener,
    iter_conjecture_units,
    missing_diam4,
    orientation_extremes,
    run_conjecture,
    wiener_spectrum,
)
from wienerlab.structure import diameter


def tree_values_upto(w_max: int) -> set[int]:
    out = set()
    n = 2
    while (n - 1) ** 2 <= w_max:
        out |= {wiener(t) for t in trees(n)}
        n += 1
    return out


def test_inverse_examples():
    t = inverse_wiener(10)
    assert t.is_tree() and wiener(t) == 10
    big = inverse_wiener(1000)
    assert big.is_tree() and wiener(big) == 1000
    assert inverse_wiener(2) == InverseMiss.NOT_REPRESENTABLE
    with pytest.raises(BadParamsError):
        inverse_wiener(0)


def test_inverse_certificates_against_full_sweep():
    reachable = tree_values_upto(150)
    for w in range(1, 151):
        res = inverse_wiener(w)
        if w in reachable:
            assert not isinstance(res, InverseMiss) and wiener(res) == w
        else:
            assert res == InverseMiss.NOT_REPRESENTABLE


@pytest.mark.parametrize("w", random.Random(5).sample(range(1000, 20001), 40))
def test_inverse_output_is_exact(w):
    t = inverse_wiener(w)
    assert t.is_tree() and diameter(t) <= 4 and wiener(t) == w


def test_missing_small_limits():
    assert missing_diam4(1) == []
    brute = {w for _, w in diam4_partitions_upto(400)}
    assert missing_diam4(400) == [w for w in range(1, 401) if w not in brute]


def test_missing_monotone():
    a, b = set(missing_diam4(3000)), set(missing_diam4(1500))
    assert {w for w in a if w <= 1500} == b


def test_missing_above_one_thousand_is_empty():
    assert [w for w in missing_diam4(10**4) if w >= 1000] == []


def test_missing_cap():
    with pytest.raises(TooLargeError):
        missing_diam4(10**6 + 1)


def test_spectrum_examples():
    assert wiener_spectrum(4, "trees").values == (9, 10)
    g4 = wiener_spectrum(4, "graphs")
    assert (g4.min, g4.max) == (6, 10)
    t5 = wiener_spectrum(5, "trees")
    assert (t5.min, t5.max) == (16, 20)


@pytest.mark.parametrize("n", range(2, 13))
def test_tree_spectrum_bounds(n):
    rep = wiener_spectrum(n, "trees")
    assert rep.min == (n - 1) ** 2 and rep.max == math.comb(n + 1, 3)
    assert set(rep.values) == {wiener(t) for t in trees(n)}
    start, length = rep.run_start, rep.run_length
    assert all(v in rep.values for v in range(start, start + length))


@pytest.mark.parametrize("n", range(2, 8))
def test_graph_spectrum_bounds(n):
    rep = wiener_spectrum(n, "graphs")
    assert rep.min == math.comb(n, 2) and rep.max == math.comb(n + 1, 3)
    assert set(rep.values) == {wiener(g) for g in connected_graphs(n)}


def test_spectrum_caps():
    with pytest.raises(TooLargeError):
        wiener_spectrum(19, "trees")
    with pytest.raises(TooLargeError):
        wiener_spectrum(10, "graphs")


def _brute_extremes(g, mode):
    vals = [(wiener_digraph(d), d) for d in orientations(g, mode)]
    return max(v for v, _ in vals), min(v for v, _ in vals)


@pytest.mark.parametrize("g", [path(3), cycle(5), complete_bipartite(2, 3), theta(2, 1, 1), cycle(4).add_edge(0, 2)])
@pytest.mark.parametrize("mode", ["all", "acyclic", "strong"])
def test_orientation_extremes_against_brute_force(g, mode):
    if mode == "strong" and g.is_tree():
        rep = orientation_extremes(g, mode)
        assert rep.count == 0
        return
    rep = orientation_extremes(g, mode)
    assert (rep.w_max, rep.w_min) == _brute_extremes(g, mode)
    assert wiener_digraph(orientation(g, rep.max_mask)) == rep.w_max
    assert wiener_digraph(orientation(g, rep.min_mask)) == rep.w_min


def test_orientation_examples():
    assert orientation_extremes(path(3)).w_max == 4
    for g in (complete_bipartite(2, 3), cycle(6), path(5)):
        assert orientation_extremes(g).w_min == g.m
    # small thetas still peak at a strong orientation
    t = theta(3, 2, 1)
    assert orientation_extremes(t).w_max == orientation_extremes(t, "strong").w_max == 193


def test_theta_max_not_strong():
    # smallest Theta_{a,b,1} whose maximum needs a non-strong orientation
    t = theta(7, 7, 1)
    full, strong = orientation_extremes(t), orientation_extremes(t, "strong")
    assert (full.w_max, strong.w_max) == (1992, 1976)
    assert not orientation(t, full.max_mask).is_strongly_connected()


def test_orientation_spot_check_random_masks():
    rnd = random.Random(2)
    g = complete_bipartite(3, 3)
    rep = orientation_extremes(g)
    for _ in range(100):
        w = wiener_digraph(orientation(g, rnd.randrange(1 << g.m)))
        assert rep.w_min <= w <= rep.w_max


def test_orientation_report_json():
    doc = orientation_extremes(cycle(4)).to_dict()
    json.dumps(doc)
    assert doc["mode"] == "all"


# -- conjecture harness --------------------------------------------------------


def test_registry_ids():
    assert len(CONJECTURE_IDS) == 17


def test_unknown_parameter_rejected():
    with pytest.raises(BadParamsError):
        run_conjecture("cubic_max", {"bogus": 1})
    with pytest.raises(BadParamsError):
        run_conjecture("nope")


def test_cubic_max_ten():
    rep = run_conjecture("cubic_max", {"n": 10})
    assert rep.verdict == ConjVerdict.SUPPORTED
    unit = rep.unit("n=10")
    assert unit["graphs"] == 19
    from wienerlab.families import cubic_chain
    from wienerlab.io import from_graph6

    assert is_isomorphic(from_graph6(rep.witnesses[0]["graph6"]), cubic_chain(10))


def test_eulerian_seven():
    rep = run_conjecture("eulerian_extremes", {"n": 7})
    unit = rep.unit("n=7")
    assert unit["max_W"] == 42 and unit["cycle_is_unique_max"]
    assert rep.verdict in (ConjVerdict.SUPPORTED, ConjVerdict.INCONCLUSIVE)


@pytest.mark.parametrize(
    "cid,params",
    [
        ("regular_diameter", {"n_max": 8}),
        ("delavina_waller", {"d": 3}),
        ("radius_min", {"n_max": 7}),
        ("ratio_min_star", {"n_max": 6}),
        ("connectivity_min", {"n_max": 6}),
        ("matching_max_tree", {"n_max": 6}),
        ("degree_seq_caterpillar", {"n_max": 9}),
        ("bipartition_tree", {"n_max": 9}),
        ("orientation_acyclic_min", {"max_m": 7}),
        ("theta_cycle_max", {"total_max": 6}),
        ("iterated_cyclic", {"n_max": 6}),
    ],
)
def test_small_sweeps_supported(cid, params):
    rep = run_conjecture(cid, params)
    assert rep.verdict == ConjVerdict.SUPPORTED, rep.to_json()[:500]
    json.loads(rep.to_json())


def test_wg_interval_is_inconclusive():
    rep = run_conjecture("wg_interval", {"n_max": 6})
    assert rep.verdict == ConjVerdict.INCONCLUSIVE
    assert rep.unit("n=6")["min"] == 15


def test_witness_tie_break_deterministic():
    a = run_conjecture("ratio_min_star", {"n_max": 6}).to_json()
    b = run_conjecture("ratio_min_star", {"n_max": 6}).to_json()
    assert a == b


def test_checkpoint_resume(tmp_path):
    ck = tmp_path / "ck.jsonl"
    first = run_conjecture("bipartition_tree", {"n_max": 7}, checkpoint=ck)
    lines = ck.read_text().splitlines()
    assert len(lines) == len(first.units)
    # a torn trailing line is ignored and nothing is recomputed
    with open(ck, "a") as fh:
        fh.write('{"conjecture": "bipartition_tree", "par')
    again = run_conjecture("bipartition_tree", {"n_max": 7}, checkpoint=ck)
    assert again.to_json() == first.to_json()
    assert len(ck.read_text().splitlines()) == len(lines) + 1
    # other parameters do not reuse the records
    units = list(iter_conjecture_units("bipartition_tree", {"n_max": 6}, ck))
    assert len(units) < len(first.units)


def test_sweep_caps():
    with pytest.raises(TooLargeError):
        run_conjecture("radius_min", {"n_max": 10})
