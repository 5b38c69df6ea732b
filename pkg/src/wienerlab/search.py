"""Searches rather than checks: the inverse Wiener problem, Wiener
spectra, extremal orientations and the conjecture sweeps.

Every sweep is exhaustive over the finite domain it names.  Conjecture
sweeps are split into units (one per order, parameter pair, ...); each
unit yields a JSON-ready dict, so a sweep can be checkpointed to a
JSON-lines file and resumed by replaying the finished units.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Iterator

import numpy as np

from .canon import canonical_code, is_isomorphic
from .enumeration import (
    NO_FILTER,
    ORIENT_MAX_M,
    EnumFilter,
    connected_graphs,
    diam4_tree,
    levels_to_tree,
    levels_wiener,
    orientation,
    orientation_table,
    regular_graphs,
    tree_level_sequences,
    trees,
)
from .errors import BadParamsError, TooLargeError
from .families import (
    bipartition_tree_max,
    bipartition_tree_min,
    connectivity_min,
    cubic_chain,
    cycle,
    eulerian_c3,
    is_caterpillar,
    radius_gadget,
    star,
    theta,
)
from .graph import Digraph, Graph
from .invariants import wiener
from .io import to_arc_list
from .linegraph import iterated_line_graph, line_graph
from .structure import diameter, girth, matching_number, radius, vertex_connectivity

# -- inverse Wiener problem ---------------------------------------------------

CERTIFY_MAX_W = 400
MISSING_MAX_LIMIT = 10**6


class InverseMiss(str, Enum):
    NOT_REPRESENTABLE = "NOT_REPRESENTABLE"
    UNKNOWN = "UNKNOWN"


def _gain(p: int, big_n: int) -> int:
    return (p - 1) * (big_n - p)


def _gain_root(big_n: int, target: int, hi: int) -> int | None:
    """Some ``q`` in ``[2, hi]`` with ``(q-1)(N-q) = target``."""
    disc = (big_n + 1) ** 2 - 4 * (big_n + target)
    if disc < 0:
        return None
    s = math.isqrt(disc)
    if s * s != disc:
        return None
    for q2 in (big_n + 1 - s, big_n + 1 + s):
        if q2 % 2 == 0 and 2 <= q2 // 2 <= hi:
            return q2 // 2
    return None


def _min_weight_parts(big_n: int, target: int) -> list[int] | None:
    """Parts ``p >= 2`` with gains summing to ``target`` and the least
    possible total size, provided that size is at most ``N``."""
    ps = [p for p in range(2, big_n + 1) if 0 < _gain(p, big_n) <= target]
    if not ps:
        return None
    gains = np.array([_gain(p, big_n) for p in ps], dtype=np.int64)
    sizes = np.array(ps, dtype=np.int64)
    inf = np.iinfo(np.int64).max // 4
    best = np.full(target + 1, inf, dtype=np.int64)
    choice = np.full(target + 1, -1, dtype=np.int64)
    best[0] = 0
    for c in range(1, target + 1):
        ok = gains <= c
        if not ok.any():
            continue
        cand = best[c - gains[ok]] + sizes[ok]
        k = int(np.argmin(cand))
        if cand[k] < best[c]:
            best[c] = cand[k]
            choice[c] = np.flatnonzero(ok)[k]
    if best[target] > big_n:
        return None
    parts, c = [], target
    while c:
        k = int(choice[c])
        parts.append(ps[k])
        c -= int(gains[k])
    return parts


def _few_parts(big_n: int, t: int, extra: int, lo: int, room: int) -> list[int] | None:
    """Parts ``lo <= p_1 <= ... <= p_k <= room`` (``k <= extra + 1``,
    total size at most ``room``) whose gains sum to ``t``; the last part
    comes from the quadratic."""
    q = _gain_root(big_n, t, room)
    if q is not None and q >= lo:
        return [q]
    if extra == 0:
        return None
    # every later part has at least the gain of p, since p <= q <= N - p
    for p in range(lo, room // 2 + 1):
        gp = _gain(p, big_n)
        if 2 * gp > t:
            break
        rest = _few_parts(big_n, t - gp, extra - 1, p, room - p)
        if rest is not None:
            return [p] + rest
    return None


def _fill(big_n: int, big_parts: list[int]) -> tuple[int, ...]:
    return tuple(sorted(big_parts, reverse=True)) + (1,) * (big_n - sum(big_parts))


def diam4_parts(w: int) -> tuple[int, ...] | None:
    """Child sizes of a tree of diameter at most 4 with Wiener index
    ``w`` (see :func:`diam4_tree`), or ``None`` if there is none.

    One or two non-leaf children are tried first by solving the quadratic
    gain equation; the exact fallback is a minimum-size knapsack per ``N``.
    """
    if w < 1:
        return None
    top = math.isqrt(w)
    for extra in (1, 2):
        for big_n in range(top, 0, -1):
            t = w - big_n * big_n
            if t == 0:
                return (1,) * big_n
            found = _few_parts(big_n, t, extra, 2, big_n)
            if found is not None:
                return _fill(big_n, found)
    for big_n in range(top, 0, -1):
        parts = _min_weight_parts(big_n, w - big_n * big_n)
        if parts is not None:
            return _fill(big_n, parts)
    return None


def _tree_orders(w: int) -> range:
    """Orders ``n`` with ``(n-1)^2 <= w <= C(n+1, 3)``."""
    lo = 2
    while math.comb(lo + 1, 3) < w:
        lo += 1
    return range(lo, math.isqrt(w) + 2)


def inverse_wiener(w: int) -> Graph | InverseMiss:
    """A tree with Wiener index ``w``.

    Diameter-4 trees are searched exactly.  On a miss, ``w <= 400`` is
    settled by running through every tree of every feasible order;
    larger misses are reported as ``UNKNOWN``.
    """
    if w < 1:
        raise BadParamsError("inverse Wiener needs w >= 1")
    parts = diam4_parts(w)
    if parts is not None:
        return diam4_tree(parts)
    if w > CERTIFY_MAX_W:
        return InverseMiss.UNKNOWN
    for n in _tree_orders(w):
        for levels in tree_level_sequences(n):
            if levels_wiener(levels) == w:
                return levels_to_tree(levels)
    return InverseMiss.NOT_REPRESENTABLE


def _covered(limit: int) -> np.ndarray:
    """Exact reachability of ``[0, limit]`` by diameter-4 trees.

    For each ``N`` a bitset knapsack over child sizes ``u <= N`` collects
    the reachable gains.  Two reductions keep it small: children of size
    ``p`` and ``N + 1 - p`` have equal gain, so only ``p <= (N+1)/2`` is
    needed; and gain per vertex is at most ``N + 1 - 2 sqrt(N)``, which
    caps the useful gain range.
    """
    covered = np.zeros(limit + 1, dtype=bool)
    big_n = 1
    while big_n * big_n <= limit:
        cap = big_n * (big_n + 1 - 2 * math.isqrt(big_n))
        budget = min(limit - big_n * big_n, max(cap + big_n, 0))
        mask = (1 << (budget + 1)) - 1
        reach = [0] * (big_n + 1)
        reach[0] = 1
        for p in range(2, (big_n + 1) // 2 + 1):
            g = _gain(p, big_n)
            if g > budget:
                break
            for u in range(p, big_n + 1):
                src = reach[u - p]
                if src:
                    reach[u] |= (src << g) & mask
        acc = 0
        for r in reach:
            acc |= r
        bits = np.unpackbits(
            np.frombuffer(acc.to_bytes((budget + 8) // 8, "little"), dtype=np.uint8), bitorder="little"
        )[: budget + 1].astype(bool)
        covered[big_n * big_n:big_n * big_n + budget + 1] |= bits
        big_n += 1
    return covered


def missing_diam4(limit: int) -> list[int]:
    """Integers in ``[1, limit]`` that are the Wiener index of no tree of
    diameter at most 4 (exact; every such tree with ``W <= limit`` has
    ``n - 1 <= sqrt(limit)`` and is covered by the knapsack)."""
    if limit > MISSING_MAX_LIMIT:
        raise TooLargeError(f"missing_diam4 supports limit <= {MISSING_MAX_LIMIT}")
    if limit < 1:
        return []
    covered = _covered(limit)
    return [int(w) for w in np.flatnonzero(~covered[1:]) + 1]


# -- Wiener spectra -----------------------------------------------------------

SPECTRUM_TREE_MAX_N = 18
SPECTRUM_GRAPH_MAX_N = 9


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    graph_class: str
    values: tuple[int, ...]
    run_start: int
    run_length: int

    @property
    def min(self) -> int:
        return self.values[0]

    @property
    def max(self) -> int:
        return self.values[-1]

    @property
    def cardinality(self) -> int:
        return len(self.values)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "class": self.graph_class,
            "min": self.min,
            "max": self.max,
            "cardinality": self.cardinality,
            "largest_run": {"start": self.run_start, "length": self.run_length},
            "values": list(self.values),
        }


def _longest_run(values: list[int]) -> tuple[int, int]:
    best_start, best_len = values[0], 1
    start, length = values[0], 1
    for prev, cur in zip(values, values[1:]):
        if cur == prev + 1:
            length += 1
        else:
            start, length = cur, 1
        if length > best_len:
            best_start, best_len = start, length
    return best_start, best_len


def wiener_spectrum(n: int, graph_class: str = "trees", threads: int = 1) -> SpectrumReport:
    """All Wiener indices of trees (``n <= 18``) or connected graphs
    (``n <= 9``) on ``n`` vertices."""
    if graph_class == "trees":
        if not 1 <= n <= SPECTRUM_TREE_MAX_N:
            raise TooLargeError(f"tree spectrum needs 1 <= n <= {SPECTRUM_TREE_MAX_N}")
        found = {levels_wiener(lv) for lv in tree_level_sequences(n)}
    elif graph_class == "graphs":
        if not 1 <= n <= SPECTRUM_GRAPH_MAX_N:
            raise TooLargeError(f"graph spectrum needs 1 <= n <= {SPECTRUM_GRAPH_MAX_N}")
        found = {wiener(g) for g in connected_graphs(n, NO_FILTER, threads)}
    else:
        raise BadParamsError(f"unknown graph class {graph_class!r}")
    values = sorted(found)
    start, length = _longest_run(values)
    return SpectrumReport(n, graph_class, tuple(values), start, length)


# -- orientations -------------------------------------------------------------

ORIENT_CHUNK = 1 << 16


@dataclass(frozen=True)
class OrientationExtremes:
    mode: str
    count: int
    w_max: int | None
    w_min: int | None
    max_mask: int | None
    min_mask: int | None
    max_witness: Digraph | None
    min_witness: Digraph | None

    def to_dict(self) -> dict[str, Any]:
        arcs = lambda d: None if d is None else to_arc_list(d).split("\n")[1:-1]  # noqa: E731
        return {
            "mode": self.mode,
            "orientations": self.count,
            "W_max": self.w_max,
            "W_min": self.w_min,
            "max_mask": self.max_mask,
            "min_mask": self.min_mask,
            "max_witness_arcs": arcs(self.max_witness),
            "min_witness_arcs": arcs(self.min_witness),
        }


def _orientation_scan(g: Graph, masks: np.ndarray, mode: str):
    """``(count, w_max, max_mask, w_min, min_mask)`` over the masks of
    the given mode, ties to the smallest mask."""
    count, best_max, best_min = 0, None, None
    for lo in range(0, len(masks), ORIENT_CHUNK):
        chunk = masks[lo:lo + ORIENT_CHUNK]
        w, acyc, strong = orientation_table(g, chunk)
        keep = {"all": slice(None), "acyclic": acyc, "strong": strong}[mode]
        w, chunk = w[keep], chunk[keep]
        if not len(w):
            continue
        count += len(w)
        i, j = int(np.argmax(w)), int(np.argmin(w))
        if best_max is None or w[i] > best_max[0]:
            best_max = (int(w[i]), int(chunk[i]))
        if best_min is None or w[j] < best_min[0]:
            best_min = (int(w[j]), int(chunk[j]))
    return count, best_max, best_min


def orientation_extremes(g: Graph, mode: str = "all") -> OrientationExtremes:
    """Largest and smallest W over all orientations of ``g`` in ``mode``
    (``all``, ``acyclic`` or ``strong``).  An empty class gives ``None``
    values, e.g. strong orientations of a graph with a bridge."""
    if mode not in ("all", "acyclic", "strong"):
        raise BadParamsError(f"unknown orientation mode {mode!r}")
    if g.m > ORIENT_MAX_M:
        raise TooLargeError(f"orientation search needs m <= {ORIENT_MAX_M}")
    masks = np.arange(1 << g.m, dtype=np.int64)
    count, best_max, best_min = _orientation_scan(g, masks, mode)
    if not count:
        return OrientationExtremes(mode, 0, None, None, None, None, None, None)
    return OrientationExtremes(
        mode,
        count,
        best_max[0],
        best_min[0],
        best_max[1],
        best_min[1],
        orientation(g, best_max[1]),
        orientation(g, best_min[1]),
    )


# -- conjecture harness -------------------------------------------------------


class ConjVerdict(str, Enum):
    SUPPORTED = "SUPPORTED"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"
    INCONCLUSIVE = "INCONCLUSIVE"


_STATUS_RANK = {"supported": 0, "inconclusive": 1, "counterexample": 2}


@dataclass
class ConjReport:
    conjecture: str
    params: dict[str, Any]
    verdict: ConjVerdict
    witnesses: list[dict[str, Any]]
    units: list[dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "conjecture": self.conjecture,
            "params": self.params,
            "verdict": self.verdict.value,
            "witnesses": self.witnesses,
            "units": self.units,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def unit(self, key: str) -> dict[str, Any]:
        for u in self.units:
            if u["key"] == key:
                return u
        raise KeyError(key)


def _value(v):
    return f"{v.numerator}/{v.denominator}" if isinstance(v, Fraction) else v


def _witness(label: str, g: Graph, value, **extra) -> dict[str, Any]:
    doc = {"label": label, "graph6": canonical_code(g).decode("ascii"), "value": _value(value)}
    doc.update(extra)
    return doc


def _best(scored: list[tuple[Any, Graph]], largest: bool, k: int = 3) -> list[tuple[Any, Graph]]:
    """The ``k`` best ``(value, graph)`` pairs; value ties go to the
    lexicographically least canonical code."""
    if not scored:
        return []
    ordered = sorted((v for v, _ in scored), reverse=largest)
    cut = ordered[min(k, len(ordered)) - 1]
    pool = [(v, g) for v, g in scored if (v >= cut if largest else v <= cut)]
    pool.sort(key=lambda vg: ((-vg[0] if largest else vg[0]), canonical_code(vg[1])))
    return pool[:k]


def _extremes(scored: list[tuple[Any, Graph]], largest: bool) -> tuple[Any, list[Graph]]:
    best = max(v for v, _ in scored) if largest else min(v for v, _ in scored)
    return best, [g for v, g in scored if v == best]


def _unit(key: str, status: str, witnesses: list[dict], **data) -> dict[str, Any]:
    return {"key": key, "status": status, "witnesses": witnesses, **data}


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.is_connected() and all(d == 2 for d in g.degrees)


def _graphs(n: int, threads: int) -> list[Graph]:
    return connected_graphs(n, NO_FILTER, threads)


# Each builder returns the sweep as ``[(key, thunk)]``; a thunk computes one
# unit.  ``p`` carries the effective parameters, including ``threads``.


def _cubic_max(p):
    def unit(n):
        scored = [(wiener(g), g) for g in regular_graphs(n, 3, p["threads"])]
        chain = cubic_chain(n)
        wc = wiener(chain)
        best, argmax = _extremes(scored, True)
        chain_hit = any(is_isomorphic(chain, g) for g in argmax)
        status = "counterexample" if best > wc else "supported"
        wit = [_witness(f"max n={n}", g, v) for v, g in _best(scored, True)]
        return _unit(
            f"n={n}", status, wit, graphs=len(scored), max_W=best, chain_W=wc,
            argmax_count=len(argmax), chain_is_argmax=chain_hit,
        )

    return [(f"n={n}", (lambda n=n: unit(n))) for n in p["n"]]


def _regular_diameter(p):
    def unit(r, n):
        gs = regular_graphs(n, r, p["threads"])
        scored = [(wiener(g), g) for g in gs]
        diam = {g: diameter(g) for g in gs}
        dmax, dmin = max(diam.values()), min(diam.values())
        wmax, argmax = _extremes(scored, True)
        wmin, argmin = _extremes(scored, False)
        ok_max = any(diam[g] == dmax for g in argmax)
        ok_min = any(diam[g] == dmin for g in argmin)
        wit = [_witness(f"max r={r} n={n}", g, v, diameter=diam[g]) for v, g in _best(scored, True)]
        wit += [_witness(f"min r={r} n={n}", g, v, diameter=diam[g]) for v, g in _best(scored, False)]
        return _unit(
            f"r={r},n={n}", "supported" if ok_max and ok_min else "counterexample", wit,
            graphs=len(gs), max_W=wmax, min_W=wmin, max_diameter=dmax, min_diameter=dmin,
            max_attained_at_max_diameter=ok_max, min_attained_at_min_diameter=ok_min,
        )

    out = []
    for r in p["r"]:
        for n in range(r + 1, p["n_max"] + 1):
            if (n * r) % 2 == 0:
                out.append((f"r={r},n={n}", (lambda r=r, n=n: unit(r, n))))
    return out


def _delavina_waller(p):
    def unit(d):
        n = 2 * d + 1
        wc = wiener(cycle(n))
        pairs = n * (n - 1) // 2
        # W <= m + d (C(n,2) - m): denser graphs cannot reach W(C_n).
        m_cap = (d * pairs - wc) // (d - 1)
        gs = connected_graphs(n, EnumFilter(diameter=d, max_m=m_cap), p["threads"])
        scored = [(w, g) for g in gs if (w := wiener(g)) >= wc]
        best = max(v for v, _ in scored)
        wit = [_witness(f"d={d}", g, v) for v, g in _best(scored, True)]
        return _unit(
            f"d={d}", "counterexample" if best > wc else "supported", wit,
            order=n, cycle_W=wc, edge_cap=m_cap, graphs_with_W_at_least_cycle=len(scored), max_W=best,
        )

    return [(f"d={d}", (lambda d=d: unit(d))) for d in p["d"]]


def _radius_min(p):
    def unit(n, r):
        scored = [(wiener(g), g) for g in _graphs(n, p["threads"]) if radius(g) == r]
        best, argmin = _extremes(scored, False)
        gadgets = {s: radius_gadget(n, r, s) for s in range(1, min(r - 1, n - 2 * r + 1) + 1)}
        gw = {s: wiener(g) for s, g in gadgets.items()}
        gmin = min(gw.values())
        hits = sorted(s for s, g in gadgets.items() if gw[s] == best and any(is_isomorphic(g, h) for h in argmin))
        wit = [_witness(f"min n={n} r={r}", g, v) for v, g in _best(scored, False)]
        return _unit(
            f"n={n},r={r}", "counterexample" if best < gmin else "supported", wit,
            graphs=len(scored), min_W=best, gadget_W={str(s): w for s, w in gw.items()}, gadgets_attaining=hits,
        )

    out = []
    for r in range(3, p["n_max"] // 2 + 1):
        for n in range(2 * r, p["n_max"] + 1):
            out.append((f"n={n},r={r}", (lambda n=n, r=r: unit(n, r))))
    return out


EULERIAN_RESTRICTED_CYCLOMATIC = 3


def _eulerian_extremes(p):
    def unit(n):
        if n <= 9:
            gs = [g for g in _graphs(n, p["threads"]) if all(d % 2 == 0 for d in g.degrees)]
            domain = "all"
        else:
            filt = EnumFilter(eulerian=True, max_cyclomatic=EULERIAN_RESTRICTED_CYCLOMATIC)
            gs = connected_graphs(n, filt, p["threads"])
            domain = f"cyclomatic<={EULERIAN_RESTRICTED_CYCLOMATIC}"
        scored = [(wiener(g), g) for g in gs]
        wmax, argmax = _extremes(scored, True)
        cn = cycle(n)
        max_ok = len(argmax) == 1 and is_isomorphic(argmax[0], cn)
        rest = [(v, g) for v, g in scored if v < wmax]
        data: dict[str, Any] = {"graphs": len(gs), "domain": domain, "max_W": wmax, "cycle_is_unique_max": max_ok}
        status = "supported" if max_ok else "counterexample"
        wit = [_witness(f"max n={n}", g, v) for v, g in _best(scored, True)]
        if rest and n >= 5:
            second, argsecond = _extremes(rest, True)
            c3 = eulerian_c3(n)
            c3_ok = any(is_isomorphic(c3, g) for g in argsecond)
            data.update(second_W=second, c_n3_W=wiener(c3), c_n3_is_second=c3_ok, second_count=len(argsecond))
            if max_ok and not c3_ok:
                # the second-max statement is asymptotic, so small orders cannot refute it
                status = "inconclusive"
        return _unit(f"n={n}", status, wit, **data)

    ns = [p["n"]] if p.get("n") is not None else list(range(3, p["n_max"] + 1))
    return [(f"n={n}", (lambda n=n: unit(n))) for n in ns]


def _wl_equal(g: Graph) -> bool:
    w = wiener(g)
    if g.m * (g.m - 1) // 2 > w:
        return False
    return wiener(line_graph(g)) == w


def _wlw_equal_girth(p):
    def unit(gval):
        for n in range(3, p["n_max"] + 1):
            hits = [g for g in _graphs(n, p["threads"]) if not g.is_tree() and not _is_cycle(g) and girth(g) == gval and _wl_equal(g)]
            if hits:
                hits.sort(key=canonical_code)
                wit = [_witness(f"girth={gval}", g, wiener(g)) for g in hits[:3]]
                return _unit(f"girth={gval}", "supported", wit, smallest_order=n, count_at_smallest_order=len(hits))
        return _unit(f"girth={gval}", "inconclusive", [], smallest_order=None)

    return [(f"girth={g}", (lambda g=g: unit(g))) for g in p["girth"]]


BICYCLIC_WLW_REFERENCE = {9: 26, 10: 166}


def _wl_hits(n: int, lam: int, threads: int) -> list[Graph]:
    gs = connected_graphs(n, EnumFilter(cyclomatic=lam), threads)
    return sorted((g for g in gs if _wl_equal(g)), key=canonical_code)


def _bicyclic_wlw(p):
    def unit(n):
        hits = _wl_hits(n, 2, p["threads"])
        ref = BICYCLIC_WLW_REFERENCE.get(n)
        status = "inconclusive" if ref is None else ("supported" if ref == len(hits) else "counterexample")
        wit = [_witness(f"order={n}", g, wiener(g)) for g in hits[:3]]
        return _unit(
            f"order={n}", status, wit, count=len(hits), reference=ref,
            graph6=[canonical_code(g).decode("ascii") for g in hits],
        )

    orders = [p["order"]] if p.get("order") is not None else list(p["orders"])
    return [(f"order={n}", (lambda n=n: unit(n))) for n in orders]


MIN_ORDER_REFERENCE = {2: (9, 26), 3: (12, 71)}
MIN_ORDER_MAX_N = 14


def _min_order_lambda(p):
    def unit(lam):
        for n in range(3, MIN_ORDER_MAX_N + 1):
            if n - 1 + lam > n * (n - 1) // 2:
                continue
            hits = _wl_hits(n, lam, p["threads"])
            if hits:
                ref = MIN_ORDER_REFERENCE.get(lam)
                ok = ref is None or ref[0] == n
                status = "supported" if ok else "counterexample"
                wit = [_witness(f"lambda={lam}", g, wiener(g)) for g in hits[:3]]
                return _unit(
                    f"lambda={lam}", status, wit, min_order=n, count_at_min_order=len(hits),
                    reference=None if ref is None else {"order": ref[0], "count": ref[1]},
                )
        return _unit(f"lambda={lam}", "inconclusive", [], min_order=None)

    return [(f"lambda={lam}", (lambda lam=lam: unit(lam))) for lam in p["lambda"]]


def _ratio(g: Graph) -> Fraction:
    return Fraction(wiener(line_graph(g)), wiener(g))


def _ratio_min_star(p):
    def unit(n):
        scored = [(_ratio(g), g) for g in _graphs(n, p["threads"])]
        best, argmin = _extremes(scored, False)
        s = star(n)
        star_ratio = _ratio(s)
        star_hit = any(is_isomorphic(s, g) for g in argmin)
        status = "supported" if star_hit else "counterexample"
        wit = [_witness(f"min n={n}", g, v) for v, g in _best(scored, False)]
        return _unit(
            f"n={n}", status, wit, graphs=len(scored), min_ratio=_value(best), star_ratio=_value(star_ratio),
            star_unique=star_hit and len(argmin) == 1,
        )

    return [(f"n={n}", (lambda n=n: unit(n))) for n in range(3, p["n_max"] + 1)]


def _connectivity_min(p):
    def unit(n, k):
        scored = [(wiener(g), g) for g in _graphs(n, p["threads"]) if vertex_connectivity(g) == k]
        best, argmin = _extremes(scored, False)
        fam = connectivity_min(n, k)
        fw = wiener(fam)
        hit = any(is_isomorphic(fam, g) for g in argmin)
        wit = [_witness(f"min n={n} k={k}", g, v) for v, g in _best(scored, False)]
        return _unit(
            f"n={n},k={k}", "counterexample" if best < fw else "supported", wit,
            graphs=len(scored), min_W=best, family_W=fw, family_is_argmin=hit, argmin_count=len(argmin),
        )

    out = []
    for k in p["k"]:
        for n in range(k + 2, p["n_max"] + 1):
            out.append((f"n={n},k={k}", (lambda n=n, k=k: unit(n, k))))
    return out


def _matching_max_tree(p):
    def unit(n):
        scored = sorted(((wiener(g), g) for g in _graphs(n, p["threads"])), key=lambda vg: -vg[0])
        classes = range(2, n // 2 + 1)
        found: dict[int, list[tuple[int, Graph]]] = {i: [] for i in classes}
        for w, g in scored:
            full = all(len(found[i]) >= 3 for i in classes)
            if full and w < min(found[i][2][0] for i in classes):
                break
            i = matching_number(g)
            if i in found:
                found[i].append((w, g))
        per_class, wit, status = {}, [], "supported"
        for i in classes:
            best, argmax = _extremes(found[i], True)
            ok = len(argmax) == 1 and argmax[0].is_tree()
            if not ok:
                status = "counterexample"
            per_class[str(i)] = {"max_W": best, "argmax_count": len(argmax), "unique_tree": ok}
            wit += [_witness(f"max n={n} matching={i}", g, v) for v, g in _best(found[i], True)]
        return _unit(f"n={n}", status, wit, classes=per_class)

    return [(f"n={n}", (lambda n=n: unit(n))) for n in range(5, p["n_max"] + 1)]


def _degree_seq_caterpillar(p):
    def unit(n):
        groups: dict[tuple[int, ...], list[tuple[int, Graph]]] = {}
        for t in trees(n):
            groups.setdefault(tuple(sorted(t.degrees, reverse=True)), []).append((wiener(t), t))
        bad = []
        for seq in sorted(groups):
            _, argmax = _extremes(groups[seq], True)
            if not all(is_caterpillar(g) for g in argmax):
                bad.append((seq, argmax))
        wit = [_witness(f"n={n} degrees={list(seq)}", g, wiener(g)) for seq, am in bad[:3] for g in am if not is_caterpillar(g)][:3]
        return _unit(
            f"n={n}", "counterexample" if bad else "supported", wit,
            degree_sequences=len(groups), failing_sequences=[list(s) for s, _ in bad],
        )

    return [(f"n={n}", (lambda n=n: unit(n))) for n in range(1, p["n_max"] + 1)]


def _bipartition_tree(p):
    def unit(n):
        groups: dict[tuple[int, int], list[tuple[int, Graph]]] = {}
        for t in trees(n):
            ones = sum(t.two_coloring())
            groups.setdefault((max(ones, n - ones), min(ones, n - ones)), []).append((wiener(t), t))
        per, wit, status = {}, [], "supported"
        for (pp, q) in sorted(groups):
            lo, argmin = _extremes(groups[(pp, q)], False)
            hi, argmax = _extremes(groups[(pp, q)], True)
            fmin, fmax = bipartition_tree_min(pp, q), bipartition_tree_max(pp, q)
            min_ok = wiener(fmin) == lo and any(is_isomorphic(fmin, g) for g in argmin)
            max_ok = wiener(fmax) == hi and any(is_isomorphic(fmax, g) for g in argmax)
            per[f"{pp},{q}"] = {"min_W": lo, "max_W": hi, "min_matches": min_ok, "max_matches": max_ok}
            if not (min_ok and max_ok):
                status = "counterexample"
                wit += [_witness(f"min p={pp} q={q}", g, lo) for g in argmin[:1]]
                wit += [_witness(f"max p={pp} q={q}", g, hi) for g in argmax[:1]]
        return _unit(f"n={n}", status, wit[:3], bipartitions=per)

    return [(f"n={n}", (lambda n=n: unit(n))) for n in range(2, p["n_max"] + 1)]


def _orientation_acyclic_min(p):
    def unit(n):
        max_m = p["max_m"]
        gs = connected_graphs(n, EnumFilter(max_m=max_m), p["threads"])
        checked = trees_ = bip = 0
        bad = []
        for g in gs:
            if g.is_tree():
                trees_ += 1
                continue
            if g.is_bipartite():
                # orienting every edge from one side to the other gives W = m
                bip += 1
                continue
            w, acyc, _ = orientation_table(g, np.arange(1 << g.m, dtype=np.int64))
            checked += 1
            if int(w[acyc].min()) > int(w.min()):
                bad.append((int(w.min()), g))
        wit = [_witness(f"n={n}", g, v) for v, g in _best(bad, False)]
        return _unit(
            f"n={n}", "counterexample" if bad else "supported", wit,
            graphs=len(gs), computed=checked, trees=trees_, bipartite=bip,
        )

    return [(f"n={n}", (lambda n=n: unit(n))) for n in range(2, p["max_m"] + 2)]


def _theta_paths(a: int, b: int, c: int) -> list[list[int]]:
    paths, nxt = [], 2
    for k in (a, b, c):
        paths.append([0] + list(range(nxt, nxt + k)) + [1])
        nxt += k
    return paths


def _cycle_masks(g: Graph, p1: list[int], p2: list[int]) -> np.ndarray:
    """Masks orienting ``p1`` and reversed ``p2`` as one directed cycle
    (either sense), all other edges free."""
    index = {e: i for i, e in enumerate(g.edges)}
    fixed = 0
    forced = 0
    for path, forward in ((p1, True), (p2, False)):
        for x, y in zip(path, path[1:]):
            tail, head = (x, y) if forward else (y, x)
            i = index[(min(x, y), max(x, y))]
            fixed |= 1 << i
            if tail > head:
                forced |= 1 << i
    free = [i for i in range(g.m) if not fixed >> i & 1]
    sub = np.arange(1 << len(free), dtype=np.int64)
    base = np.zeros_like(sub)
    for j, i in enumerate(free):
        base |= ((sub >> j) & 1) << i
    return np.concatenate([base | forced, base | (fixed & ~forced)])


def _theta_cycle_max(p):
    def unit(a, b, c):
        g = theta(a, b, c)
        ext = orientation_extremes(g, "all")
        paths = _theta_paths(a, b, c)
        lengths = (a + 1, b + 1)
        cyc_best = None
        for i in range(3):
            for j in range(i + 1, 3):
                if sorted((len(paths[i]) - 1, len(paths[j]) - 1), reverse=True) != list(lengths):
                    continue
                w, _, _ = orientation_table(g, _cycle_masks(g, paths[i], paths[j]))
                cyc_best = int(w.max()) if cyc_best is None else max(cyc_best, int(w.max()))
        ok = cyc_best == ext.w_max
        strong = ext.max_witness.is_strongly_connected()
        wit = [_witness(f"theta {a},{b},{c}", g, ext.w_max, max_arcs=ext.to_dict()["max_witness_arcs"])]
        return _unit(
            f"a={a},b={b},c={c}", "supported" if ok else "counterexample", wit if not ok else [],
            W_max=ext.w_max, W_max_cycle_pattern=cyc_best, max_witness_strong=strong,
        )

    out = []
    top = p["total_max"]
    for a in range(1, top + 1):
        for b in range(1, a + 1):
            for c in range(0, b + 1):
                if a + b + c <= top:
                    out.append((f"a={a},b={b},c={c}", (lambda a=a, b=b, c=c: unit(a, b, c))))
    return out


def _wg_interval(p):
    def unit(n):
        rep = wiener_spectrum(n, "graphs", p["threads"])
        return _unit(
            f"n={n}", "inconclusive", [], cardinality=rep.cardinality, run_start=rep.run_start,
            run_length=rep.run_length, n3_over_6=_value(Fraction(n**3, 6)), min=rep.min, max=rep.max,
        )

    return [(f"n={n}", (lambda n=n: unit(n))) for n in range(1, p["n_max"] + 1)]


def _third_line_order(g: Graph) -> int:
    """``|V(L^3(G))| = |E(L^2(G))| = sum over edges xy of L(G) of
    C(deg x + deg y - 2, 2)``."""
    lg = line_graph(g)
    deg = lg.degrees
    return sum(math.comb(deg[x] + deg[y] - 2, 2) for x, y in lg.edges)


def _iterated_cyclic(p):
    def unit(n):
        pruned = computed = 0
        bad = []
        for g in _graphs(n, p["threads"]):
            if g.is_tree() or _is_cycle(g):
                continue
            w = wiener(g)
            # L^i grows with i for cyclic non-cycles; W(H) >= C(|V(H)|, 2)
            if math.comb(_third_line_order(g), 2) > w:
                pruned += 1
                continue
            for i in p["i"]:
                h = iterated_line_graph(g, i)
                if h.n * (h.n - 1) // 2 > w:
                    continue
                computed += 1
                if wiener(h) == w:
                    bad.append((w, g))
        wit = [_witness(f"n={n}", g, v) for v, g in _best(bad, False)]
        return _unit(f"n={n}", "counterexample" if bad else "supported", wit, pruned=pruned, computed=computed)

    return [(f"n={n}", (lambda n=n: unit(n))) for n in range(4, p["n_max"] + 1)]


@dataclass(frozen=True)
class ConjSpec:
    id: str
    statement: str
    defaults: dict[str, Any]
    build: Callable[[dict[str, Any]], list[tuple[str, Callable[[], dict]]]]


CONJECTURES: dict[str, ConjSpec] = {
    s.id: s
    for s in [
        ConjSpec("cubic_max", "L_n has the largest W among cubic graphs", {"n": [10, 12, 14]}, _cubic_max),
        ConjSpec(
            "regular_diameter",
            "max W of r-regular graphs at max diameter, min W at min diameter",
            {"n_max": 12, "r": [3, 4]},
            _regular_diameter,
        ),
        ConjSpec("delavina_waller", "order 2d+1 and diameter d imply W <= W(C_{2d+1})", {"d": [3, 4]}, _delavina_waller),
        ConjSpec("radius_min", "min W at radius r is attained by some G_{n,r,s}", {"n_max": 9}, _radius_min),
        ConjSpec(
            "eulerian_extremes",
            "C_n maximizes W over Eulerian graphs; C_{n,3} is second",
            {"n_max": 10, "n": None},
            _eulerian_extremes,
        ),
        ConjSpec("wlw_equal_girth", "G != C_g of girth g with W(L(G)) = W(G) exists", {"n_max": 9, "girth": [3, 4]}, _wlw_equal_girth),
        ConjSpec("bicyclic_wlw", "bicyclic graphs with W(L(G)) = W(G), counted", {"orders": [9, 10], "order": None}, _bicyclic_wlw),
        ConjSpec("min_order_lambda", "n(2) = 9 and n(3) = 12", {"lambda": [2, 3]}, _min_order_lambda),
        ConjSpec("ratio_min_star", "S_n minimizes W(L(G))/W(G)", {"n_max": 8}, _ratio_min_star),
        ConjSpec(
            "connectivity_min",
            "K_k + (K_1 u K_{n-k-1}) minimizes W at vertex connectivity k",
            {"n_max": 8, "k": [2, 3]},
            _connectivity_min,
        ),
        ConjSpec("matching_max_tree", "max W at matching number i >= 2 is a unique tree", {"n_max": 9}, _matching_max_tree),
        ConjSpec("degree_seq_caterpillar", "max W trees of a degree sequence are caterpillars", {"n_max": 12}, _degree_seq_caterpillar),
        ConjSpec("bipartition_tree", "extremal trees with bipartition (p, q)", {"n_max": 12}, _bipartition_tree),
        ConjSpec("orientation_acyclic_min", "W_min is attained by an acyclic orientation", {"max_m": 12}, _orientation_acyclic_min),
        ConjSpec("theta_cycle_max", "W_max of a theta graph has its two longest paths on a directed cycle", {"total_max": 12}, _theta_cycle_max),
        ConjSpec("wg_interval", "largest interval in WG(n) is n^3/6 + O(n^2)", {"n_max": 9}, _wg_interval),
        ConjSpec("iterated_cyclic", "no cyclic non-cycle G with W(L^i(G)) = W(G), i >= 3", {"n_max": 8, "i": [3, 4]}, _iterated_cyclic),
    ]
}
CONJECTURE_IDS = tuple(CONJECTURES)


def _params(spec: ConjSpec, params: dict[str, Any] | None) -> dict[str, Any]:
    p = dict(spec.defaults)
    for k, v in (params or {}).items():
        if k != "threads" and k not in p:
            raise BadParamsError(f"{spec.id} has no parameter {k!r}; known: {sorted(spec.defaults)}")
        p[k] = v
    for k, v in p.items():
        if isinstance(v, tuple):
            p[k] = list(v)
        elif isinstance(v, (int, str)) and isinstance(spec.defaults.get(k), list):
            p[k] = [v]
    return p


def _replay(path: Path, cid: str, params_json: str) -> dict[str, dict]:
    done: dict[str, dict] = {}
    if not path.exists():
        return done
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                continue  # a torn final line from an interrupted run
            if rec.get("conjecture") == cid and rec.get("params") == params_json:
                done[rec["unit"]["key"]] = rec["unit"]
    return done


def iter_conjecture_units(
    cid: str, params: dict[str, Any] | None = None, checkpoint: str | Path | None = None
) -> Iterator[dict[str, Any]]:
    """Units of a sweep in order, replaying any recorded in ``checkpoint``
    and appending the newly computed ones to it."""
    if cid not in CONJECTURES:
        raise BadParamsError(f"unknown conjecture {cid!r}")
    spec = CONJECTURES[cid]
    p = _params(spec, params)
    p.setdefault("threads", 1)
    shown = {k: v for k, v in p.items() if k != "threads"}
    params_json = json.dumps(shown, sort_keys=True)
    path = None if checkpoint is None else Path(checkpoint)
    done = _replay(path, cid, params_json) if path is not None else {}
    for key, thunk in spec.build(p):
        if key in done:
            yield done[key]
            continue
        result = thunk()
        if path is not None:
            with open(path, "a") as fh:
                fh.write(json.dumps({"conjecture": cid, "params": params_json, "unit": result}, sort_keys=True) + "\n")
        yield result


def run_conjecture(
    cid: str,
    params: dict[str, Any] | None = None,
    *,
    threads: int = 1,
    checkpoint: str | Path | None = None,
) -> ConjReport:
    """Sweep the finite domain of conjecture ``cid``.

    The verdict is COUNTEREXAMPLE if any unit refutes the statement,
    INCONCLUSIVE if some unit cannot decide it (asymptotic statements,
    searches that find nothing within the caps), SUPPORTED otherwise.
    Counterexample witnesses are listed first.
    """
    merged = dict(params or {})
    merged["threads"] = threads
    units = list(iter_conjecture_units(cid, merged, checkpoint))
    spec = CONJECTURES[cid]
    shown = {k: v for k, v in _params(spec, params).items() if k != "threads"}
    worst = max((_STATUS_RANK[u["status"]] for u in units), default=1)
    verdict = {0: ConjVerdict.SUPPORTED, 1: ConjVerdict.INCONCLUSIVE, 2: ConjVerdict.COUNTEREXAMPLE}[worst]
    ranked = sorted(units, key=lambda u: -_STATUS_RANK[u["status"]])
    witnesses = [w for u in ranked for w in u["witnesses"]]
    return ConjReport(cid, shown, verdict, witnesses, units)
