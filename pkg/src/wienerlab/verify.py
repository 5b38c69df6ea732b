"""Registry of executable identities, bounds and congruences.

A check maps one instance to ``(holds, values)``; :func:`run_check` folds
a stream of instances into a :class:`CheckReport`.  Instances outside a
check's domain raise :class:`DomainError`.  Quarter-integer bounds are
compared after multiplying through by 4 (or 2), so all arithmetic is in
integers.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Iterable

from .errors import DomainError
from .families import (
    build_congruence_instance,
    build_gxy_instance,
    generalized_star,
    habc,
    random_kproportional_pair,
    random_tree,
    segments,
)
from .graph import Digraph, Graph
from .invariants import (
    betweenness,
    directed_tree_arc_sum,
    gutman,
    n2_n3,
    p_pairs,
    szeged,
    wiener,
    wiener_digraph,
)
from .io import to_graph6, to_arc_list
from .linegraph import iterated_line_graph, line_graph
from .structure import blocks, clique_counts, matching_number


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"
    CONJECTURE_COUNTEREXAMPLE = "CONJECTURE_COUNTEREXAMPLE"


@dataclass
class CheckReport:
    check: str
    domain: str
    instances: int
    verdict: Verdict
    witness: list[str] | None = None
    values: dict[str, Any] | None = None
    stats: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS

    def to_dict(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "check": self.check,
            "domain": self.domain,
            "instances": self.instances,
            "verdict": self.verdict.value,
        }
        if self.witness is not None:
            doc["witness"] = self.witness
        if self.values is not None:
            doc["values"] = self.values
        if self.stats:
            doc["stats"] = dict(sorted(self.stats.items()))
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _encode(obj) -> str:
    if isinstance(obj, Graph):
        return to_graph6(obj)
    if isinstance(obj, Digraph):
        return to_arc_list(obj).strip().replace("\n", ";")
    return repr(obj)


def _jsonable(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


# -- domain helpers -----------------------------------------------------------


def _tree(g) -> Graph:
    if not isinstance(g, Graph) or not g.is_tree():
        raise DomainError("instance must be a tree")
    return g


def _connected(g) -> Graph:
    if not isinstance(g, Graph) or g.n == 0 or not g.is_connected():
        raise DomainError("instance must be a connected graph")
    return g


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.is_connected() and all(d == 2 for d in g.degrees)


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _is_path(g: Graph) -> bool:
    return g.is_tree() and g.max_degree <= 2


def _is_star(g: Graph) -> bool:
    return g.is_tree() and g.n >= 3 and g.max_degree == g.n - 1


# -- tree identities ----------------------------------------------------------


def _wiener_edge_decomp(g):
    t = _tree(g)
    w = wiener(t)
    by_edges = sum(n2_n3(t.remove_edge(u, v))[0] for u, v in t.edges)
    sz = szeged(t) if t.n else 0
    return w == by_edges == sz, {"W": w, "sum_N2(T-e)": by_edges, "Sz": sz}


def _wiener_vertex_decomp(g):
    t = _tree(g)
    w = wiener(t)
    rhs = sum(n2_n3(t.remove_vertex(v))[0] for v in range(t.n)) + math.comb(t.n, 2)
    return w == rhs, {"W": w, "rhs": rhs}


def _doyle_graver(g):
    t = _tree(g)
    w = wiener(t)
    n3 = sum(n2_n3(t.remove_vertex(v))[1] for v in range(t.n))
    rhs = math.comb(t.n + 1, 3)
    return w + n3 == rhs, {"W": w, "sum_N3(T-v)": n3, "C(n+1,3)": rhs}


def _buckley(g, shift: int = 0):
    t = _tree(g)
    lhs = wiener(line_graph(t))
    rhs = wiener(t) - math.comb(t.n, 2) - shift
    return lhs == rhs, {"W(L)": lhs, "rhs": rhs}


# -- line graph bounds ----------------------------------------------------------


def _gutman_lower(g):
    g = _connected(g)
    wl, w, n, m = wiener(line_graph(g)), wiener(g), g.n, g.m
    lhs2, rhs2 = 2 * wl, 2 * w - 2 * n * (n - 1) + m * (m + 1)
    return lhs2 >= rhs2, {"2W(L)": lhs2, "2*bound": rhs2}


def _unicyclic_lg(g):
    g = _connected(g)
    if g.m != g.n:
        raise DomainError("instance must be unicyclic")
    wl, w = wiener(line_graph(g)), wiener(g)
    return wl <= w and ((wl == w) == _is_cycle(g)), {"W(L)": wl, "W": w, "cycle": _is_cycle(g)}


def _mindeg2_lg(g):
    g = _connected(g)
    if g.min_degree < 2:
        raise DomainError("instance must have minimum degree >= 2")
    wl, w = wiener(line_graph(g)), wiener(g)
    return wl >= w and ((wl == w) == _is_cycle(g)), {"W(L)": wl, "W": w, "cycle": _is_cycle(g)}


def _sandwich(g):
    g = _connected(g)
    wl4 = 4 * wiener(line_graph(g))
    low = gutman(g) - g.m
    high = low + 4 * math.comb(g.m, 2)
    ok = low <= wl4 <= high and ((wl4 == low) == g.is_tree())
    return ok, {"4W(L)": wl4, "Gut-m": low, "upper": high, "tree": g.is_tree()}


def _kappa_bound(g):
    g = _connected(g)
    wl4 = 4 * wiener(line_graph(g))
    k3, k4 = clique_counts(g)
    bound = gutman(g) - g.m + 3 * k3 + 12 * k4
    extremal = g.is_tree() or _is_complete(g)
    return wl4 >= bound and ((wl4 == bound) == extremal), {"4W(L)": wl4, "4*bound": bound, "tree_or_complete": extremal}


def _delta_sq_bound(g):
    g = _connected(g)
    if g.n < 3:
        raise DomainError("instance must have at least 3 vertices")
    wl4 = 4 * wiener(line_graph(g))
    d = g.min_degree
    rhs = d * d * wiener(g)
    extremal = _is_cycle(g) or (g.n == 3 and g.m == 2)
    return wl4 >= rhs and ((wl4 == rhs) == extremal), {"4W(L)": wl4, "delta^2*W": rhs, "P3_or_cycle": extremal}


def star_branches(g: Graph) -> list[int]:
    """Branch lengths of a generalized star (tree with one vertex of
    degree >= 3, all other degrees <= 2)."""
    if not g.is_tree():
        raise DomainError("generalized star must be a tree")
    hubs = [v for v in range(g.n) if g.degree(v) >= 3]
    if len(hubs) != 1:
        raise DomainError("generalized star needs exactly one vertex of degree >= 3")
    c = hubs[0]
    out = []
    for w in g.neighbors(c):
        prev, cur, length = c, w, 1
        while g.degree(cur) == 2:
            prev, cur = cur, next(x for x in g.neighbors(cur) if x != prev)
            length += 1
        out.append(length)
    return sorted(out)


def gen_star_l2_formula_doubled(ks: list[int], w: int) -> int:
    t, q = len(ks), sum(ks)
    return 2 * w + math.comb(t - 1, 2) * (sum(k * k for k in ks) + q) - 2 * q * q + 12 * math.comb(t, 4)


def _gen_star_l2(g):
    ks = star_branches(g)
    w = wiener(g)
    lhs2 = 2 * wiener(iterated_line_graph(g, 2))
    rhs2 = gen_star_l2_formula_doubled(ks, w)
    return lhs2 == rhs2, {"W(L^2)": Fraction(lhs2, 2), "formula": Fraction(rhs2, 2), "branches": ks}


def habc_params(j: int, k: int) -> tuple[int, int, int]:
    base = 128 + 3 * j * j + 3 * k * k - 3 * j * k
    return base + j, base + k, base + j + k


def _habc_l3(inst):
    if not (isinstance(inst, tuple) and len(inst) == 2 and all(isinstance(x, int) for x in inst)):
        raise DomainError("instance must be a pair of integers (j, k)")
    a, b, c = habc_params(*inst)
    h = habc(a, b, c)
    w, w3 = wiener(h), wiener(iterated_line_graph(h, 3))
    return w == w3, {"a,b,c": [a, b, c], "W": w, "W(L^3)": w3}


# -- digraphs and Szeged ----------------------------------------------------------


def _directed_tree_formula(d):
    if not isinstance(d, Digraph) or not d.underlying().is_tree():
        raise DomainError("instance must be an oriented tree")
    w, f = wiener_digraph(d), directed_tree_arc_sum(d)
    return w == f, {"W(D)": w, "arc_sum": f}


def _betweenness_identity(d):
    if not isinstance(d, (Digraph, Graph)):
        raise DomainError("instance must be a digraph")
    if isinstance(d, Graph):
        d = Digraph(d.n, [(u, v) for u, v in d.edges] + [(v, u) for u, v in d.edges])
    w = wiener_digraph(d)
    b = sum(betweenness(d), Fraction(0))
    p = p_pairs(d)
    return b.denominator == 1 and w == b + p, {"W(D)": w, "sum_B": b, "p(D)": p}


def _szeged_vs_wiener(g):
    g = _connected(g)
    sz, w = szeged(g), wiener(g)
    all_complete = all(b.complete for b in blocks(g))
    return sz >= w and ((sz == w) == all_complete), {"Sz": sz, "W": w, "all_blocks_complete": all_complete}


def _eta_conjecture(g):
    g = _connected(g)
    bl = blocks(g)
    if any(b.complete for b in bl):
        raise DomainError("no block may be complete")
    eta_v = szeged(g) - wiener(g)
    bound = sum(2 * b.order - 6 for b in bl)
    return eta_v >= bound, {"eta": eta_v, "bound": bound, "block_orders": [b.order for b in bl]}


# -- ratios -------------------------------------------------------------------------


def ratio_formula(kind: str, n: int) -> Fraction:
    if kind == "star":
        return Fraction(n - 2, 2 * (n + 1))
    if kind == "path":
        return Fraction(n - 2, n + 1)
    if kind == "complete":
        return Fraction(math.comb(n - 1, 2))
    raise DomainError(f"unknown ratio family {kind!r}")


def _ratio_values(inst):
    from .families import complete, path, star

    if isinstance(inst, Graph):
        g = inst
        kind = "star" if _is_star(g) and not _is_path(g) else "path" if _is_path(g) else "complete" if _is_complete(g) else None
        if kind is None or g.n < 3:
            raise DomainError("instance must be S_n (n >= 4), P_n or K_n with n >= 3")
    else:
        kind, n = inst
        if n < 3:
            raise DomainError("ratio families need n >= 3")
        g = {"star": star, "path": path, "complete": complete}[kind](n)
    got = Fraction(wiener(line_graph(g)), wiener(g))
    want = ratio_formula(kind, g.n)
    return got == want, {"family": kind, "n": g.n, "W(L)/W": got, "formula": want}


# -- congruences -----------------------------------------------------------------------


def _perfect_matching_tree(g) -> int:
    t = _tree(g)
    if t.n % 2 or matching_number(t) != t.n // 2:
        raise DomainError("tree must have a perfect matching")
    return 4


def _lin_modulus(r: int) -> Callable[[Any], int]:
    from .enumeration import has_path_factor

    def modulus(g) -> int:
        t = _tree(g)
        if not has_path_factor(t, r):
            raise DomainError(f"tree must have a P_{r}-factor")
        return r if r % 2 else 2 * r

    return modulus


def _pair_kprop(inst):
    t1, t2, k = inst
    _tree(t1)
    _tree(t2)
    s1, s2 = segments(t1), segments(t2)
    if t1.n != t2.n or len(s1) != len(s2) or any(x % k for x in s1 + s2):
        raise DomainError("trees must be k-proportional")
    w1, w2 = wiener(t1), wiener(t2)
    mod = k**3
    return (w1 - w2) % mod == 0, {"W1": w1, "W2": w2, "modulus": mod}


def _pair_composite(double: bool):
    def check(inst):
        g1, g2, r = inst
        _connected(g1)
        _connected(g2)
        if double and (r % 2 or not (g1.is_tree() and g2.is_tree())):
            raise DomainError("mod 2r variant needs even r and tree members")
        mod = 2 * r if double else r
        w1, w2 = wiener(g1), wiener(g2)
        return (w1 - w2) % mod == 0, {"W1": w1, "W2": w2, "modulus": mod}

    return check


def _gxy(inst):
    gamma, parts = inst
    _connected(gamma)
    if len(parts) < 2:
        raise DomainError("needs p >= 2 parts")
    r = parts[0].n
    if r < 2 or any(p.n != r for p in parts) or gamma.n != r * len(parts):
        raise DomainError("parts must all have the same order r >= 2")
    for i, p in enumerate(parts):
        _connected(p)
        if not all(b.complete for b in blocks(p)):
            raise DomainError("every block of every part must be complete")
        if gamma.induced(range(i * r, (i + 1) * r)) != p:
            raise DomainError("parts must occupy consecutive vertex ranges of Gamma")
    if gamma.m != sum(p.m for p in parts) + len(parts) - 1:
        raise DomainError("Gamma must add exactly p - 1 edges")
    w = wiener(gamma)
    s = sum(wiener(p) for p in parts)
    return (w - s) % r == 0, {"W(Gamma)": w, "sum_W(G_i)": s, "modulus": r}


# -- registry ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckSpec:
    id: str
    domain: str
    kind: str  # "single", "pair" or "group"
    fn: Callable
    conjecture: bool = False


def _single(id_, domain, fn, conjecture=False):
    return CheckSpec(id_, domain, "single", fn, conjecture)


CHECKS: dict[str, CheckSpec] = {
    c.id: c
    for c in [
        _single("wiener_edge_decomp", "trees", _wiener_edge_decomp),
        _single("wiener_vertex_decomp", "trees", _wiener_vertex_decomp),
        _single("doyle_graver", "trees", _doyle_graver),
        _single("buckley", "trees", _buckley),
        _single("gutman_lower", "connected graphs", _gutman_lower),
        _single("unicyclic_LG", "connected unicyclic graphs", _unicyclic_lg),
        _single("mindeg2_LG", "connected graphs with minimum degree >= 2", _mindeg2_lg),
        _single("sandwich", "connected graphs", _sandwich),
        _single("kappa_bound", "connected graphs", _kappa_bound),
        _single("delta_sq_bound", "connected graphs on >= 3 vertices", _delta_sq_bound),
        _single("gen_star_L2", "generalized stars", _gen_star_l2),
        _single("habc_L3", "(j, k) integer pairs", _habc_l3),
        CheckSpec("gutman_rouvray", "trees with a perfect matching, grouped by order", "group", _perfect_matching_tree),
        CheckSpec("lin_factor", "trees with a P_r-factor, grouped by order", "group", _lin_modulus),
        CheckSpec("kproportional", "pairs of k-proportional trees", "pair", _pair_kprop),
        CheckSpec("gxy", "(Gamma, [G_1..G_p]) block-graph composites", "pair", _gxy),
        CheckSpec("composite_mod_r", "member pairs of one class G(H, F)", "pair", _pair_composite(False)),
        CheckSpec("composite_mod_2r", "member pairs of one tree class G^T(H, F), r even", "pair", _pair_composite(True)),
        _single("directed_tree_formula", "oriented trees", _directed_tree_formula),
        _single("betweenness_identity", "digraphs", _betweenness_identity),
        _single("szeged_vs_wiener", "connected graphs", _szeged_vs_wiener),
        _single("eta_conjecture", "connected graphs without complete blocks", _eta_conjecture, conjecture=True),
        _single("ratio_values", "S_n, P_n, K_n (n >= 3)", _ratio_values),
    ]
}

CHECK_IDS = tuple(CHECKS)


def _fail_verdict(spec: CheckSpec) -> Verdict:
    return Verdict.CONJECTURE_COUNTEREXAMPLE if spec.conjecture else Verdict.FAIL


def _witness_of(inst) -> list[str]:
    if isinstance(inst, tuple):
        out = []
        for x in inst:
            if isinstance(x, list):
                out.extend(_encode(y) for y in x)
            else:
                out.append(_encode(x))
        return out
    return [_encode(inst)]


def run_check(
    check_id: str,
    instances: Iterable,
    *,
    r: int | None = None,
    skip_out_of_domain: bool = False,
    corrupt: bool = False,
) -> CheckReport:
    """Evaluate ``check_id`` on every instance.

    ``r`` parametrizes ``lin_factor``.  With ``skip_out_of_domain`` the
    instances outside the domain are counted in ``stats`` instead of
    raising.  ``corrupt`` perturbs ``buckley`` by one (harness self-test).
    """
    if check_id not in CHECKS:
        raise KeyError(f"unknown check {check_id!r}")
    spec = CHECKS[check_id]
    fn = spec.fn
    if check_id == "lin_factor":
        if r is None:
            raise DomainError("lin_factor needs r")
        fn = fn(r)
    if corrupt:
        if check_id != "buckley":
            raise ValueError("only buckley has a corrupted variant")
        fn = lambda g: _buckley(g, shift=1)  # noqa: E731
    domain = spec.domain if r is None else f"{spec.domain}, r={r}"
    count = 0
    stats: dict[str, int] = {}
    groups: dict[int, tuple[Any, int, int]] = {}
    for inst in instances:
        try:
            if spec.kind == "group":
                mod = fn(inst)
                w = wiener(inst)
                key = inst.n
                if key not in groups:
                    groups[key] = (inst, w, mod)
                    holds, values = True, None
                else:
                    first, w0, _ = groups[key]
                    holds = (w - w0) % mod == 0
                    values = {"W1": w0, "W2": w, "modulus": mod}
                    if not holds:
                        inst = (first, inst)
            else:
                holds, values = fn(inst)
        except DomainError:
            if not skip_out_of_domain:
                raise
            stats["out_of_domain"] = stats.get("out_of_domain", 0) + 1
            continue
        count += 1
        if values:
            for key in ("tree", "cycle", "tree_or_complete", "P3_or_cycle", "all_blocks_complete"):
                if values.get(key):
                    stats[f"{key}_instances"] = stats.get(f"{key}_instances", 0) + 1
        if not holds:
            return CheckReport(
                check_id,
                domain,
                count,
                _fail_verdict(spec),
                witness=_witness_of(inst),
                values={k: _jsonable(v) for k, v in values.items()},
                stats=stats,
            )
    if spec.kind == "group":
        stats["groups"] = len(groups)
    verdict = Verdict.PASS if count else Verdict.SKIPPED
    return CheckReport(check_id, domain, count, verdict, stats=stats)


def recheck_witness(report: CheckReport, *, r: int | None = None, corrupt: bool = False) -> bool:
    """Re-run the first witness of a failed single-instance check on its
    own; true iff it fails again."""
    from .io import from_graph6

    spec = CHECKS[report.check]
    if spec.kind != "single" or not report.witness:
        raise ValueError("only single-instance witnesses can be re-run")
    g = from_graph6(report.witness[0])
    return run_check(report.check, [g], r=r, corrupt=corrupt).verdict != Verdict.PASS


# -- seeded instance streams ------------------------------------------------------------

RANDOM_CHECKS = (
    "gen_star_L2",
    "habc_L3",
    "kproportional",
    "gxy",
    "composite_mod_r",
    "composite_mod_2r",
    "directed_tree_formula",
    "betweenness_identity",
    "ratio_values",
)


def _random_digraph(rng: random.Random, max_n: int) -> Digraph:
    n = rng.randint(1, max_n)
    p = rng.choice((0.15, 0.3, 0.5))
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p])


def _random_oriented_tree(rng: random.Random, max_n: int) -> Digraph:
    t = random_tree(rng.randint(1, max_n), rng)
    return Digraph(t.n, [(v, u) if rng.random() < 0.5 else (u, v) for u, v in t.edges])


def seeded_instances(check_id: str, count: int, seed: int, *, r: int | None = None) -> list:
    """Instances for the checks whose domain is not an enumeration.

    Deterministic in ``(check_id, count, seed, r)``.  ``r`` fixes the
    modulus of the composite checks, ``k`` of ``kproportional`` and the
    part order of ``gxy``; otherwise it is drawn per instance.  The
    ``habc_L3`` and ``ratio_values`` domains are fixed finite lists.
    """
    rng = random.Random(seed)
    if check_id == "habc_L3":
        return [(j, k) for j in range(-2, 3) for k in range(-2, 3)]
    if check_id == "ratio_values":
        return [(kind, n) for kind in ("star", "path", "complete") for n in range(3, 11)]
    out: list = []
    for _ in range(count):
        sub = rng.randrange(2**32)
        if check_id == "gen_star_L2":
            out.append(generalized_star([rng.randint(1, 12) for _ in range(rng.randint(3, 8))]))
        elif check_id == "kproportional":
            k = r if r is not None else rng.choice((2, 3))
            t1, t2 = random_kproportional_pair(k, rng)
            out.append((t1, t2, k))
        elif check_id == "gxy":
            rr = r if r is not None else rng.randint(2, 5)
            out.append(build_gxy_instance(rr, rng.randint(2, 4), sub))
        elif check_id == "composite_mod_r":
            rr = r if r is not None else rng.randint(2, 5)
            g1, g2 = build_congruence_instance(rr, rng.randrange(rr), rng.randint(2, 4), sub)
            out.append((g1, g2, rr))
        elif check_id == "composite_mod_2r":
            rr = r if r is not None else rng.choice((2, 4, 6))
            g1, g2 = build_congruence_instance(rr, 0, rng.randint(2, 4), sub, trees_only=True)
            out.append((g1, g2, rr))
        elif check_id == "directed_tree_formula":
            out.append(_random_oriented_tree(rng, 8))
        elif check_id == "betweenness_identity":
            out.append(_random_digraph(rng, 8))
        else:
            raise ValueError(f"{check_id} takes enumerated instances, not seeded ones")
    return out
