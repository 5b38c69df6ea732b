"""Command-line entry point.

Every subcommand builds one JSON document (sorted keys, seed included)
and prints it; ``--json`` prints it compact, otherwise indented.  Exit
status is 0 on success, 1 when a check fails or a conjecture sweep finds
a counterexample, 2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .enumeration import EnumFilter, connected_graphs, tree_count, trees
from .errors import WienerLabError
from .families import build
from .graph import Graph
from .invariants import INDICES
from .io import read_graphs, to_graph6, write_graph6
from .search import (
    CONJECTURE_IDS,
    ConjVerdict,
    InverseMiss,
    inverse_wiener,
    orientation_extremes,
    run_conjecture,
    wiener_spectrum,
)
from .verify import CHECK_IDS, RANDOM_CHECKS, Verdict, run_check, seeded_instances

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_RANDOM_COUNT = 200


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    spec: str | None = None
    filter_text: str | None = None
    out: str | None = None
    seed: int = 0
    threads: int = 1
    as_json: bool = False
    options: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        options = {
            k: v
            for k, v in vars(args).items()
            if k not in ("command", "inputs", "spec", "filter", "out", "seed", "threads", "json") and v is not None
        }
        return cls(
            command=args.command,
            inputs=list(args.inputs or []),
            spec=args.spec,
            filter_text=args.filter,
            out=args.out,
            seed=args.seed,
            threads=args.threads,
            as_json=args.json,
            options=options,
        )


# -- helpers ------------------------------------------------------------------


def parse_filter(text: str | None) -> EnumFilter:
    """``"m=7,regular=3,bipartite"``: comma-separated ``key=value`` or bare
    boolean flags naming :class:`EnumFilter` fields."""
    if not text:
        return EnumFilter()
    fields = EnumFilter.__dataclass_fields__
    kwargs: dict[str, Any] = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        key, _, value = item.partition("=")
        key = key.strip()
        if key not in fields:
            raise UsageError(f"unknown filter field {key!r}")
        if not value:
            kwargs[key] = True
        elif key == "bipartition":
            a, _, b = value.partition(":")
            kwargs[key] = (int(a), int(b))
        elif value.lower() in ("true", "false"):
            kwargs[key] = value.lower() == "true"
        else:
            kwargs[key] = int(value)
    return EnumFilter(**kwargs)


def _load_inputs(cfg: RunConfig) -> list[Graph]:
    graphs: list[Graph] = []
    for path in cfg.inputs:
        graphs.extend(read_graphs(path))
    if cfg.spec:
        graphs.append(build(cfg.spec))
    if not graphs:
        if cfg.options.get("trees") is None and cfg.options.get("order") is None:
            raise UsageError("give --in FILE, --spec TEXT, --trees N or --order N")
        graphs = _enumerated(cfg)[1]
    return graphs


def _enumerated(cfg: RunConfig) -> tuple[str, list[Graph]]:
    o = cfg.options
    if o.get("trees") is not None:
        return f"trees n={o['trees']}", list(trees(o["trees"]))
    if o.get("order") is not None:
        filt = parse_filter(cfg.filter_text)
        return f"connected n={o['order']}", connected_graphs(o["order"], filt, cfg.threads)
    raise UsageError("give --trees N, --order N or --in FILE")


def _render(doc: dict[str, Any], cfg: RunConfig, report_to_out: bool = True) -> str:
    text = json.dumps(doc, sort_keys=True) if cfg.as_json else json.dumps(doc, sort_keys=True, indent=2)
    if report_to_out and cfg.out:
        Path(cfg.out).write_text(text + "\n")
    return text


# -- subcommands ----------------------------------------------------------------


def cmd_compute(cfg: RunConfig) -> tuple[dict, int]:
    index = cfg.options.get("index", "wiener")
    fn = INDICES[index]
    results = [{"graph6": to_graph6(g), "n": g.n, "m": g.m, "value": fn(g)} for g in _load_inputs(cfg)]
    return {"index": index, "results": results}, EXIT_OK


def cmd_family(cfg: RunConfig) -> tuple[dict, int]:
    if not cfg.spec:
        raise UsageError("family needs --spec TEXT")
    g = build(cfg.spec)
    if cfg.out:
        write_graph6(cfg.out, [g])
    return {"spec": cfg.spec, "graph6": to_graph6(g), "n": g.n, "m": g.m}, EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> tuple[dict, int]:
    what, graphs = _enumerated(cfg)
    limit = cfg.options.get("limit")
    shown = graphs if limit is None else graphs[:limit]
    if cfg.out:
        write_graph6(cfg.out, shown)
    doc = {"domain": what, "count": len(graphs), "graph6": [to_graph6(g) for g in shown]}
    if cfg.filter_text:
        doc["filter"] = parse_filter(cfg.filter_text).to_json()
    if cfg.options.get("trees") is not None:
        doc["oracle_count"] = tree_count(cfg.options["trees"])
    return doc, EXIT_OK


def cmd_verify(cfg: RunConfig) -> tuple[dict, int]:
    check = cfg.options.get("check")
    if check not in CHECK_IDS:
        raise UsageError(f"--check must be one of {', '.join(CHECK_IDS)}")
    r = cfg.options.get("r")
    if check in RANDOM_CHECKS:
        count = cfg.options.get("limit") or DEFAULT_RANDOM_COUNT
        instances = seeded_instances(check, count, cfg.seed, r=r)
        skip = False
    elif cfg.inputs or cfg.spec:
        instances, skip = _load_inputs(cfg), True
    else:
        _, instances = _enumerated(cfg)
        skip = True
    report = run_check(check, instances, r=r if check == "lin_factor" else None, skip_out_of_domain=skip)
    code = EXIT_OK if report.verdict in (Verdict.PASS, Verdict.SKIPPED) else EXIT_FAIL
    return report.to_dict(), code


def cmd_inverse(cfg: RunConfig) -> tuple[dict, int]:
    w = cfg.options.get("w")
    if w is None:
        raise UsageError("inverse needs --w W")
    res = inverse_wiener(w)
    if isinstance(res, InverseMiss):
        return {"w": w, "status": res.value}, EXIT_OK
    return {"w": w, "status": "FOUND", "graph6": to_graph6(res), "n": res.n}, EXIT_OK


def cmd_orient(cfg: RunConfig) -> tuple[dict, int]:
    mode = cfg.options.get("mode", "all")
    results = []
    for g in _load_inputs(cfg):
        doc = orientation_extremes(g, mode).to_dict()
        doc["graph6"] = to_graph6(g)
        results.append(doc)
    return {"mode": mode, "results": results}, EXIT_OK


def _conjecture_params(cfg: RunConfig) -> dict[str, Any]:
    o = cfg.options
    params: dict[str, Any] = {}
    if o.get("params"):
        try:
            params.update(json.loads(o["params"]))
        except json.JSONDecodeError as exc:
            raise UsageError(f"--params is not JSON: {exc}") from None
    if o.get("order") is not None:
        params["order"] = o["order"]
    if o.get("n") is not None:
        params["n"] = o["n"]
    return params


def cmd_conjecture(cfg: RunConfig) -> tuple[dict, int]:
    cid = cfg.options.get("id")
    if cid not in CONJECTURE_IDS:
        raise UsageError(f"--id must be one of {', '.join(CONJECTURE_IDS)}")
    report = run_conjecture(
        cid, _conjecture_params(cfg), threads=cfg.threads, checkpoint=cfg.options.get("checkpoint")
    )
    doc = report.to_dict()
    if cid in ("bicyclic_wlw",):
        doc["count"] = sum(u["count"] for u in report.units)
    code = EXIT_FAIL if report.verdict == ConjVerdict.COUNTEREXAMPLE else EXIT_OK
    return doc, code


def cmd_spectrum(cfg: RunConfig) -> tuple[dict, int]:
    o = cfg.options
    if o.get("trees") is not None:
        rep = wiener_spectrum(o["trees"], "trees")
    elif o.get("order") is not None:
        rep = wiener_spectrum(o["order"], "graphs", cfg.threads)
    else:
        raise UsageError("spectrum needs --trees N or --order N")
    return rep.to_dict(), EXIT_OK


COMMANDS = {
    "compute": cmd_compute,
    "family": cmd_family,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "inverse": cmd_inverse,
    "orient": cmd_orient,
    "conjecture": cmd_conjecture,
    "spectrum": cmd_spectrum,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="inputs", action="append", metavar="FILE", help="graph6 or edge-list file")
    common.add_argument("--spec", help="family spec such as H:3,2,4")
    common.add_argument("--filter", help="enumeration filter, e.g. m=7,bipartite")
    common.add_argument("--out", metavar="FILE")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--json", action="store_true", help="compact JSON output")
    common.add_argument("--limit", type=int)
    common.add_argument("--trees", type=int, metavar="N", help="all trees on N vertices")
    common.add_argument("--order", type=int, metavar="N", help="all connected graphs on N vertices")

    parser = _Parser(prog="wienerlab", description="Wiener index laboratory")
    parser.add_argument("--version", action="version", version=f"wienerlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("compute", parents=[common], help="evaluate an index")
    p.add_argument("--index", choices=sorted(INDICES), default="wiener")
    sub.add_parser("family", parents=[common], help="build a named family member")
    sub.add_parser("enumerate", parents=[common], help="list trees or connected graphs")
    p = sub.add_parser("verify", parents=[common], help="run a registered check")
    p.add_argument("--check", required=True)
    p.add_argument("--r", type=int, help="modulus parameter")
    p = sub.add_parser("inverse", parents=[common], help="find a tree with a given Wiener index")
    p.add_argument("--w", type=int, required=True)
    p = sub.add_parser("orient", parents=[common], help="extremal orientations")
    p.add_argument("--mode", choices=["all", "acyclic", "strong"], default="all")
    p = sub.add_parser("conjecture", parents=[common], help="run a conjecture sweep")
    p.add_argument("--id", required=True)
    p.add_argument("--n", type=int, help="single order for sweeps that accept one")
    p.add_argument("--params", help="JSON object of sweep parameters")
    p.add_argument("--checkpoint", metavar="FILE", help="JSON-lines file to resume from and append to")
    p = sub.add_parser("spectrum", parents=[common], help="Wiener spectrum of trees or graphs")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = RunConfig.from_args(args)
        doc, code = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"wienerlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (WienerLabError, ValueError, OSError) as exc:
        print(f"wienerlab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc = {"command": cfg.command, "seed": cfg.seed, **doc}
    report_to_out = cfg.command not in ("family", "enumerate")
    print(_render(doc, cfg, report_to_out))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
