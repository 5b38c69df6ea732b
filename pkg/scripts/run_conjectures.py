"""Run conjecture sweeps with their default parameters, checkpointing each
unit so that an interrupted run resumes where it stopped.

    python3 scripts/run_conjectures.py --out results/ cubic_max theta_cycle_max
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass, field
from pathlib import Path

from wienerlab.search import CONJECTURE_IDS, run_conjecture


@dataclass
class SweepConfig:
    out: Path
    ids: list[str] = field(default_factory=lambda: list(CONJECTURE_IDS))
    params: dict = field(default_factory=dict)
    threads: int = 1


def run(cfg: SweepConfig) -> dict[str, str]:
    cfg.out.mkdir(parents=True, exist_ok=True)
    verdicts = {}
    for cid in cfg.ids:
        t0 = time.time()
        report = run_conjecture(
            cid, cfg.params.get(cid), threads=cfg.threads, checkpoint=cfg.out / f"{cid}.jsonl"
        )
        (cfg.out / f"{cid}.json").write_text(report.to_json() + "\n")
        verdicts[cid] = report.verdict.value
        print(f"{cid:26s} {report.verdict.value:15s} {time.time() - t0:8.1f}s", flush=True)
    return verdicts


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("ids", nargs="*", default=list(CONJECTURE_IDS), choices=[[], *CONJECTURE_IDS], metavar="ID")
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--params", type=json.loads, default={}, help='JSON, e.g. {"cubic_max": {"n": [10]}}')
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    run(SweepConfig(args.out, args.ids or list(CONJECTURE_IDS), args.params, args.threads))


if __name__ == "__main__":
    main()
