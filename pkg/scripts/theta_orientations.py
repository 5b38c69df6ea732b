"""Compare the maximum Wiener index over all orientations of a theta graph
with the maximum over strong orientations only.

Exhaustive in 2^m orientations, so keep ``--total`` modest (16 takes
minutes).  Prints only the thetas where the two maxima differ unless
``--all`` is given.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from wienerlab.families import theta
from wienerlab.search import orientation_extremes


@dataclass
class ThetaConfig:
    total_min: int = 4
    total_max: int = 12
    c_max: int = 1
    show_all: bool = False


def sweep(cfg: ThetaConfig):
    for total in range(cfg.total_min, cfg.total_max + 1):
        for c in range(0, cfg.c_max + 1):
            for b in range(max(c, 1), total):
                a = total - b - c
                if a < b:
                    continue
                g = theta(a, b, c)
                full = orientation_extremes(g).w_max
                strong = orientation_extremes(g, "strong").w_max
                yield (a, b, c), full, strong


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--total", type=int, default=ThetaConfig.total_max, help="max a+b+c")
    ap.add_argument("--c-max", type=int, default=ThetaConfig.c_max)
    ap.add_argument("--all", action="store_true")
    args = ap.parse_args()
    cfg = ThetaConfig(total_max=args.total, c_max=args.c_max, show_all=args.all)
    for abc, full, strong in sweep(cfg):
        if cfg.show_all or full != strong:
            print(f"theta{abc}: W_max {full}, strong W_max {strong}", flush=True)


if __name__ == "__main__":
    main()
