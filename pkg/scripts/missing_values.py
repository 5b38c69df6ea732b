"""Wiener values not realised by any tree of diameter at most 4, and
inverse-problem witnesses for a range of targets."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from wienerlab import to_graph6, wiener
from wienerlab.search import InverseMiss, inverse_wiener, missing_diam4


@dataclass
class MissingConfig:
    limit: int = 1206
    witness_lo: int = 0
    witness_hi: int = 0


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--limit", type=int, default=MissingConfig.limit)
    ap.add_argument("--witnesses", type=int, nargs=2, metavar=("LO", "HI"), default=(0, 0))
    args = ap.parse_args()
    cfg = MissingConfig(args.limit, *args.witnesses)

    missing = missing_diam4(cfg.limit)
    print(f"{len(missing)} values <= {cfg.limit} missed by diameter-4 trees")
    print(" ".join(map(str, missing)))
    for w in range(cfg.witness_lo, cfg.witness_hi + 1):
        t = inverse_wiener(w)
        if isinstance(t, InverseMiss):
            print(w, t.value)
        else:
            assert wiener(t) == w
            print(w, t.n, to_graph6(t))


if __name__ == "__main__":
    main()
