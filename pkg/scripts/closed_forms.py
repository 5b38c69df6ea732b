"""Tables comparing closed forms with exact values: the 60-vertex-cap
nanotubes and the line-graph ratio W(L(G))/W(G) of stars, paths and
complete graphs."""

from __future__ import annotations

import argparse
from fractions import Fraction

from wienerlab import line_graph, wiener
from wienerlab.families import complete, nanotube60, path, star
from wienerlab.verify import ratio_formula

BUILDERS = {"star": star, "path": path, "complete": complete}


def nanotube_table(k_max: int) -> None:
    print("k      W  48k^3+828k-1632")
    for k in range(2, k_max + 1):
        print(f"{k:<2d} {wiener(nanotube60(k)):6d} {48 * k**3 + 828 * k - 1632:16d}")


def ratio_table(n_max: int) -> None:
    print("kind      n  exact      formula")
    for kind, build in BUILDERS.items():
        for n in range(3, n_max + 1):
            g = build(n)
            exact = Fraction(wiener(line_graph(g)), wiener(g))
            f = ratio_formula(kind, n)
            flag = "" if exact == f else "  <- differs"
            print(f"{kind:8s} {n:2d}  {str(exact):9s} {str(f):9s}{flag}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k-max", type=int, default=8)
    ap.add_argument("--n-max", type=int, default=10)
    args = ap.parse_args()
    nanotube_table(args.k_max)
    print()
    ratio_table(args.n_max)


if __name__ == "__main__":
    main()
