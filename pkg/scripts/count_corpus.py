"""Count the exhaustive regular multigraph corpora by order."""

import argparse
from collections import Counter

from mcgraphs.classifier import exhaustive_small_corpus


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cubic-max-n", type=int, default=10)
    ap.add_argument("--quartic-max-n", type=int, default=8)
    args = ap.parse_args()
    for r, max_n in ((3, args.cubic_max_n), (4, args.quartic_max_n)):
        graphs = list(exhaustive_small_corpus(max_n, r))
        total = Counter(g.n for g in graphs)
        simple = Counter(g.n for g in graphs if g.is_simple())
        print(f"r = {r}")
        print(f"  {'n':>3} {'all':>6} {'simple':>6}")
        for n in sorted(total):
            print(f"  {n:>3} {total[n]:>6} {simple[n]:>6}")


if __name__ == "__main__":
    main()
