"""Write every named fixture graph to fixtures/<name>.txt as edgelist-m."""

import argparse
import re
from pathlib import Path

from mcgraphs.fixtures import NAMED
from mcgraphs.graphio import write_graph


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "fixtures"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, g in sorted(NAMED.items()):
        path = out / (re.sub(r"[^A-Za-z0-9_.-]", "_", name) + ".txt")
        write_graph(g, path)
    print(f"wrote {len(NAMED)} graphs to {out}")


if __name__ == "__main__":
    main()
