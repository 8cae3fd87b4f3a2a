"""Run every structural check over the harness corpus and print a summary.

Exit status is 1 if any check reports a violation.
"""

import argparse
import dataclasses
import json
import logging
import sys
import time

from mcgraphs.classifier import CHECKS, HarnessConfig, build_corpus, resolve_check, verify


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = HarnessConfig()
    for f in dataclasses.fields(HarnessConfig):
        flag = "--" + f.name.replace("_", "-")
        if f.type in (bool, "bool"):
            ap.add_argument(flag, action=argparse.BooleanOptionalAction, default=getattr(defaults, f.name))
        else:
            ap.add_argument(flag, type=int, default=getattr(defaults, f.name))
    ap.add_argument("--check", action="append", help="check name (repeatable); default all")
    ap.add_argument("--json", help="write the reports to this file")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    cfg = HarnessConfig(**{f.name: getattr(args, f.name) for f in dataclasses.fields(HarnessConfig)})
    t0 = time.perf_counter()
    corpus = build_corpus(cfg)
    logging.info("corpus: %d graphs in %.1fs", len(corpus), time.perf_counter() - t0)

    names = [resolve_check(c) for c in args.check] if args.check else list(CHECKS)
    reports = []
    for name in names:
        t0 = time.perf_counter()
        rep = verify(name, corpus, shuffles=cfg.shuffles, workers=cfg.workers)
        reports.append(rep)
        status = "ok" if rep.ok else f"{len(rep.violations)} VIOLATIONS"
        print(f"{name:26s} applicable {rep.applicable:4d} skipped {rep.skipped:3d} "
              f"{time.perf_counter() - t0:6.2f}s  {status}")
        for v in rep.violations[:5]:
            print(f"    {v.label}: {v.message}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"config": dataclasses.asdict(cfg), "reports": [r.to_dict() for r in reports]},
                      fh, indent=2)
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
