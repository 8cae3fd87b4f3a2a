"""Command line interface.

Exit codes: 0 ok, 1 violation or refusal, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from pathlib import Path

from .graph_core import GraphError, MultiGraph
from .graphio import ParseError, read_graph, write_edgelist, write_graph, parse_graph
from .matching_engine import BoundExceeded
from . import families, fixtures

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _load(path: str) -> MultiGraph:
    try:
        return read_graph(path)
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _fmt_pattern(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


# ---------------------------------------------------------------- analyze

def cmd_analyze(args) -> int:
    from .dependence import analyze
    from .matching_engine import is_matching_covered

    g = _load(args.path)
    if g.n % 2:
        raise UsageError(f"{args.path}: odd order {g.n}; no perfect matching exists")
    ok, why = is_matching_covered(g)
    if not ok:
        _emit(args, {"matching_covered": False, "reason": str(why)},
              f"not matching covered: {why}")
        return EXIT_FAIL
    a = analyze(g)
    payload = {
        "matching_covered": True,
        "n": g.n,
        "m": g.m,
        "pm_count": a.pm_count,
        "classes": [list(c) for c in a.classes],
        "hasse": sorted([i, j] for i, j in a.hasse),
        "minimal": sorted(a.minimal),
        "removable": sorted(a.removable),
        "solitary_classes": sorted(a.solitary),
        "solitary_edges": a.solitary_edges(),
        "pattern": list(a.pattern),
        "epsilon": a.epsilon,
    }
    lines = [
        f"vertices {g.n}, edges {g.m}",
        f"perfect matchings: {a.pm_count}",
        f"solitary edges: {' '.join(map(str, a.solitary_edges())) or '-'}",
        f"solitary pattern: {_fmt_pattern(a.pattern)}",
        f"epsilon: {a.epsilon}",
        "classes:",
    ]
    for i, c in enumerate(a.classes):
        tags = [t for t, s in (("solitary", a.solitary), ("minimal", a.minimal),
                               ("removable", a.removable)) if i in s]
        ends = " ".join(f"{u}-{v}" for u, v in (g.edges[e] for e in c))
        lines.append(f"  D{i}: edges {list(c)} [{ends}] {' '.join(tags)}".rstrip())
    lines.append("hasse (depending -> depended on):")
    for i, j in sorted(a.hasse):
        lines.append(f"  D{i} -> D{j}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------- rgraph

def cmd_rgraph(args) -> int:
    from .rgraph_tools import certify_rgraph, r_edge_coloring

    g = _load(args.path)
    cert = certify_rgraph(g)
    payload = {
        "ok": cert.ok, "r": cert.r, "min_odd_cut": cert.min_odd_cut,
        "three_edge_connected": cert.is_3ec, "reason": cert.reason,
        "witness": list(cert.witness) if cert.witness is not None else None,
    }
    lines = []
    if cert.ok:
        lines.append(f"{cert.r}-graph; minimum odd cut {cert.min_odd_cut}; "
                     f"{'3-edge-connected' if cert.is_3ec else 'not 3-edge-connected'}")
    else:
        lines.append(f"not an r-graph: {cert.reason}")
        if cert.witness is not None:
            lines.append(f"witness: {' '.join(map(str, cert.witness))}")
    if args.coloring and cert.r is not None:
        col = r_edge_coloring(g, cert.r)
        payload["coloring"] = list(col.color_of) if col is not None else None
        if col is None:
            lines.append(f"no proper {cert.r}-edge-colouring")
        else:
            lines.append(f"{cert.r}-edge-colouring: {' '.join(map(str, col.color_of))}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if cert.ok else EXIT_FAIL


# ---------------------------------------------------------------- decompose

def cmd_decompose(args) -> int:
    from .cut_structure import NotTwoConnected, decompose_2cuts

    g = _load(args.path)
    try:
        tree = decompose_2cuts(g, random.Random(args.seed) if args.seed is not None else None)
    except NotTwoConnected as exc:
        _emit(args, {"error": str(exc)}, f"cannot decompose: {exc}")
        return EXIT_FAIL
    leaves = tree.leaves()
    if args.pieces_dir:
        out = Path(args.pieces_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, h in enumerate(leaves):
            write_graph(h, out / f"piece_{i:03d}.txt")
    lines = [f"{len(leaves)} pieces"]

    def show(node, depth):
        pad = "  " * depth
        if node.is_leaf:
            lines.append(f"{pad}piece n={node.graph.n} m={node.graph.m}")
        else:
            lines.append(f"{pad}split n={node.graph.n} on edges {sorted(node.cut.edge_ids)}")
            for ch in node.children:
                show(ch, depth + 1)

    show(tree.root, 0)
    _emit(args, {"pieces": len(leaves), "tree": tree.to_dict()}, "\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------- generate

def _parse_trace(text: str):
    def rec(node):
        if "leaf" in node:
            return families.LLeaf(_graph_from_spec(node["leaf"]))
        return families.LGlue(rec(node["left"]), int(node["e1"]), rec(node["right"]), int(node["e2"]))

    try:
        return rec(json.loads(text))
    except (KeyError, ValueError, TypeError) as exc:
        raise UsageError(f"bad L trace: {exc}") from None


def _graph_from_spec(spec):
    if isinstance(spec, str) and spec in fixtures.NAMED:
        return fixtures.NAMED[spec]
    if isinstance(spec, str):
        return parse_graph(spec)
    raise UsageError(f"bad graph in trace: {spec!r}")


def cmd_generate(args) -> int:
    fam = args.family.lower().replace("-", "_")
    if fam == "theta":
        g = families.gen_theta()
    elif fam == "multiplied":
        g = families.gen_multiplied(args.base, *args.k, cap=args.cap)
    elif fam == "staircase1":
        g = families.gen_staircase1(args.n, args.t)
    elif fam == "staircase3":
        g = families.gen_staircase3(args.a, args.b, args.t)
    elif fam in ("s", "family_s"):
        g = families.gen_family_S(args.index)
    elif fam in ("d", "family_d"):
        g = families.gen_family_D(families.DTrace(args.a, args.b, tuple(args.steps)))
    elif fam in ("l", "family_l"):
        g = families.gen_family_L(_parse_trace(args.trace))
    elif fam in ("lr", "family_l_r"):
        g = families.gen_family_L_r(args.r, _parse_trace(args.trace))
    elif fam == "named":
        if args.name not in fixtures.NAMED:
            raise UsageError(f"unknown named graph {args.name!r}; known: {', '.join(sorted(fixtures.NAMED))}")
        g = fixtures.NAMED[args.name]
    else:
        raise UsageError(f"unknown family {args.family!r}")
    if args.out:
        write_graph(g, args.out)
    else:
        sys.stdout.write(write_edgelist(g))
    return EXIT_OK


# ---------------------------------------------------------------- classify

def cmd_classify(args) -> int:
    from .classifier import classify

    g = _load(args.path)
    try:
        rep = classify(g)
    except GraphError as exc:
        _emit(args, {"error": str(exc)}, f"cannot classify: {exc}")
        return EXIT_FAIL
    rg = rep.rgraph
    lines = [
        f"vertices {rep.n}, edges {rep.m}",
        f"r-graph: {'yes, r = %d' % rg.r if rg.ok else 'no (' + rg.reason + ')'}",
        f"3-edge-connected: {'yes' if rep.three_ec else 'no'}",
        f"matching covered: {'yes' if rep.matching_covered else 'no'}",
    ]
    if rep.pattern is not None:
        lines.append(f"solitary pattern: {_fmt_pattern(rep.pattern)}")
    if rep.family_matches is not None:
        lines.append(f"families: {', '.join(map(str, rep.family_matches)) or '-'}")
    lines.append(f"table row: {rep.theorem_row or '-'}")
    if rep.row_consistent is False:
        lines.append("WARNING: pattern row not confirmed by a family recogniser")
    if rep.decomposition is not None:
        lines.append(f"2-cut pieces: {len(rep.pieces) or 1}")
        for i, p in enumerate(rep.pieces):
            pat = _fmt_pattern(p.pattern) if p.pattern is not None else "-"
            lines.append(f"  piece {i}: n={p.n} pattern {pat} row {p.theorem_row or '-'}")
        if rep.derived_solitary is not None:
            lines.append(f"solitary edges rebuilt from pieces: {list(rep.derived_solitary)}")
    for note in rep.notes:
        lines.append(f"note: {note}")
    _emit(args, rep.to_dict(), "\n".join(lines))
    return EXIT_FAIL if rep.row_consistent is False else EXIT_OK


# ---------------------------------------------------------------- verify

def _corpus_from_args(args) -> list:
    from .classifier import exhaustive_small_corpus, generated_members

    items = []
    if args.corpus:
        root = Path(args.corpus)
        if not root.is_dir():
            raise UsageError(f"corpus directory not found: {root}")
        for p in sorted(root.iterdir()):
            if p.is_file() and p.suffix in (".txt", ".el", ".s6", ".edgelist"):
                items.append((p.name, _load(str(p))))
    if args.exhaustive:
        n, r = args.exhaustive
        items += [(f"r{r}n{g.n}#{i}", g) for i, g in enumerate(exhaustive_small_corpus(n, r))]
    if args.fixtures:
        items += list(fixtures.NAMED.items())
    if args.families:
        items += generated_members()
    if not items:
        raise UsageError("no corpus given (use --corpus, --exhaustive, --fixtures or --families)")
    return items


def cmd_verify(args) -> int:
    from .classifier import CHECKS, resolve_check, verify

    if args.check == "list":
        for name, (_, desc) in CHECKS.items():
            print(f"{name:26s} {desc}")
        return EXIT_OK
    names = list(CHECKS) if args.check == "all" else None
    try:
        names = names or [resolve_check(args.check)]
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    corpus = _corpus_from_args(args)
    reports = [verify(nm, corpus, shuffles=args.shuffles, workers=args.workers) for nm in names]
    bad = [v for r in reports for v in r.violations]
    if args.witness_dir and bad:
        out = Path(args.witness_dir)
        out.mkdir(parents=True, exist_ok=True)
        for r in reports:
            for v in r.violations:
                write_graph(v.graph, out / f"{r.check}_{v.index:05d}.txt")
    lines = []
    for r in reports:
        status = "ok" if r.ok else f"{len(r.violations)} VIOLATIONS"
        lines.append(f"{r.check:26s} checked {r.checked:5d} applicable {r.applicable:5d} "
                     f"skipped {r.skipped:4d}  {status}")
        for v in r.violations[:5]:
            lines.append(f"    {v.label}: {v.message}  (implementation bug alarm)")
    _emit(args, {"reports": [r.to_dict() for r in reports]}, "\n".join(lines))
    return EXIT_FAIL if bad else EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mcgraphs", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="perfect matchings, dependence classes and solitary pattern")
    a.add_argument("path", help="graph file (edgelist-m or sparse6); '-' for stdin")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    a = sub.add_parser("rgraph", help="r-graph certificate or refusal witness")
    a.add_argument("path")
    a.add_argument("--coloring", action="store_true", help="also emit an r-edge-colouring")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_rgraph)

    a = sub.add_parser("decompose", help="even 2-cut decomposition tree")
    a.add_argument("path")
    a.add_argument("--pieces-dir", help="write the pieces to this directory")
    a.add_argument("--seed", type=int, help="pick cuts at random with this seed")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_decompose)

    a = sub.add_parser("generate", help="emit a family member as edgelist-m")
    a.add_argument("family", help="theta, multiplied, staircase1, staircase3, family-s, "
                                  "family-d, family-l, family-l-r or named")
    a.add_argument("--n", type=int)
    a.add_argument("--t", type=int, default=1)
    a.add_argument("--a", type=int)
    a.add_argument("--b", type=int)
    a.add_argument("--r", type=int)
    a.add_argument("--index", type=int)
    a.add_argument("--base", choices=["theta", "K4", "C6bar", "C4"])
    a.add_argument("--k", type=int, nargs="+", default=[1, 1, 1])
    a.add_argument("--cap", type=int)
    a.add_argument("--steps", type=int, nargs="*", default=[])
    a.add_argument("--trace", help="L trace as JSON: {leaf: name|edgelist} or {left, e1, right, e2}")
    a.add_argument("--name", help="named fixture graph")
    a.add_argument("--out")
    a.set_defaults(func=cmd_generate)

    a = sub.add_parser("classify", help="pattern, table row, families and 2-cut pieces")
    a.add_argument("path")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_classify)

    a = sub.add_parser("verify", help="run a structural check over a corpus ('list' shows checks)")
    a.add_argument("check", help="check name, 'all' or 'list'")
    a.add_argument("--corpus", help="directory of graph files")
    a.add_argument("--exhaustive", type=int, nargs=2, metavar=("N", "R"))
    a.add_argument("--fixtures", action="store_true", help="include the named fixtures")
    a.add_argument("--families", action="store_true", help="include generated family members")
    a.add_argument("--shuffles", type=int, default=5)
    a.add_argument("--workers", type=int, default=1)
    a.add_argument("--witness-dir", help="write violating graphs here")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BoundExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE if args.command == "generate" else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
