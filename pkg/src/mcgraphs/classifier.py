"""Classification of r-graphs by solitary pattern, the small exhaustive
corpus, and a harness that checks the structural results on a corpus."""

from __future__ import annotations

import dataclasses
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .graph_core import (
    CANONICAL_LIMIT,
    GraphError,
    MultiGraph,
    TooLarge,
    canonical_form,
    cut_of,
    edge_connectivity,
    edge_distance,
    from_canonical,
    is_3_connected_cubic,
    is_isomorphic,
    is_k_connected,
    popcount,
)
from .matching_engine import (
    BoundExceeded,
    companion_of,
    enumerate_pms,
    is_matching_covered,
    is_uniquely_matchable,
    kotzig_1cut,
)
from .dependence import DependenceAnalysis, analyze, classes_across_2cut, mutually_exclusive
from .cut_structure import (
    DecompositionTree,
    classify_brick_brace,
    decompose_2cuts,
    find_even_2cuts,
    lovasz_doubleton_check,
    marked_components,
)
from .rgraph_tools import (
    RGraphCertificate,
    all_r_edge_colorings,
    certify_rgraph,
    rainbow_triangles,
    r_edge_coloring,
)
from . import families

log = logging.getLogger(__name__)

CUBIC_PATTERNS = {(2, 2, 2), (2, 2, 1), (2, 2), (2, 1, 1), (2, 1), (1, 1, 1), (1, 1), (2,), (1,), ()}
HIGHER_PATTERNS = {(2, 2), (2, 1), (1, 1), (2,), (1,), ()}

# pattern -> (row label, families any of which certifies the row)
TABLE_ROWS = {
    (2, 2, 2): ("K4, C6bar", {"K4_i", "C6bar_1"}),
    (2, 2, 1): ("R8", {"R8"}),
    (2, 2): ("staircases of order ten or more", {"Staircase1", "K4_i"}),
    (2, 1, 1): ("N10", {"N10"}),
    (2, 1): ("3-staircases of order twelve or more", {"Staircase3"}),
    (1, 1, 1): ("family S", {"FamilyS"}),
    (2,): ("family D", {"FamilyD"}),
}


# ---------------------------------------------------------------- corpus

def _cubic_children(g: MultiGraph) -> Iterator[MultiGraph]:
    n, edges = g.n, list(g.edges)
    x, y = n, n + 1
    for i, j in combinations(range(len(edges)), 2):
        (a, b), (c, d) = edges[i], edges[j]
        rest = [e for k, e in enumerate(edges) if k not in (i, j)]
        yield MultiGraph(n + 2, tuple(rest + [(a, x), (x, b), (c, y), (y, d), (x, y)]))
    for i, (a, b) in enumerate(edges):
        rest = edges[:i] + edges[i + 1:]
        yield MultiGraph(n + 2, tuple(rest + [(a, x), (x, y), (x, y), (y, b)]))
    yield MultiGraph(n + 2, tuple(edges + [(x, y)] * 3))


def _quartic_children_one(g: MultiGraph) -> Iterator[MultiGraph]:
    n, edges = g.n, list(g.edges)
    for i, j in combinations(range(len(edges)), 2):
        (a, b), (c, d) = edges[i], edges[j]
        rest = [e for k, e in enumerate(edges) if k not in (i, j)]
        yield MultiGraph(n + 1, tuple(rest + [(n, a), (n, b), (n, c), (n, d)]))


def _quartic_children_two(g: MultiGraph) -> Iterator[MultiGraph]:
    n, edges = g.n, list(g.edges)
    x, y = n, n + 1
    for i, (a, b) in enumerate(edges):
        rest = edges[:i] + edges[i + 1:]
        yield MultiGraph(n + 2, tuple(rest + [(a, x)] + [(x, y)] * 3 + [(y, b)]))


def _dedupe(graphs: Iterable[MultiGraph]) -> set[bytes]:
    return {canonical_form(h) for h in graphs}


def _cubic_levels(max_n: int) -> dict[int, list[MultiGraph]]:
    # every loopless cubic multigraph, connected or not, reduces to a smaller
    # one by undoing one of the three growth moves, so the closure is complete
    graphs: dict[int, list[MultiGraph]] = {0: [MultiGraph(0, ())]}
    for n in range(2, max_n + 1, 2):
        seen: set[bytes] = set()
        out = []
        for g in graphs[n - 2]:
            for h in _cubic_children(g):
                key = canonical_form(h)
                if key not in seen:
                    seen.add(key)
                    out.append(from_canonical(key))
        graphs[n] = sorted(out, key=canonical_form)
    return graphs


def _quartic_levels(max_n: int) -> dict[int, list[MultiGraph]]:
    # connected loopless 4-regular multigraphs other than the quadruple edge
    # always have a vertex or triple edge whose removal reverses a move
    graphs: dict[int, list[MultiGraph]] = {1: [], 2: [MultiGraph(2, ((0, 1),) * 4)]}
    for n in range(3, max_n + 1):
        seen: set[bytes] = set()
        out = []
        sources = [(_quartic_children_one, graphs[n - 1]), (_quartic_children_two, graphs[n - 2])]
        for step, pool in sources:
            for g in pool:
                for h in step(g):
                    key = canonical_form(h)
                    if key not in seen:
                        seen.add(key)
                        out.append(from_canonical(key))
        graphs[n] = sorted(out, key=canonical_form)
    return graphs


def exhaustive_small_corpus(max_n: int, r: int = 3) -> Iterator[MultiGraph]:
    """All connected loopless r-regular multigraphs with n <= max_n, one per
    isomorphism class, by increasing order."""
    if r == 3:
        if max_n > 10:
            raise BoundExceeded("cubic corpus limited to n <= 10")
        levels = _cubic_levels(max_n)
        orders = range(2, max_n + 1, 2)
        pick = lambda n: [g for g in levels[n] if g.is_connected()]
    elif r == 4:
        if max_n > 8:
            raise BoundExceeded("4-regular corpus limited to n <= 8")
        levels = _quartic_levels(max_n)
        orders = range(2, max_n + 1)
        pick = lambda n: levels[n]
    else:
        raise ValueError("corpus generation supports r = 3 and r = 4")
    for n in orders:
        batch = pick(n)
        log.info("r=%d n=%d: %d graphs", r, n, len(batch))
        yield from batch


def generated_members(max_n: int = 14, max_t: int = 3, d_max_n: int = 20,
                      d_limit: int | None = 40) -> list[tuple[str, MultiGraph]]:
    """Family members used alongside the exhaustive corpus."""
    out = [(str(spec), g) for spec, g in families.generated_corpus(max_n, max_t)]
    for tr in families.family_D_traces(d_max_n, limit=d_limit):
        out.append((f"FamilyD{(tr.a, tr.b, tr.steps)}", families.gen_family_D(tr)))
    return out


# ---------------------------------------------------------------- classify

@dataclasses.dataclass
class ClassificationReport:
    n: int
    m: int
    rgraph: RGraphCertificate
    three_ec: bool
    matching_covered: bool
    pattern: tuple[int, ...] | None
    solitary_classes: tuple[tuple[int, ...], ...] = ()
    family_matches: list | None = None
    theorem_row: str | None = None
    row_consistent: bool | None = None
    decomposition: DecompositionTree | None = None
    pieces: tuple = ()
    derived_solitary: tuple[int, ...] | None = None
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        rg = self.rgraph
        return {
            "n": self.n,
            "m": self.m,
            "rgraph": {
                "ok": rg.ok, "r": rg.r, "min_odd_cut": rg.min_odd_cut, "reason": rg.reason,
                "witness": list(rg.witness) if rg.witness is not None else None,
            },
            "three_edge_connected": self.three_ec,
            "matching_covered": self.matching_covered,
            "pattern": list(self.pattern) if self.pattern is not None else None,
            "solitary_classes": [list(c) for c in self.solitary_classes],
            "family_matches": [str(s) for s in self.family_matches] if self.family_matches is not None else None,
            "theorem_row": self.theorem_row,
            "row_consistent": self.row_consistent,
            "decomposition": self.decomposition.to_dict() if self.decomposition is not None else None,
            "pieces": [p.to_dict() for p in self.pieces],
            "derived_solitary": list(self.derived_solitary) if self.derived_solitary is not None else None,
            "notes": list(self.notes),
        }


def table_row(pattern: tuple[int, ...], r: int | None) -> str | None:
    row = TABLE_ROWS.get(pattern)
    if row is None or (pattern == (2,) and r != 3):
        return None
    return f"({','.join(map(str, pattern))}) -> {row[0]}"


def derive_solitary_across_2cut(g: MultiGraph, cut) -> tuple[int, ...]:
    """Solitary edges of an r-graph with one solitary class, rebuilt from its
    marked components: the cut lies in the class exactly when both markers
    are solitary, and an edge e of one component joins the class when it is
    solitary there, depends on that marker, and the other marker is
    solitary."""
    comps = marked_components(g, cut)
    subs = [analyze(c.graph) for c in comps]
    sol = [set(s.solitary_edges()) for s in subs]
    marker_sol = [c.marker_edge in sol[i] for i, c in enumerate(comps)]
    out = set(cut.edge_ids) if all(marker_sol) else set()
    for i, c in enumerate(comps):
        if not marker_sol[1 - i]:
            continue
        a = subs[i]
        mk = a.class_of[c.marker_edge]
        for e in sol[i]:
            if e != c.marker_edge and a.depends_on(a.class_of[e], mk):
                out.add(c.edge_map[e])
    return tuple(sorted(out))


def classify(g: MultiGraph, decompose: bool = True) -> ClassificationReport:
    if g.n < 1 or not g.is_connected():
        raise GraphError("classification needs a connected graph")
    cert = certify_rgraph(g)
    three_ec = g.n >= 2 and edge_connectivity(g) >= 3
    mc, why = is_matching_covered(g) if g.n % 2 == 0 else (False, "odd order")
    notes = []
    if not mc:
        notes.append(f"not matching covered: {why}")
        return ClassificationReport(g.n, g.m, cert, three_ec, False, None, notes=tuple(notes))
    an = analyze(g)
    rep = ClassificationReport(g.n, g.m, cert, three_ec, True, an.pattern,
                               tuple(an.solitary_classes()))
    try:
        rep.family_matches = families.recognize(g)
    except TooLarge:
        notes.append(f"family recognition skipped above n = {CANONICAL_LIMIT}")
    r = cert.r
    if cert.ok and three_ec and g.n >= 4:
        rep.theorem_row = table_row(an.pattern, r)
        if rep.theorem_row is not None and rep.family_matches is not None:
            want = TABLE_ROWS[an.pattern][1]
            rep.row_consistent = bool(want & families.family_names(rep.family_matches))
        elif rep.theorem_row is None:
            notes.append("pattern has no characterised row")
    if decompose and not three_ec and g.n >= 4 and is_k_connected(g, 2):
        tree = decompose_2cuts(g)
        rep.decomposition = tree
        if tree.root.cut is not None:
            rep.pieces = tuple(classify(h, decompose=False) for h in tree.leaves())
            if cert.ok and len(an.solitary) <= 1:
                rep.derived_solitary = derive_solitary_across_2cut(g, tree.root.cut)
    rep.notes = tuple(notes)
    return rep


# ---------------------------------------------------------------- verify

@dataclasses.dataclass
class Violation:
    index: int
    label: str
    message: str
    graph: MultiGraph


@dataclasses.dataclass
class VerifyReport:
    check: str
    checked: int = 0
    applicable: int = 0
    skipped: int = 0
    violations: list = dataclasses.field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        from .graphio import write_edgelist

        return {
            "check": self.check, "checked": self.checked, "applicable": self.applicable,
            "skipped": self.skipped, "ok": self.ok,
            "violations": [{"index": v.index, "label": v.label, "message": v.message,
                            "graph": write_edgelist(v.graph)} for v in self.violations],
        }


class _Ctx:
    """Lazily computed facts about one corpus graph."""

    def __init__(self, g: MultiGraph, shuffles: int = 5):
        self.g = g
        self.shuffles = shuffles
        self._cache = {}

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def cert(self) -> RGraphCertificate:
        return self._get("cert", lambda: certify_rgraph(self.g))

    @property
    def r(self):
        return self.cert.r

    @property
    def rgraph(self) -> bool:
        return self.cert.ok

    @property
    def three_ec(self) -> bool:
        return self._get("3ec", lambda: self.g.n >= 2 and self.g.is_connected()
                         and edge_connectivity(self.g) >= 3)

    @property
    def mc(self) -> bool:
        return self._get("mc", lambda: self.g.n % 2 == 0 and is_matching_covered(self.g)[0])

    @property
    def an(self) -> DependenceAnalysis:
        return self._get("an", lambda: analyze(self.g))

    @property
    def names(self) -> set[str]:
        return self._get("names", lambda: families.family_names(families.recognize(self.g)))

    @property
    def specs(self):
        return self._get("specs", lambda: families.recognize(self.g))

    @property
    def solitary(self) -> list[int]:
        return self.an.solitary_edges()


def _fmt(pattern) -> str:
    return "(" + ",".join(map(str, pattern)) + ")"


def _check_bounds(c: _Ctx):
    if not (c.rgraph and c.three_ec and c.g.n >= 4):
        return None
    p = c.an.pattern
    r = c.r
    allowed = CUBIC_PATTERNS if r == 3 else HIGHER_PATTERNS
    cap_edges, cap_classes = (6, 3) if r == 3 else (4, 2)
    if sum(p) > cap_edges or len(p) > cap_classes or any(k > 2 for k in p) or p not in allowed:
        return f"pattern {_fmt(p)} breaks the bound for r = {r}"
    return ""


def _check_half_order_exceptions(c: _Ctx):
    if not c.rgraph:
        return None
    many = len(c.solitary) > c.g.n // 2
    exc = families.in_thm_exception_set(c.g)
    if many != exc:
        return f"{len(c.solitary)} solitary edges, exceptional member: {exc}"
    return ""


def _check_multiple_doubletons(c: _Ctx):
    if not (c.rgraph and c.three_ec and c.g.n >= 4):
        return None
    doubles = sum(1 for cl in c.an.solitary_classes() if len(cl) == 2)
    member = False
    for s in c.specs:
        if s.family == "K4_i" and sum(k > 1 for k in s.params) <= 1:
            member = True
        if s.family in ("Staircase1", "C6bar_1"):
            member = True
    if (doubles >= 2) != member:
        return f"{doubles} solitary doubletons, staircase/K4 member: {member}"
    return ""


def _check_doubleton_and_singleton(c: _Ctx):
    if not (c.rgraph and c.three_ec and c.g.n >= 4):
        return None
    p = c.an.pattern
    has = 2 in p and 1 in p
    member = "Staircase3" in c.names
    if has != member:
        return f"pattern {_fmt(p)}, 3-staircase member: {member}"
    return ""


def _check_three_singletons(c: _Ctx):
    if not (c.rgraph and c.three_ec):
        return None
    is_theta = c.g.n == 2 and c.g.m == 3
    member = is_theta or "FamilyS" in c.names
    if (c.an.pattern == (1, 1, 1)) != member:
        return f"pattern {_fmt(c.an.pattern)}, member of S or theta: {member}"
    return ""


def _check_pattern_two_cubic(c: _Ctx):
    if not (c.g.regular_degree() == 3 and c.g.is_connected() and is_3_connected_cubic(c.g)):
        return None
    chain = families.reconstruct_D_chain(c.g)
    if (c.an.pattern == (2,)) != (chain is not None):
        return f"pattern {_fmt(c.an.pattern)}, splice chain found: {chain is not None}"
    return ""


def _solitary_pairs(c: _Ctx):
    ms = enumerate_pms(c.g)
    return ms, list(combinations(c.solitary, 2))


def _check_distance_exclusive(c: _Ctx):
    if not (c.rgraph and c.three_ec):
        return None
    ms, pairs = _solitary_pairs(c)
    for e, f in pairs:
        if mutually_exclusive(ms, e, f) and edge_distance(c.g, e, f) > 1:
            return f"exclusive solitary edges {e}, {f} at distance {edge_distance(c.g, e, f)}"
    return ""


def _check_distance_singleton(c: _Ctx):
    if not (c.rgraph and c.three_ec and c.g.n >= 4):
        return None
    an = c.an
    singles = {an.classes[i][0] for i in an.solitary if len(an.classes[i]) == 1}
    for e, f in combinations(c.solitary, 2):
        if (e in singles or f in singles) and edge_distance(c.g, e, f) != 1:
            return f"solitary edges {e}, {f} with a singleton at distance {edge_distance(c.g, e, f)}"
    return ""


def _check_distance_three(c: _Ctx):
    if not (c.rgraph and c.three_ec):
        return None
    if c.an.pattern == (2,):
        return ""
    for e, f in combinations(c.solitary, 2):
        d = edge_distance(c.g, e, f)
        if d > 3:
            return f"solitary edges {e}, {f} at distance {d} with pattern {_fmt(c.an.pattern)}"
    return ""


def _check_decomposition_unique(c: _Ctx):
    g = c.g
    if g.n < 4 or not g.is_connected() or not is_k_connected(g, 2) or not find_even_2cuts(g):
        return None
    ref = decompose_2cuts(g).leaf_multiset()
    for seed in range(c.shuffles):
        got = decompose_2cuts(g, random.Random(seed)).leaf_multiset()
        if got != ref:
            return f"shuffled run {seed} produced a different list of pieces"
    return ""


def _check_half_order_class(c: _Ctx):
    if not c.mc:
        return None
    g = c.g
    half = 2 * c.an.epsilon == g.n
    is_k2 = g.n == 2 and g.m == 1
    rebuilt = is_k2 or families.reconstruct_L_trace(g) is not None
    if half != rebuilt:
        return f"epsilon = {c.an.epsilon}, L-trace found: {rebuilt}"
    return ""


def _check_rgraph_half_order(c: _Ctx):
    if not (c.rgraph and c.g.n >= 6):
        return None
    g = c.g
    sol = c.solitary
    s1 = 2 * c.an.epsilon == g.n
    s2 = families.reconstruct_L_r_trace(g) is not None
    covered = 0
    for e in sol:
        covered |= g.edge_masks[e]
    s3 = len(sol) == g.n // 2 and covered == (1 << g.n) - 1
    s4 = len(sol) == g.n // 2
    if len({s1, s2, s3}) != 1:
        return f"statements disagree: {s1} {s2} {s3}"
    if s4 != s1 and not is_half_count_exception(g):
        return f"{len(sol)} solitary edges but epsilon = {c.an.epsilon}"
    return ""


def is_half_count_exception(g: MultiGraph) -> bool:
    """Order-8 staircases of thickness two or more: two solitary doubletons
    give exactly n/2 solitary edges although no class has n/2 edges."""
    r = g.regular_degree()
    if g.n != 8 or r is None or r < 4:
        return False
    return is_isomorphic(g, families.gen_staircase1(8, r - 2))


def _check_rainbow_triangle_bound(c: _Ctx):
    if not c.rgraph:
        return None
    g, r = c.g, c.r
    tris = rainbow_triangles(g, r)
    if not tris:
        return None
    k_best = min(sum(g.multiplicity(x, y) == 1 for x, y in ((a, b), (b, d), (a, d))) for a, b, d in tris)
    if len(c.an.solitary) > k_best:
        return f"{len(c.an.solitary)} solitary classes but a triangle with {k_best} simple edges"
    return ""


def _check_two_classes_3connected(c: _Ctx):
    if not c.rgraph:
        return None
    if len(c.an.solitary) >= 2 and not is_k_connected(c.g, 3):
        return "two solitary classes in a graph that is not 3-connected"
    return ""


def _check_at_most_r_classes(c: _Ctx):
    if not c.rgraph:
        return None
    if len(c.an.solitary) > c.r:
        return f"{len(c.an.solitary)} solitary classes exceed r = {c.r}"
    return ""


def _check_solitary_brick(c: _Ctx):
    if not (c.rgraph and c.three_ec and c.g.n >= 4 and c.solitary):
        return None
    if c.g.n > 16:
        raise BoundExceeded("brick test limited to n <= 16")
    v = classify_brick_brace(c.g)
    if v.kind != "brick":
        return f"graph with a solitary edge is {v.kind}"
    for cl in c.an.solitary_classes():
        if len(cl) == 2 and not lovasz_doubleton_check(c.g, cl[0], cl[1]):
            return f"deleting doubleton {cl} does not leave the expected bipartite graph"
    return ""


def _check_two_cut_single_class(c: _Ctx):
    if not c.rgraph or c.three_ec:
        return None
    g = c.g
    an = c.an
    if len(an.solitary) > 1:
        return f"{len(an.solitary)} solitary classes without 3-edge-connectivity"
    if not an.solitary:
        return ""
    ms = enumerate_pms(g)
    cls = an.classes[next(iter(an.solitary))]
    pm = set(ms.matchings[ms.incidence[cls[0]].bit_length() - 1])
    for cut in find_even_2cuts(g):
        if not cut.edge_ids <= pm:
            return f"2-cut {sorted(cut.edge_ids)} escapes the matching of the solitary class"
    # the class rebuilt from each pair of marked components
    for cut in find_even_2cuts(g):
        if set(derive_solitary_across_2cut(g, cut)) != set(c.solitary):
            return f"solitary edges rebuilt across {sorted(cut.edge_ids)} disagree"
    return ""


def _check_class_transfer(c: _Ctx):
    if not c.mc or c.g.n < 4:
        return None
    cuts = find_even_2cuts(c.g)
    if not cuts:
        return None
    for cut in cuts:
        try:
            marked_components(c.g, cut)
        except GraphError:
            continue
        t = classes_across_2cut(c.g, cut)
        if not t.consistent:
            return f"classes do not transfer across {sorted(cut.edge_ids)}"
    return ""


def _check_solitary_deletion(c: _Ctx):
    if not c.mc:
        return None
    ms = enumerate_pms(c.g)
    for e, (u, v) in enumerate(c.g.edges):
        solitary = popcount(ms.incidence[e]) == 1
        h = c.g.delete_vertices([u, v])[0]
        if solitary != is_uniquely_matchable(h):
            return f"edge {e}: solitary {solitary} but deletion test disagrees"
    return ""


def _check_parity(c: _Ctx):
    g = c.g
    if g.n % 2 or g.n < 2 or not c.mc:
        return None
    ms = enumerate_pms(g)
    rng = random.Random(g.n * 1000 + g.m)
    shores = {rng.getrandbits(g.n) for _ in range(32)} | {1, (1 << g.n) - 1}
    for x in shores:
        cut = cut_of(g, x)
        for pm in ms.matchings:
            if len(cut.edge_ids.intersection(pm)) % 2 != popcount(x) % 2:
                return f"matching {pm} meets cut of shore {x:#x} with the wrong parity"
        if all(g.degree(v) % 2 for v in range(g.n) if (x >> v) & 1):
            if cut.size % 2 != popcount(x) % 2:
                return f"odd-degree shore {x:#x} has cut size of the wrong parity"
    return ""


def _check_kotzig(c: _Ctx):
    if not c.mc:
        return None
    for e in c.solitary:
        u, v = c.g.edges[e]
        h = c.g.delete_vertices([u, v])[0]
        if h.m and h.n and kotzig_1cut(h) is None:
            return f"uniquely matchable G-u-v for edge {e} has no odd bridge"
    return ""


def _check_coloring(c: _Ctx):
    if not (c.rgraph and c.solitary):
        return None
    col = r_edge_coloring(c.g, c.r)
    if col is None:
        return "r-graph with a solitary edge has no proper r-edge-colouring"
    if len(c.an.solitary) >= c.r - 1 and c.g.n <= 10:
        allc = all_r_edge_colorings(c.g, c.r)
        if len(allc) != 1:
            return f"{len(allc)} colourings although there are {len(c.an.solitary)} solitary classes"
    return ""


def _check_companion(c: _Ctx):
    if not (c.rgraph and c.three_ec and c.g.n >= 4):
        return None
    for e in c.solitary:
        cert = companion_of(c.g, e)
        if cert.cut_C.size != c.r or cert.cut_D.size != c.r:
            return f"companion cuts of edge {e} are not r-cuts"
        if cert.cut_C.edge_ids & cert.cut_D.edge_ids != {cert.companion}:
            return f"companion cuts of edge {e} do not meet in the companion"
        if not cert.unique:
            return f"edge {e} has more than one companion"
    return ""


def _check_table_rows(c: _Ctx):
    if not (c.rgraph and c.three_ec and c.g.n >= 4):
        return None
    rep = classify(c.g, decompose=False)
    if rep.row_consistent is False:
        return f"pattern {_fmt(rep.pattern)} row {rep.theorem_row!r} without a family match"
    return ""


CHECKS: dict[str, tuple[Callable[[_Ctx], str | None], str]] = {
    "solitary_bounds": (_check_bounds, "3-ec r-graphs: at most 3 (r=3) / 2 classes, class sizes 1 or 2, listed patterns"),
    "half_order_exceptions": (_check_half_order_exceptions, "more than n/2 solitary edges only in theta^1, K4^1, C6bar^1, R8"),
    "multiple_doubletons": (_check_multiple_doubletons, "two or more solitary doubletons iff K4^1 member or staircase"),
    "doubleton_and_singleton": (_check_doubleton_and_singleton, "a doubleton and a singleton iff 3-staircase"),
    "three_singletons": (_check_three_singletons, "pattern (1,1,1) iff family S or theta"),
    "pattern_two_cubic": (_check_pattern_two_cubic, "3-connected cubic with pattern (2) iff built by K4-splices from a 3-staircase"),
    "distance_exclusive": (_check_distance_exclusive, "mutually exclusive solitary edges at distance at most one"),
    "distance_singleton": (_check_distance_singleton, "solitary pairs involving a singleton at distance exactly one"),
    "distance_three": (_check_distance_three, "solitary edges at distance at most three unless pattern (2)"),
    "decomposition_unique": (_check_decomposition_unique, "every 2-cut decomposition yields the same pieces"),
    "half_order_class": (_check_half_order_class, "epsilon = n/2 iff family L (or K2)"),
    "rgraph_half_order": (_check_rgraph_half_order, "r-graphs n>=6: epsilon = n/2, L^r, solitary PM and n/2 solitary edges agree"),
    "rainbow_triangle_bound": (_check_rainbow_triangle_bound, "an r-triangle bounds the solitary classes by its simple edges"),
    "two_classes_3connected": (_check_two_classes_3connected, "two solitary classes force 3-connectivity"),
    "at_most_r_classes": (_check_at_most_r_classes, "at most r solitary classes"),
    "solitary_brick": (_check_solitary_brick, "3-ec r-graphs with a solitary edge are (near-bipartite for doubletons) bricks"),
    "two_cut_single_class": (_check_two_cut_single_class, "non-3-ec r-graphs: one solitary class, containing-matching holds all 2-cuts, rebuilt from pieces"),
    "class_transfer": (_check_class_transfer, "equivalence classes transfer across even 2-cuts"),
    "solitary_deletion": (_check_solitary_deletion, "e = uv solitary iff G-u-v uniquely matchable"),
    "parity": (_check_parity, "matchings meet cuts with the parity of the shore"),
    "kotzig": (_check_kotzig, "uniquely matchable graphs have an odd bridge"),
    "coloring": (_check_coloring, "r-graphs with a solitary edge are r-edge-colourable, uniquely with r-1 classes"),
    "companion": (_check_companion, "companion cuts are laminar odd r-cuts meeting in the companion"),
    "table_rows": (_check_table_rows, "characterised patterns match their families"),
}

# theorem-style aliases accepted by the command line
ALIASES = {
    "bounds": "solitary_bounds",
    "n_over_2": "half_order_exceptions",
    "staircase": "multiple_doubletons",
    "3staircase": "doubleton_and_singleton",
    "family_s": "three_singletons",
    "family_d": "pattern_two_cubic",
    "family_l": "half_order_class",
}


def resolve_check(name: str) -> str:
    key = name.lower().replace("-", "_")
    key = ALIASES.get(key, key)
    if key not in CHECKS:
        raise KeyError(f"unknown check {name!r}")
    return key


def _run_one(args):
    check, idx, label, g, shuffles = args
    fn = CHECKS[check][0]
    try:
        msg = fn(_Ctx(g, shuffles))
    except (BoundExceeded, TooLarge):
        return idx, label, g, "skip"
    return idx, label, g, msg


def verify(check: str, corpus: Iterable, shuffles: int = 5, workers: int = 1) -> VerifyReport:
    """Run one check over a corpus of graphs or (label, graph) pairs."""
    check = resolve_check(check)
    items = []
    for i, item in enumerate(corpus):
        label, g = item if isinstance(item, tuple) else (f"#{i}", item)
        items.append((check, i, label, g, shuffles))
    rep = VerifyReport(check)
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, items, chunksize=8))
    else:
        results = [_run_one(it) for it in items]
    for idx, label, g, msg in results:
        rep.checked += 1
        if msg == "skip":
            rep.skipped += 1
        elif msg is not None:
            rep.applicable += 1
            if msg:
                rep.violations.append(Violation(idx, label, msg, g))
    return rep


def verify_all(corpus: Iterable, shuffles: int = 5, workers: int = 1) -> list[VerifyReport]:
    items = list(corpus)
    return [verify(name, items, shuffles, workers) for name in CHECKS]


@dataclasses.dataclass(frozen=True)
class HarnessConfig:
    """Corpus bounds and run options for the verification harness."""

    cubic_max_n: int = 10
    quartic_max_n: int = 8
    family_max_n: int = 14
    max_t: int = 3
    d_max_n: int = 20
    d_limit: int | None = 40
    include_fixtures: bool = True
    shuffles: int = 5
    workers: int = 1


def build_corpus(cfg: HarnessConfig = HarnessConfig()) -> list[tuple[str, MultiGraph]]:
    """Labelled corpus: exhaustive cubic and 4-regular graphs, generated family
    members and (optionally) the named fixtures."""
    out: list[tuple[str, MultiGraph]] = []
    if cfg.cubic_max_n:
        out += [(f"cubic#{i}", g) for i, g in enumerate(exhaustive_small_corpus(cfg.cubic_max_n, 3))]
    if cfg.quartic_max_n:
        out += [(f"quartic#{i}", g) for i, g in enumerate(exhaustive_small_corpus(cfg.quartic_max_n, 4))]
    if cfg.family_max_n:
        out += generated_members(cfg.family_max_n, cfg.max_t, cfg.d_max_n, cfg.d_limit)
    if cfg.include_fixtures:
        from .fixtures import NAMED

        out += list(NAMED.items())
    return out
