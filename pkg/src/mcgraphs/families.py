"""Generators and recognisers for the named graph families."""

from __future__ import annotations

import dataclasses
import math
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Union

from .graph_core import (
    CANONICAL_LIMIT,
    GraphError,
    MultiGraph,
    TooLarge,
    bfs_distances,
    canonical_form,
    is_3_connected_cubic,
)
from .matching_engine import is_matching_covered
from .dependence import analyze
from .cut_structure import find_even_2cuts, glue, marked_components, splice_k4
from . import fixtures


class CapViolated(GraphError):
    pass


class BadOrder(GraphError):
    pass


class BadLadder(GraphError):
    pass


class BadIndex(GraphError):
    pass


class IneligibleVertex(GraphError):
    pass


class BadGlueEdge(GraphError):
    pass


class BadBase(GraphError):
    pass


@dataclasses.dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple = ()

    def __str__(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}{self.params}"


# ---------------------------------------------------------------- multiplied bases

# each base with its unique proper edge colouring (colour classes as edge ids)
_BASES = {
    "theta": (MultiGraph(2, ((0, 1),) * 3), ((0,), (1,), (2,))),
    "K4": (MultiGraph(4, ((0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2))),
           ((0, 1), (2, 3), (4, 5))),
    "C6bar": (MultiGraph(6, ((1, 2), (4, 5), (0, 3), (0, 2), (3, 5), (1, 4),
                             (0, 1), (3, 4), (2, 5))),
              ((0, 1, 2), (3, 4, 5), (6, 7, 8))),
    "C4": (MultiGraph(4, ((0, 1), (2, 3), (1, 2), (3, 0))), ((0, 1), (2, 3))),
}


def gen_multiplied(base: str, *ks: int, cap: int | None = None) -> MultiGraph:
    """Base graph with its i-th colour class multiplied by ks[i]."""
    if base not in _BASES:
        raise ValueError(f"unknown base {base!r}")
    g, classes = _BASES[base]
    if len(ks) != len(classes) or any(k < 1 for k in ks):
        raise ValueError(f"{base} takes {len(classes)} positive multipliers")
    if cap is not None and sum(k > 1 for k in ks) > cap:
        raise CapViolated(f"more than {cap} multipliers exceed one")
    extra = []
    for cls, k in zip(classes, ks):
        for e in cls:
            extra.extend([g.edges[e]] * (k - 1))
    return g.add_edges(extra)


def gen_theta() -> MultiGraph:
    return gen_multiplied("theta", 1, 1, 1)


def multiplier_choices(base: str, r: int, cap: int | None = None) -> list[tuple[int, ...]]:
    """Nonincreasing multiplier tuples giving an r-regular member."""
    width = len(_BASES[base][1])
    out = []

    def rec(prefix, left, hi):
        if len(prefix) == width:
            if left == 0:
                out.append(tuple(prefix))
            return
        for k in range(min(hi, left - (width - len(prefix) - 1)), 0, -1):
            rec(prefix + [k], left - k, k)

    rec([], r, r)
    if cap is not None:
        out = [ks for ks in out if sum(k > 1 for k in ks) <= cap]
    return out


# ---------------------------------------------------------------- staircases

def gen_staircase1(n: int, t: int = 1) -> MultiGraph:
    """The (t+2)-regular staircase of order n.

    Vertex 0 and vertex n-1 are the apexes joined by the bone; rung i joins
    2i+1 and 2i+2; consecutive rungs are joined side by side. Rungs and the
    bone have multiplicity t.
    """
    if n < 6 or n % 2:
        raise BadOrder("staircases need even order at least six")
    if t < 1:
        raise BadOrder("thickness must be positive")
    k = (n - 2) // 2
    x = [2 * i + 1 for i in range(k)]
    y = [2 * i + 2 for i in range(k)]
    v1, v2 = 0, n - 1
    edges = [(v1, x[0]), (v1, y[0])]
    for i in range(k):
        edges += [(x[i], y[i])] * t
        if i + 1 < k:
            edges += [(x[i], x[i + 1]), (y[i], y[i + 1])]
    edges += [(x[-1], v2), (y[-1], v2)]
    edges += [(v1, v2)] * t
    return MultiGraph(n, tuple(edges))


@dataclasses.dataclass(frozen=True)
class Staircase3Layout:
    graph: MultiGraph
    singleton: int  # the even 1-cut of the dumbbell
    companion: int
    added: tuple[int, int, int]


def staircase3_layout(a: int, b: int, t: int = 1) -> Staircase3Layout:
    """3-staircase over the dumbbell with ladders of orders a and b.

    Ladder one has rungs (x_i, y_i), the rung nearest the bone hanging off
    socket s1; ladder two likewise off s2. The bone is s1-p-q-s2. The three
    added edges join the far rung (x, y) of ladder one to the far rung
    (x', y') of ladder two as x-x', y-q and p-y'. Rungs and the bone edges
    s1p, qs2 carry multiplicity t; pq stays simple.
    """
    for side in (a, b):
        if side < 2 or side % 2:
            raise BadLadder("ladder orders must be even and at least two")
    if t < 1:
        raise BadLadder("thickness must be positive")
    ka, kb = a // 2, b // 2
    nxt = iter(range(a + b + 4))
    l1 = [(next(nxt), next(nxt)) for _ in range(ka)]  # far rung first
    s1, p, q, s2 = next(nxt), next(nxt), next(nxt), next(nxt)
    l2 = [(next(nxt), next(nxt)) for _ in range(kb)]  # near rung first
    edges = []

    def ladder(rungs):
        for i, (u, v) in enumerate(rungs):
            edges.extend([(u, v)] * t)
            if i + 1 < len(rungs):
                edges.extend([(u, rungs[i + 1][0]), (v, rungs[i + 1][1])])

    ladder(l1)
    ladder(l2)
    edges += [(s1, l1[-1][0]), (s1, l1[-1][1])]
    edges += [(s2, l2[0][0]), (s2, l2[0][1])]
    edges += [(s1, p)] * t
    singleton = len(edges)
    edges.append((p, q))
    edges += [(q, s2)] * t
    (x, y), (xf, yf) = l1[0], l2[-1]
    f = len(edges)
    edges += [(x, xf), (y, q), (p, yf)]
    g = MultiGraph(a + b + 4, tuple(edges))
    return Staircase3Layout(g, singleton, f, (f, f + 1, f + 2))


def gen_staircase3(a: int, b: int, t: int = 1) -> MultiGraph:
    return staircase3_layout(a, b, t).graph


def staircase3_params(n: int) -> list[tuple[int, int]]:
    """Canonical (a, b), a <= b, for the 3-staircases of order n."""
    return [(a, n - 4 - a) for a in range(2, n - 4, 2) if a <= n - 4 - a and n - 4 - a >= 2]


def count_3staircases(n: int, t: int = 1) -> int:
    """Number of pairwise nonisomorphic 3-staircases of order n, found by
    generating every ordered ladder split and comparing canonical forms."""
    seen = set()
    for a in range(2, n - 4, 2):
        b = n - 4 - a
        if b >= 2:
            seen.add(canonical_form(gen_staircase3(a, b, t), bound=max(n, CANONICAL_LIMIT)))
    return len(seen)


def staircase3_count_formula(n: int) -> int:
    return math.ceil((n - 6) / 4)


# ---------------------------------------------------------------- family S

def gen_family_S(index: int) -> MultiGraph:
    if not 1 <= index <= 5:
        raise BadIndex("family S is indexed 1..5")
    return fixtures.FAMILY_S[index - 1]


# ---------------------------------------------------------------- family D

@dataclasses.dataclass(frozen=True)
class DTrace:
    """Base 3-staircase (a, b) and the vertices spliced with K4, in order.

    ``steps[0]`` is the vertex used to leave the 3-staircase; later steps
    refer to vertex labels of the graph built so far (splice_k4 keeps old
    labels and appends two new ones).
    """

    a: int
    b: int
    steps: tuple[int, ...]


def _solitary_doubleton_vertices(g: MultiGraph) -> set[int]:
    an = analyze(g)
    out = set()
    for i in an.solitary:
        if len(an.classes[i]) == 2:
            for e in an.classes[i]:
                out.update(g.edges[e])
    return out


def d0_vertices(g: MultiGraph) -> list[int]:
    """Vertices of a (2,1)-pattern cubic that may start a family-D trace:
    on the solitary doubleton and at distance two from the singleton."""
    an = analyze(g)
    singles = [an.classes[i][0] for i in an.solitary if len(an.classes[i]) == 1]
    doubles = [an.classes[i] for i in an.solitary if len(an.classes[i]) == 2]
    if an.pattern != (2, 1):
        raise IneligibleVertex(f"base has pattern {an.pattern}, not (2, 1)")
    dist = bfs_distances(g, g.edges[singles[0]])
    ends = sorted({v for e in doubles[0] for v in g.edges[e]})
    return [v for v in ends if dist[v] == 2]


def gen_family_D(trace: DTrace) -> MultiGraph:
    if trace.a + trace.b + 4 < 12:
        raise BadOrder("family D starts from 3-staircases of order twelve or more")
    if not trace.steps:
        raise IneligibleVertex("a trace needs at least the first splice")
    g = gen_staircase3(trace.a, trace.b, 1)
    v0 = trace.steps[0]
    if v0 not in d0_vertices(g):
        raise IneligibleVertex(f"vertex {v0} is not a valid first splice")
    g = splice_k4(g, v0)
    for v in trace.steps[1:]:
        if not 0 <= v < g.n or v not in _solitary_doubleton_vertices(g):
            raise IneligibleVertex(f"vertex {v} is not on a solitary doubleton")
        g = splice_k4(g, v)
    return g


def family_D_traces(max_n: int, limit: int | None = None) -> Iterator[DTrace]:
    """Valid traces with output order <= max_n, breadth first by order."""
    count = 0
    frontier = []
    for n in range(12, max_n - 1, 2):
        for a, b in staircase3_params(n):
            base = gen_staircase3(a, b, 1)
            for v in d0_vertices(base):
                frontier.append((DTrace(a, b, (v,)), splice_k4(base, v)))
    while frontier:
        nxt = []
        for tr, g in frontier:
            if g.n > max_n:
                continue
            yield tr
            count += 1
            if limit is not None and count >= limit:
                return
            if g.n + 2 <= max_n:
                for v in sorted(_solitary_doubleton_vertices(g)):
                    nxt.append((DTrace(tr.a, tr.b, tr.steps + (v,)), splice_k4(g, v)))
        frontier = nxt


def _is_3staircase(g: MultiGraph) -> bool:
    key = canonical_form(g, bound=max(g.n, CANONICAL_LIMIT))
    return any(canonical_form(gen_staircase3(a, b, 1), bound=max(g.n, CANONICAL_LIMIT)) == key
               for a, b in staircase3_params(g.n))


def _contractible_triangles(g: MultiGraph) -> list[int]:
    out = []
    for a in range(g.n):
        for b, c in combinations(sorted(g.neighbors(a)), 2):
            if a < b < c and g.multiplicity(b, c):
                mask = (1 << a) | (1 << b) | (1 << c)
                if g.multiplicity(a, b) == g.multiplicity(a, c) == g.multiplicity(b, c) == 1:
                    out.append(mask)
    return out


def reconstruct_D_chain(g: MultiGraph) -> list[MultiGraph] | None:
    """Undo K4-splices by contracting triangles until a 3-staircase of order
    twelve or more is reached. Each undone splice must sit at a vertex that
    the smaller graph allows: on its solitary doubleton, and for the first
    splice also at distance two from the solitary singleton. Returns the
    chain base..g or None."""
    from .cut_structure import contract

    if g.regular_degree() != 3 or g.n < 14 or not g.is_connected():
        return None
    for mask in _contractible_triangles(g):
        con = contract(g, mask)
        h, w = con.graph, con.vertex
        if not is_3_connected_cubic(h):
            continue
        an = analyze(h)
        if an.pattern == (2, 1) and h.n >= 12 and _is_3staircase(h):
            if w in d0_vertices(h):
                return [h, g]
        elif an.pattern == (2,) and w in _solitary_doubleton_vertices(h):
            sub = reconstruct_D_chain(h)
            if sub is not None:
                return sub + [g]
    return None


def is_family_D(g: MultiGraph) -> bool:
    """Membership via the characterisation: 3-connected cubic with pattern (2)."""
    return is_3_connected_cubic(g) and g.n >= 4 and analyze(g).pattern == (2,)


# ---------------------------------------------------------------- families L and L^r

@dataclasses.dataclass(frozen=True)
class LLeaf:
    graph: MultiGraph


@dataclasses.dataclass(frozen=True)
class LGlue:
    left: "LTrace"
    e1: int
    right: "LTrace"
    e2: int


LTrace = Union[LLeaf, LGlue]


def is_C2_type(g: MultiGraph) -> bool:
    return g.n == 2 and g.m >= 2


def is_K4_type(g: MultiGraph) -> bool:
    """Underlying simple graph K4 and a perfect matching {uv, yz} of two
    single edges."""
    if g.n != 4 or len(g.mult) != 6:
        return False
    for (a, b), (c, d) in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        if g.multiplicity(a, b) == 1 and g.multiplicity(c, d) == 1:
            return True
    return False


def is_L_base(g: MultiGraph) -> bool:
    return is_C2_type(g) or is_K4_type(g)


def is_Lr_base(g: MultiGraph, r: int) -> bool:
    if g.regular_degree() != r:
        return False
    if g.n == 2:
        return g.m == r
    if g.n != 4 or len(g.mult) != 6:
        return False
    # r-regular member of K4 with at most two colour classes multiplied
    ks = []
    for (a, b), (c, d) in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        if g.multiplicity(a, b) != g.multiplicity(c, d):
            return False
        ks.append(g.multiplicity(a, b))
    return sum(k > 1 for k in ks) <= 2


def _half_class_edge(g: MultiGraph, e: int) -> bool:
    an = analyze(g)
    return 2 * len(an.classes[an.class_of[e]]) == g.n


def gen_family_L(trace: LTrace, base_check=is_L_base) -> MultiGraph:
    if isinstance(trace, LLeaf):
        if not base_check(trace.graph):
            raise BadBase("leaf is not an admissible base")
        return trace.graph
    g1 = gen_family_L(trace.left, base_check)
    g2 = gen_family_L(trace.right, base_check)
    for g, e in ((g1, trace.e1), (g2, trace.e2)):
        if not 0 <= e < g.m or not _half_class_edge(g, e):
            raise BadGlueEdge(f"edge {e} is not in a class of half the order")
    return glue(g1, trace.e1, g2, trace.e2)


def gen_family_L_r(r: int, trace: LTrace) -> MultiGraph:
    return gen_family_L(trace, lambda h: is_Lr_base(h, r))


def reconstruct_L_trace(g: MultiGraph, base_check=is_L_base) -> LTrace | None:
    """Peel even 2-cuts until only admissible bases remain, accepting a split
    only when each marker edge lies in a half-order class of its component.
    Returns None when no such peeling exists. The test never looks at the
    classes of ``g`` itself."""
    memo: dict[bytes, LTrace | None] = {}

    def rec(h: MultiGraph) -> LTrace | None:
        key = canonical_form(h, bound=max(h.n, CANONICAL_LIMIT))
        if key in memo:  # only failures are memoised
            return None
        if not is_matching_covered(h)[0]:
            memo[key] = None
            return None
        if base_check(h):
            return LLeaf(h)
        for cut in find_even_2cuts(h):
            try:
                c1, c2 = marked_components(h, cut)
            except GraphError:
                continue
            if not (_half_class_edge(c1.graph, c1.marker_edge)
                    and _half_class_edge(c2.graph, c2.marker_edge)):
                continue
            t1 = rec(c1.graph)
            if t1 is None:
                continue
            t2 = rec(c2.graph)
            if t2 is None:
                continue
            return LGlue(t1, c1.marker_edge, t2, c2.marker_edge)
        memo[key] = None
        return None

    if g.n < 2 or not g.is_connected():
        return None
    return rec(g)


def reconstruct_L_r_trace(g: MultiGraph) -> LTrace | None:
    r = g.regular_degree()
    if r is None or r < 3:
        return None
    return reconstruct_L_trace(g, lambda h: is_Lr_base(h, r))


def is_family_L(g: MultiGraph) -> bool:
    """Matching covered with ε = n/2, minus K2."""
    if g.n < 2 or (g.n == 2 and g.m == 1):
        return False
    if not is_matching_covered(g)[0]:
        return False
    return 2 * analyze(g).epsilon == g.n


def L_trace_leaves(trace: LTrace) -> list[MultiGraph]:
    if isinstance(trace, LLeaf):
        return [trace.graph]
    return L_trace_leaves(trace.left) + L_trace_leaves(trace.right)


def L_trace_to_dict(trace: LTrace) -> dict:
    from .graphio import write_edgelist

    if isinstance(trace, LLeaf):
        return {"leaf": write_edgelist(trace.graph)}
    return {"left": L_trace_to_dict(trace.left), "e1": trace.e1,
            "right": L_trace_to_dict(trace.right), "e2": trace.e2}


# ---------------------------------------------------------------- recognition

def _members_for(n: int, r: int | None) -> list[tuple[FamilySpec, MultiGraph]]:
    out: list[tuple[FamilySpec, MultiGraph]] = []
    if r is None:
        return out
    if n == 2 and r >= 2:
        for ks in multiplier_choices("theta", r):
            out.append((FamilySpec("theta_i", ks), gen_multiplied("theta", *ks)))
    if n == 4 and r >= 3:
        for ks in multiplier_choices("K4", r):
            out.append((FamilySpec("K4_i", ks), gen_multiplied("K4", *ks)))
    if n == 4 and r >= 2:
        for ks in multiplier_choices("C4", r):
            out.append((FamilySpec("C4_i", ks), gen_multiplied("C4", *ks)))
    if n == 6 and r >= 3:
        for ks in multiplier_choices("C6bar", r, cap=1):
            out.append((FamilySpec("C6bar_1", ks), gen_multiplied("C6bar", *ks)))
    if r >= 3 and n >= 6 and n % 2 == 0:
        t = r - 2
        out.append((FamilySpec("Staircase1", (n, t)), gen_staircase1(n, t)))
        for a, b in staircase3_params(n):
            out.append((FamilySpec("Staircase3", (a, b, t)), gen_staircase3(a, b, t)))
    if r == 3:
        for i, s in enumerate(fixtures.FAMILY_S, 1):
            if s.n == n:
                out.append((FamilySpec("FamilyS", (i,)), s))
        for name, h in (("R8", fixtures.R8), ("R10", fixtures.R10), ("N10", fixtures.N10)):
            if h.n == n:
                out.append((FamilySpec(name), h))
    return out


@lru_cache(maxsize=256)
def _bucket(n: int, r: int | None, m: int) -> dict[bytes, list[FamilySpec]]:
    table: dict[bytes, list[FamilySpec]] = {}
    for spec, h in _members_for(n, r):
        if h.m != m:
            continue
        table.setdefault(canonical_form(h), []).append(spec)
    return table


def recognize(g: MultiGraph) -> list[FamilySpec]:
    """Every family the graph belongs to (generator families by canonical
    form; D and L by their characterising predicates)."""
    if g.n > CANONICAL_LIMIT:
        raise TooLarge(f"recognition limited to n <= {CANONICAL_LIMIT}")
    r = g.regular_degree()
    found = list(_bucket(g.n, r, g.m).get(canonical_form(g), []))
    if r == 3 and g.n >= 4 and is_matching_covered(g)[0] and is_family_D(g):
        found.append(FamilySpec("FamilyD"))
    if is_family_L(g):
        found.append(FamilySpec("FamilyL"))
        if r is not None and r >= 3:
            found.append(FamilySpec("FamilyL_r", (r,)))
    return found


def family_names(specs) -> set[str]:
    return {s.family for s in specs}


def in_thm_exception_set(g: MultiGraph) -> bool:
    """Member of θ^1 ∪ K4^1 ∪ C6bar^1 ∪ {R8}: the graphs with more than n/2
    solitary edges."""
    r = g.regular_degree()
    if r is None or g.n > 8:
        return False
    for spec in recognize(g):
        if spec.family in ("theta_i", "K4_i") and sum(k > 1 for k in spec.params) <= 1:
            return True
        if spec.family in ("C6bar_1", "R8"):
            return True
    return False


def generated_corpus(max_n: int = 14, max_t: int = 3) -> Iterator[tuple[FamilySpec, MultiGraph]]:
    """Family members up to the given order and thickness."""
    for t in range(1, max_t + 1):
        r = t + 2
        for ks in multiplier_choices("theta", r):
            yield FamilySpec("theta_i", ks), gen_multiplied("theta", *ks)
        for ks in multiplier_choices("K4", r):
            yield FamilySpec("K4_i", ks), gen_multiplied("K4", *ks)
        for ks in multiplier_choices("C6bar", r, cap=1):
            yield FamilySpec("C6bar_1", ks), gen_multiplied("C6bar", *ks)
        for n in range(6, max_n + 1, 2):
            yield FamilySpec("Staircase1", (n, t)), gen_staircase1(n, t)
        for n in range(8, max_n + 1, 2):
            for a, b in staircase3_params(n):
                yield FamilySpec("Staircase3", (a, b, t)), gen_staircase3(a, b, t)
    for i in range(1, 6):
        s = gen_family_S(i)
        if s.n <= max_n:
            yield FamilySpec("FamilyS", (i,)), s
