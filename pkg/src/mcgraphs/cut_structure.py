"""Even 2-cuts, gluing, the 2-cut decomposition, contraction, splicing and
tight-cut based classification (brick / brace / bicritical / near-bipartite)."""

from __future__ import annotations

import dataclasses
import json
import random
from collections import Counter
from typing import Mapping, Sequence

import numpy as np

from .graph_core import (
    Cut,
    GraphError,
    MultiGraph,
    canonical_form,
    cut_of,
    full_mask,
    is_k_connected,
    members,
    popcount,
    vset,
)
from .matching_engine import (
    BoundExceeded,
    OrderTooSmall,
    enumerate_pms,
    has_perfect_matching,
    is_matching_covered,
)
from .dependence import NotEven2Cut, NotMatchingCovered, analyze

TIGHT_SCAN_LIMIT = 16


class NotTwoConnected(GraphError):
    pass


class EmptyOrFullShore(GraphError):
    pass


class DegreeMismatch(GraphError):
    pass


class Bipartite(GraphError):
    pass


# ---------------------------------------------------------------- even 2-cuts

def _cut_sort_key(c: Cut):
    return (sorted(c.edge_ids), members(c.smaller_shore()))


def find_even_2cuts(g: MultiGraph) -> list[Cut]:
    """All 2-cuts with two even shores, each once, in a fixed order."""
    if g.n < 4 or g.n % 2:
        return []
    sizes = g.cut_sizes
    counts = g.shore_sizes
    hits = np.nonzero((sizes == 2) & (counts % 2 == 0))[0]
    cuts = []
    for s in hits:
        s = int(s)
        if s == 0:
            continue
        c = cut_of(g, s)
        small = c.smaller_shore()
        if small != c.shore:
            c = cut_of(g, small)
        cuts.append(c)
    cuts.sort(key=_cut_sort_key)
    return cuts


# ---------------------------------------------------------------- gluing

def glue(g1: MultiGraph, e1: int, g2: MultiGraph, e2: int) -> MultiGraph:
    """Union of g1 - e1 and g2 - e2 plus f = u1u2 and f' = v1v2.

    g2's vertices are shifted by n1. Surviving edges keep their relative
    order; f and f' are the last two ids.
    """
    u1, v1 = g1.edges[e1]
    u2, v2 = g2.edges[e2]
    n1 = g1.n
    edges = [g1.edges[i] for i in range(g1.m) if i != e1]
    edges += [(a + n1, b + n1) for i, (a, b) in enumerate(g2.edges) if i != e2]
    edges += [(u1, u2 + n1), (v1, v2 + n1)]
    return MultiGraph(n1 + g2.n, tuple(edges))


@dataclasses.dataclass(frozen=True)
class MarkedComponent:
    """One side of an even 2-cut with its marker edge.

    ``vertex_map[i]`` / ``edge_map[i]`` give the parent vertex / edge; the
    marker maps to None in ``edge_map`` and to the cut pair in ``marker_pair``.
    """

    graph: MultiGraph
    marker_edge: int
    vertex_map: tuple[int, ...]
    edge_map: tuple[int | None, ...]
    marker_pair: tuple[int, int]


def marked_components(g: MultiGraph, c: Cut) -> tuple[MarkedComponent, MarkedComponent]:
    if c.size != 2 or not c.is_even:
        raise NotEven2Cut("cut is not an even 2-cut")
    f, f2 = sorted(c.edge_ids)
    out = []
    for shore in (c.shore, c.co_shore):
        h, vmap, emap = g.induced(shore)
        if not h.is_connected():
            raise NotTwoConnected("a shore of the 2-cut is disconnected")
        pos = {v: i for i, v in enumerate(vmap)}
        a = next(x for x in g.edges[f] if (shore >> x) & 1)
        b = next(x for x in g.edges[f2] if (shore >> x) & 1)
        if a == b:
            raise NotTwoConnected("both cut edges meet the same vertex")
        graph = h.add_edges([(pos[a], pos[b])])
        out.append(MarkedComponent(graph, h.m, tuple(vmap), tuple(emap) + (None,), (f, f2)))
    return out[0], out[1]


@dataclasses.dataclass
class DecompositionNode:
    graph: MultiGraph
    cut: Cut | None = None
    children: tuple = ()
    components: tuple = ()

    @property
    def is_leaf(self) -> bool:
        return self.cut is None


@dataclasses.dataclass
class DecompositionTree:
    root: DecompositionNode

    def leaves(self) -> list[MultiGraph]:
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node.is_leaf:
                out.append(node.graph)
            else:
                stack.extend(reversed(node.children))
        return out

    def internal_nodes(self) -> list[DecompositionNode]:
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if not node.is_leaf:
                out.append(node)
                stack.extend(node.children)
        return out

    def leaf_multiset(self) -> Counter:
        return Counter(canonical_form(h) for h in self.leaves())

    def to_dict(self) -> dict:
        from .graphio import write_edgelist

        def rec(node: DecompositionNode) -> dict:
            if node.is_leaf:
                return {"n": node.graph.n, "m": node.graph.m, "graph": write_edgelist(node.graph)}
            return {
                "n": node.graph.n,
                "m": node.graph.m,
                "shore": hex(node.cut.shore),
                "cut": sorted(node.cut.edge_ids),
                "children": [
                    dict(rec(ch), marker_edge=comp.marker_edge)
                    for ch, comp in zip(node.children, node.components)
                ],
            }

        return rec(self.root)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def decompose_2cuts(g: MultiGraph, rng: random.Random | None = None) -> DecompositionTree:
    """Split on even 2-cuts until no piece has one.

    Without ``rng`` the first cut in ``find_even_2cuts`` order is used; with
    it a random cut is taken at every step (the leaf multiset is the same
    either way).
    """
    if g.n < 2 or not is_k_connected(g, 2):
        raise NotTwoConnected("decomposition needs a 2-connected graph")

    def rec(h: MultiGraph) -> DecompositionNode:
        cuts = find_even_2cuts(h)
        if not cuts:
            return DecompositionNode(h)
        c = rng.choice(cuts) if rng is not None else cuts[0]
        comps = marked_components(h, c)
        return DecompositionNode(h, c, tuple(rec(x.graph) for x in comps), comps)

    return DecompositionTree(rec(g))


# ---------------------------------------------------------------- contraction

@dataclasses.dataclass(frozen=True)
class Contraction:
    """G/X. Vertices outside X keep their relative order and the contraction
    vertex comes last. Edges inside X are dropped (recorded in
    ``deleted_edges``)."""

    graph: MultiGraph
    vertex: int
    vertex_map: tuple[int | None, ...]
    edge_map: tuple[int, ...]
    deleted_edges: tuple[int, ...]
    shore_connected: bool


def contract(g: MultiGraph, x: int | Sequence[int]) -> Contraction:
    shore = x if isinstance(x, int) else vset(x)
    full = full_mask(g.n)
    if shore == 0 or shore & full == full:
        raise EmptyOrFullShore("cannot contract an empty or full shore")
    outside = members(full & ~shore)
    pos = {v: i for i, v in enumerate(outside)}
    cv = len(outside)
    edges, emap, dropped = [], [], []
    for i, (u, v) in enumerate(g.edges):
        a = pos.get(u, cv)
        b = pos.get(v, cv)
        if a == b:
            dropped.append(i)
            continue
        edges.append((a, b))
        emap.append(i)
    h = MultiGraph(cv + 1, tuple(edges))
    return Contraction(h, cv, tuple(outside) + (None,), tuple(emap), tuple(dropped), g.is_connected(shore))


def cut_contractions(g: MultiGraph, c: Cut) -> tuple[Contraction, Contraction]:
    """(G/X̄, G/X): the first keeps X, the second keeps X̄."""
    return contract(g, c.co_shore), contract(g, c.shore)


# ---------------------------------------------------------------- splicing

def splice(g1: MultiGraph, v1: int, g2: MultiGraph, v2: int,
           pi: Mapping[int, int] | None = None) -> MultiGraph:
    """(G1 ⊙ G2) at v1, v2: delete both vertices and join the loose ends.

    ``pi`` maps each edge id at v1 to an edge id at v2; by default the two
    incidence lists are paired in ascending id order. Vertices of G1 - v1 come
    first, then those of G2 - v2.
    """
    d1, d2 = g1.incident[v1], g2.incident[v2]
    if len(d1) != len(d2):
        raise DegreeMismatch(f"degrees {len(d1)} and {len(d2)} differ")
    if pi is None:
        pi = dict(zip(d1, d2))
    if sorted(pi) != sorted(d1) or sorted(pi.values()) != sorted(d2):
        raise DegreeMismatch("pi is not a bijection between the two stars")
    keep1 = [v for v in range(g1.n) if v != v1]
    keep2 = [v for v in range(g2.n) if v != v2]
    p1 = {v: i for i, v in enumerate(keep1)}
    p2 = {v: i + len(keep1) for i, v in enumerate(keep2)}
    edges = [(p1[a], p1[b]) for a, b in g1.edges if v1 not in (a, b)]
    edges += [(p2[a], p2[b]) for a, b in g2.edges if v2 not in (a, b)]
    for e in d1:
        a = g1.other(e, v1)
        b = g2.other(pi[e], v2)
        edges.append((p1[a], p2[b]))
    return MultiGraph(len(keep1) + len(keep2), tuple(edges))


def splice_k4(g: MultiGraph, v: int) -> MultiGraph:
    """(G ⊙ K4) at a degree-3 vertex v, i.e. v blown up into a triangle.

    Labels stay stable: v keeps its first edge, the second and third edges
    move to new vertices n and n+1, and the triangle edges v-n, v-(n+1),
    n-(n+1) are appended.
    """
    inc = g.incident[v]
    if len(inc) != 3:
        raise DegreeMismatch("splicing with K4 needs a vertex of degree three")
    n = g.n
    edges = list(g.edges)
    for new, e in zip((n, n + 1), inc[1:]):
        a, b = edges[e]
        edges[e] = (new, b) if a == v else (a, new)
    edges += [(v, n), (v, n + 1), (n, n + 1)]
    return MultiGraph(n + 2, tuple(edges))


# ---------------------------------------------------------------- tight / separating

def _require_mc(g: MultiGraph):
    ok, why = is_matching_covered(g)
    if not ok:
        raise NotMatchingCovered(f"not matching covered ({why})")


def is_tight_cut(g: MultiGraph, c: Cut) -> bool:
    _require_mc(g)
    ms = enumerate_pms(g)
    return all(len(c.edge_ids.intersection(pm)) == 1 for pm in ms.matchings)


def is_separating_cut(g: MultiGraph, c: Cut) -> bool:
    """Both C-contractions matching covered."""
    _require_mc(g)
    for k in cut_contractions(g, c):
        if not is_matching_covered(k.graph)[0]:
            return False
    return True


def separating_by_matchings(g: MultiGraph, c: Cut) -> bool:
    """Every edge lies in a perfect matching meeting C exactly once."""
    _require_mc(g)
    ms = enumerate_pms(g)
    good = 0
    for j, pm in enumerate(ms.matchings):
        if len(c.edge_ids.intersection(pm)) == 1:
            good |= 1 << j
    return all(ms.incidence[e] & good for e in range(g.m))


def nontrivial_tight_cuts(g: MultiGraph, first_only: bool = False) -> list[Cut]:
    """Shore scan for tight cuts with both shores of size >= 3."""
    if g.n > TIGHT_SCAN_LIMIT:
        raise BoundExceeded(f"tight cut scan limited to n <= {TIGHT_SCAN_LIMIT}")
    ms = enumerate_pms(g)
    k = g.n - 1
    s = np.arange(1 << k, dtype=np.int64)
    sizes = g.shore_sizes
    cand = (sizes % 2 == 1) & (sizes >= 3) & (g.n - sizes >= 3)
    for pm in ms.matchings:
        hits = np.zeros(1 << k, dtype=np.int32)
        for e in pm:
            u, v = g.edges[e]
            hits += (((s >> u) ^ (s >> v)) & 1).astype(np.int32)
        cand &= hits == 1
        if not cand.any():
            return []
    out = []
    for x in np.nonzero(cand)[0]:
        out.append(cut_of(g, int(x)))
        if first_only:
            break
    return out


def is_bicritical(g: MultiGraph) -> bool:
    if g.n < 4:
        raise OrderTooSmall("bicriticality needs order at least four")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not has_perfect_matching(g.delete_vertices([u, v])[0]):
                return False
    return True


@dataclasses.dataclass(frozen=True)
class BrickBraceVerdict:
    kind: str
    witness: Cut | None = None
    elp_consistent: bool | None = None


def classify_brick_brace(g: MultiGraph) -> BrickBraceVerdict:
    if not is_matching_covered(g)[0]:
        return BrickBraceVerdict("not_matching_covered")
    cuts = nontrivial_tight_cuts(g, first_only=True)
    bip = g.is_bipartite()
    if cuts:
        return BrickBraceVerdict("has_nontrivial_tight_cut", cuts[0])
    if bip:
        return BrickBraceVerdict("brace")
    # a brick is exactly a 3-connected bicritical graph
    elp = g.n >= 4 and is_k_connected(g, 3) and is_bicritical(g)
    return BrickBraceVerdict("brick", None, elp)


@dataclasses.dataclass(frozen=True)
class NearBipartiteWitness:
    removed: tuple[int, int]
    side_a: int
    side_b: int


def lovasz_doubleton_check(g: MultiGraph, alpha: int, beta: int) -> bool:
    """For a mutually dependent pair in a brick: G - α - β is bipartite with
    equal colour classes, α inside one class and β inside the other."""
    h = g.delete_edges([alpha, beta])[0]
    parts = h.bipartition()
    if parts is None or not h.is_connected():
        return False
    a, b = parts
    if popcount(a) != popcount(b):
        return False
    ma, mb = g.edge_masks[alpha], g.edge_masks[beta]
    return (ma & ~a == 0 and mb & ~b == 0) or (ma & ~b == 0 and mb & ~a == 0)


def near_bipartite_witness(g: MultiGraph) -> NearBipartiteWitness | None:
    _require_mc(g)
    if g.is_bipartite():
        raise Bipartite("graph is bipartite")
    an = analyze(g)
    for i in sorted(an.removable):
        cls = an.classes[i]
        if len(cls) != 2:
            continue
        h = g.delete_edges(cls)[0]
        parts = h.bipartition()
        if parts is None or not is_matching_covered(h)[0]:
            continue
        return NearBipartiteWitness((cls[0], cls[1]), parts[0], parts[1])
    return None
