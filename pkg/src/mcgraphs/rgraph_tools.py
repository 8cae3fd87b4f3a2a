"""r-graph recognition, r-edge-colouring, matching multiplication,
rainbow triangles and spanning cubic subgraphs."""

from __future__ import annotations

import dataclasses
from itertools import combinations
from typing import Iterator

import numpy as np

from .graph_core import (
    SHORE_SCAN_LIMIT,
    GraphError,
    MultiGraph,
    edge_connectivity,
    full_mask,
    members,
)
from .matching_engine import OddOrder, enumerate_pms


class NotRegular(GraphError):
    pass


class NotPerfectMatching(GraphError):
    pass


class PreconditionUnmet(GraphError):
    pass


@dataclasses.dataclass(frozen=True)
class RGraphCertificate:
    ok: bool
    r: int | None
    min_odd_cut: int | None
    is_3ec: bool
    regular: bool
    connected: bool
    reason: str = ""
    witness: tuple[int, ...] | None = None  # offending odd shore or vertex


def min_odd_cut(g: MultiGraph) -> tuple[int, tuple[int, ...]]:
    """(value, shore) minimising |∂(X)| over odd X."""
    if g.n % 2:
        raise OddOrder("minimum odd cut needs even order")
    if g.n <= SHORE_SCAN_LIMIT:
        sizes = g.cut_sizes
        odd = (g.shore_sizes % 2) == 1
        vals = np.where(odd, sizes, np.iinfo(np.int32).max)
        s = int(np.argmin(vals))
        return int(vals[s]), tuple(members(s))
    return _min_odd_cut_gomory_hu(g)


def _min_odd_cut_gomory_hu(g: MultiGraph) -> tuple[int, tuple[int, ...]]:
    # the lightest Gomory-Hu tree edge with odd sides is a minimum odd cut
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    for (u, v), mu in g.mult.items():
        h.add_edge(u, v, capacity=mu)
    tree = nx.gomory_hu_tree(h)
    best = None
    for u, v, data in tree.edges(data=True):
        t2 = tree.copy()
        t2.remove_edge(u, v)
        side = nx.node_connected_component(t2, u)
        if len(side) % 2 == 1:
            cand = (int(data["weight"]), tuple(sorted(side)))
            if best is None or cand < best:
                best = cand
    return best


def certify_rgraph(g: MultiGraph) -> RGraphCertificate:
    connected = g.n >= 1 and g.is_connected()
    r = g.regular_degree()
    regular = r is not None
    if not connected:
        return RGraphCertificate(False, r, None, False, regular, False, "disconnected")
    if not regular:
        bad = next(v for v in range(g.n) if g.degree(v) != g.degree(0))
        return RGraphCertificate(False, None, None, False, False, True,
                                 f"vertex {bad} has degree {g.degree(bad)} but vertex 0 has {g.degree(0)}",
                                 (bad,))
    if r < 3:
        return RGraphCertificate(False, r, None, False, True, True, f"degree {r} is below three")
    if g.n % 2:
        return RGraphCertificate(False, r, None, False, True, True, "odd order", tuple(range(g.n)))
    value, shore = min_odd_cut(g)
    three_ec = edge_connectivity(g) >= 3
    if value < r:
        return RGraphCertificate(False, r, value, three_ec, True, True,
                                 f"odd cut of size {value} < {r}", shore)
    return RGraphCertificate(True, r, value, three_ec, True, True)


def is_rgraph(g: MultiGraph) -> bool:
    return certify_rgraph(g).ok


# ---------------------------------------------------------------- colourings

@dataclasses.dataclass(frozen=True)
class EdgeColoring:
    r: int
    color_of: tuple[int, ...]

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.r)]
        for e, c in enumerate(self.color_of):
            out[c].append(e)
        return out

    def normalized(self) -> tuple[int, ...]:
        """Colours renamed in order of first appearance along edge ids."""
        ren: dict[int, int] = {}
        return tuple(ren.setdefault(c, len(ren)) for c in self.color_of)


def _coloring_search(g: MultiGraph, r: int) -> Iterator[tuple[int, ...]]:
    full = (1 << r) - 1
    used = [0] * g.n
    color = [-1] * g.m
    edges = g.edges

    def rec(left: int):
        if left == 0:
            yield tuple(color)
            return
        # fail-first: fewest colours free at both ends, then lowest id
        best, best_free, best_cnt = -1, 0, r + 1
        for e in range(g.m):
            if color[e] >= 0:
                continue
            u, v = edges[e]
            free = full & ~(used[u] | used[v])
            cnt = bin(free).count("1")
            if cnt < best_cnt:
                best, best_free, best_cnt = e, free, cnt
                if cnt <= 1:
                    break
        if best_cnt == 0:
            return
        u, v = edges[best]
        for c in range(r):
            if (best_free >> c) & 1:
                color[best] = c
                used[u] |= 1 << c
                used[v] |= 1 << c
                yield from rec(left - 1)
                used[u] &= ~(1 << c)
                used[v] &= ~(1 << c)
                color[best] = -1

    # colour the edges at vertex 0 as 0, 1, ... to cut colour symmetry
    for c, e in enumerate(g.incident[0] if g.n else ()):
        if c >= r:
            return
        u, v = edges[e]
        color[e] = c
        used[u] |= 1 << c
        used[v] |= 1 << c
    yield from rec(g.m - sum(1 for x in color if x >= 0))


def r_edge_coloring(g: MultiGraph, r: int) -> EdgeColoring | None:
    if g.regular_degree() != r:
        raise NotRegular(f"graph is not {r}-regular")
    for col in _coloring_search(g, r):
        return EdgeColoring(r, col)
    return None


def all_r_edge_colorings(g: MultiGraph, r: int) -> list[EdgeColoring]:
    """Every proper r-edge-colouring up to renaming colours."""
    if g.regular_degree() != r:
        raise NotRegular(f"graph is not {r}-regular")
    seen = set()
    out = []
    for col in _coloring_search(g, r):
        key = EdgeColoring(r, col).normalized()
        if key not in seen:
            seen.add(key)
            out.append(EdgeColoring(r, key))
    return out


def is_perfect_matching(g: MultiGraph, ids) -> bool:
    ids = list(ids)
    covered = 0
    for e in ids:
        em = g.edge_masks[e]
        if covered & em:
            return False
        covered |= em
    return covered == full_mask(g.n)


def multiply_matching(g: MultiGraph, m, k: int) -> MultiGraph:
    """G ⊕ (k-1)M. The copies get ids after all existing ones, grouped by
    source edge in ascending order."""
    m = sorted(m)
    if k < 1:
        raise ValueError("multiplier must be positive")
    if not is_perfect_matching(g, m):
        raise NotPerfectMatching("edge set is not a perfect matching")
    extra = [g.edges[e] for e in m for _ in range(k - 1)]
    return g.add_edges(extra)


def rainbow_triangles(g: MultiGraph, r: int) -> list[tuple[int, int, int]]:
    out = []
    for a, b, c in combinations(range(g.n), 3):
        mab, mbc, mac = g.multiplicity(a, b), g.multiplicity(b, c), g.multiplicity(a, c)
        if mab and mbc and mac and mab + mbc + mac == r:
            out.append((a, b, c))
    return out


def spanning_subgraph(g: MultiGraph, ids) -> tuple[MultiGraph, list[int]]:
    ids = sorted(ids)
    return MultiGraph(g.n, tuple(g.edges[e] for e in ids)), ids


@dataclasses.dataclass(frozen=True)
class CubicCore:
    graph: MultiGraph
    colors: tuple[int, int, int]
    edge_map: tuple[int, ...]


def cubic_core_for_pair(g: MultiGraph, coloring: EdgeColoring, e1: int,
                        e2: int | None = None, i: int | None = None) -> CubicCore:
    """Spanning cubic subgraph M1 ∪ M2 ∪ Mi (pair mode) or M1 ∪ Mi ∪ Mj
    (single mode, searched) that is 3-connected."""
    r = coloring.r
    ms = enumerate_pms(g)
    if ms.popcount(e1) != 1:
        raise PreconditionUnmet(f"edge {e1} is not solitary")
    classes = coloring.classes()
    c1 = coloring.color_of[e1]

    def build(cols):
        ids = sorted(e for c in cols for e in classes[c])
        h, emap = spanning_subgraph(g, ids)
        return CubicCore(h, tuple(cols), tuple(emap))

    if r == 3:
        return build((0, 1, 2))
    if e2 is not None:
        c2 = coloring.color_of[e2]
        if ms.popcount(e2) != 1 or c1 == c2 or ms.incidence[e1] & ms.incidence[e2]:
            raise PreconditionUnmet("need mutually exclusive solitary edges of different colours")
        if i is None:
            i = next(c for c in range(r) if c not in (c1, c2))
        core = build((c1, c2, i))
        if edge_connectivity(core.graph) < 3:
            raise AssertionError("pair core is not 3-connected")
        return core
    if edge_connectivity(g) < 3:
        raise PreconditionUnmet("single mode needs a 3-edge-connected graph")
    others = [c for c in range(r) if c != c1]
    for a, b in combinations(others, 2):
        core = build((c1, a, b))
        if core.graph.is_connected() and edge_connectivity(core.graph) >= 3:
            return core
    raise AssertionError("no 3-connected cubic core found")
