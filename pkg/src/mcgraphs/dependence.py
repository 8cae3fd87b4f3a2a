"""The dependence relation between edges and everything derived from it.

Edge e depends on f (e -> f) when every perfect matching containing e also
contains f. With per-edge incidence bit-vectors that is a single mask test.
"""

from __future__ import annotations

import dataclasses

from .graph_core import GraphError, MultiGraph
from .matching_engine import MatchingSet, enumerate_pms, is_matching_covered


class NotMatchingCovered(GraphError):
    pass


class UnmatchableEdge(GraphError):
    pass


class NotEven2Cut(GraphError):
    pass


def _check_matchable(ms: MatchingSet, *edges: int):
    for e in edges:
        if ms.incidence[e] == 0:
            raise UnmatchableEdge(f"edge {e} lies in no perfect matching")


def depends(ms: MatchingSet, e: int, f: int) -> bool:
    _check_matchable(ms, e, f)
    return ms.incidence[e] & ~ms.incidence[f] == 0


def mutually_exclusive(ms: MatchingSet, e: int, f: int) -> bool:
    _check_matchable(ms, e, f)
    return ms.incidence[e] & ms.incidence[f] == 0


@dataclasses.dataclass(frozen=True)
class DependenceAnalysis:
    """Classes are indexed by (size desc, smallest edge id asc).

    ``poset_edges`` holds every pair (i, j), i != j, with class i depending on
    class j; ``hasse`` keeps only the covering pairs. Arrows always point from
    the depending class to the class it depends on.
    """

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    poset_edges: frozenset
    hasse: frozenset
    minimal: frozenset
    removable: frozenset
    solitary: frozenset
    pattern: tuple[int, ...]
    epsilon: int
    epsilon_class: int
    pm_count: int

    def depends_on(self, i: int, j: int) -> bool:
        return i == j or (i, j) in self.poset_edges

    def solitary_classes(self) -> list[tuple[int, ...]]:
        return [self.classes[i] for i in sorted(self.solitary)]

    def solitary_edges(self) -> list[int]:
        return sorted(e for i in self.solitary for e in self.classes[i])


def analyze(g: MultiGraph, ms: MatchingSet | None = None) -> DependenceAnalysis:
    ok, why = is_matching_covered(g)
    if not ok:
        raise NotMatchingCovered(f"not matching covered ({why})")
    if ms is None:
        ms = enumerate_pms(g)
    groups: dict[int, list[int]] = {}
    for e in range(g.m):
        groups.setdefault(ms.incidence[e], []).append(e)
    ordered = sorted(groups.items(), key=lambda kv: (-len(kv[1]), kv[1][0]))
    classes = tuple(tuple(v) for _, v in ordered)
    bits = [k for k, _ in ordered]
    class_of = [0] * g.m
    for i, c in enumerate(classes):
        for e in c:
            class_of[e] = i

    k = len(classes)
    reach = [[(bits[i] & ~bits[j]) == 0 for j in range(k)] for i in range(k)]
    poset = frozenset((i, j) for i in range(k) for j in range(k) if i != j and reach[i][j])
    hasse = frozenset(
        (i, j) for (i, j) in poset
        if not any(l != i and l != j and reach[i][l] and reach[l][j] for l in range(k))
    )
    minimal = frozenset(j for j in range(k) if not any((i, j) in poset for i in range(k)))
    removable = frozenset(
        j for j in minimal if g.delete_edges(classes[j])[0].is_connected()
    )
    solitary = frozenset(i for i in range(k) if bin(bits[i]).count("1") == 1)
    pattern = tuple(sorted((len(classes[i]) for i in solitary), reverse=True))
    return DependenceAnalysis(
        classes=classes,
        class_of=tuple(class_of),
        poset_edges=poset,
        hasse=hasse,
        minimal=minimal,
        removable=removable,
        solitary=solitary,
        pattern=pattern,
        epsilon=len(classes[0]),
        epsilon_class=0,
        pm_count=ms.count,
    )


def solitary_pattern(g: MultiGraph) -> tuple[int, ...]:
    return analyze(g).pattern


@dataclasses.dataclass(frozen=True)
class ClassImage:
    """Where one class D of G lands in the two marked components.

    ``kind`` is "contains" when the cut lies inside D and "avoids" when it
    misses D. ``sides[i]`` is the class index in component i (None when D has
    no edge there).
    """

    g_class: int
    kind: str
    sides: tuple[int | None, int | None]
    ok: bool


@dataclasses.dataclass(frozen=True)
class ClassTransfer:
    cut: object
    components: tuple
    analyses: tuple
    images: tuple[ClassImage, ...]
    recomposed_ok: bool

    @property
    def consistent(self) -> bool:
        return self.recomposed_ok and all(im.ok for im in self.images)


def classes_across_2cut(g: MultiGraph, cut) -> ClassTransfer:
    """Map every class of G onto the classes of its two marked components
    and rebuild the class holding the cut from the marker classes."""
    from .cut_structure import marked_components

    if cut.size != 2 or not cut.is_even:
        raise NotEven2Cut("cut is not an even 2-cut")
    a = analyze(g)
    comps = marked_components(g, cut)
    sub = tuple(analyze(c.graph) for c in comps)
    cset = set(cut.edge_ids)
    # parent edge -> (side, local edge)
    where: dict[int, tuple[int, int]] = {}
    for s, c in enumerate(comps):
        for local, parent in enumerate(c.edge_map):
            if parent is not None:
                where[parent] = (s, local)

    images = []
    for ci, cls in enumerate(a.classes):
        members_ = set(cls)
        if cset <= members_:
            kind = "contains"
        elif not cset & members_:
            kind = "avoids"
        else:
            images.append(ClassImage(ci, "splits", (None, None), False))
            continue
        sides: list[int | None] = [None, None]
        ok = True
        for s in (0, 1):
            local = {where[e][1] for e in cls if e in where and where[e][0] == s}
            if kind == "contains":
                local.add(comps[s].marker_edge)
            if not local:
                continue
            idx = sub[s].class_of[next(iter(local))]
            sides[s] = idx
            if set(sub[s].classes[idx]) != local:
                ok = False
        if sides[0] is None and sides[1] is None:
            ok = False
        images.append(ClassImage(ci, kind, (sides[0], sides[1]), ok))

    # D = (D1 - e1) + (D2 - e2) + C, with Di the class of the marker
    rebuilt = set(cset)
    for s, c in enumerate(comps):
        d = sub[s].classes[sub[s].class_of[c.marker_edge]]
        rebuilt |= {c.edge_map[x] for x in d if x != c.marker_edge}
    target = set(a.classes[a.class_of[next(iter(cset))]])
    return ClassTransfer(cut, comps, sub, tuple(images), rebuilt == target)
