"""Loopless multigraphs, cuts, connectivity and canonical labels.

Vertices are the integers ``0..n-1`` and edges carry dense ids ``0..m-1``.
Parallel edges are separate records. Vertex sets are plain ``int`` bitmasks
(bit ``v`` set iff ``v`` is a member), which keeps shore arithmetic cheap.
"""

from __future__ import annotations

import dataclasses
from collections import deque
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

SHORE_SCAN_LIMIT = 20
CANONICAL_LIMIT = 16


class GraphError(ValueError):
    pass


class DisconnectedGraph(GraphError):
    pass


class Unreachable(GraphError):
    pass


class TooLarge(GraphError):
    pass


# ---------------------------------------------------------------- vertex sets

def vset(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full_mask(n: int) -> int:
    return (1 << n) - 1


# ---------------------------------------------------------------- the graph

@dataclasses.dataclass(frozen=True)
class MultiGraph:
    """Immutable loopless multigraph.

    ``edges[i]`` is the endpoint pair of the edge with id ``i``; the order of
    the two endpoints carries no meaning.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        norm = []
        for idx, (u, v) in enumerate(self.edges):
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"edge {idx} is a loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {idx} = ({u},{v}) out of range for n={self.n}")
            norm.append((u, v))
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Sequence[int]]) -> "MultiGraph":
        return cls(n, tuple((int(p[0]), int(p[1])) for p in pairs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"

    # adjacency caches; safe on a frozen instance because cached_property
    # writes straight into __dict__
    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple((1 << u) | (1 << v) for u, v in self.edges)

    @cached_property
    def mult(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for u, v in self.edges:
            key = (u, v) if u < v else (v, u)
            out[key] = out.get(key, 0) + 1
        return out

    def multiplicity(self, u: int, v: int) -> int:
        return self.mult.get((u, v) if u < v else (v, u), 0)

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incident)

    def regular_degree(self) -> int | None:
        """Common degree if the graph is regular, else None."""
        if self.n == 0:
            return None
        d = set(self.degrees)
        return d.pop() if len(d) == 1 else None

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} is not an end of edge {e}")

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj_mask[v])

    def is_simple(self) -> bool:
        return all(c == 1 for c in self.mult.values())

    # structure
    def component_masks(self, within: int | None = None) -> list[int]:
        """Vertex masks of the connected components of G[within]."""
        rest = full_mask(self.n) if within is None else within
        adj = self.adj_mask
        comps = []
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                v = low.bit_length() - 1
                new = adj[v] & rest & ~comp
                comp |= new
                frontier |= new
            comps.append(comp)
            rest &= ~comp
        return comps

    def is_connected(self, within: int | None = None) -> bool:
        if within is None:
            within = full_mask(self.n)
        if within == 0:
            return True
        return len(self.component_masks(within)) == 1

    def bipartition(self) -> tuple[int, int] | None:
        """Colour classes (A, B) with A holding the lowest vertex of each
        component, or None if the graph has an odd cycle."""
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for w in members(self.adj_mask[v]):
                    if side[w] < 0:
                        side[w] = 1 - side[v]
                        queue.append(w)
                    elif side[w] == side[v]:
                        return None
        a = vset(v for v in range(self.n) if side[v] == 0)
        return a, full_mask(self.n) & ~a

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    # derived graphs; each returns (graph, vertex map new->old, edge map new->old)
    def delete_edges(self, ids: Iterable[int]) -> tuple["MultiGraph", list[int], list[int]]:
        drop = set(ids)
        keep = [i for i in range(self.m) if i not in drop]
        return (MultiGraph(self.n, tuple(self.edges[i] for i in keep)),
                list(range(self.n)), keep)

    def induced(self, mask: int) -> tuple["MultiGraph", list[int], list[int]]:
        vmap = members(mask)
        pos = {v: i for i, v in enumerate(vmap)}
        emap = [i for i, (u, v) in enumerate(self.edges) if u in pos and v in pos]
        g = MultiGraph(len(vmap), tuple((pos[self.edges[i][0]], pos[self.edges[i][1]]) for i in emap))
        return g, vmap, emap

    def delete_vertices(self, vs: Iterable[int]) -> tuple["MultiGraph", list[int], list[int]]:
        return self.induced(full_mask(self.n) & ~vset(vs))

    def add_edges(self, pairs: Iterable[Sequence[int]]) -> "MultiGraph":
        return MultiGraph(self.n, self.edges + tuple((p[0], p[1]) for p in pairs))

    def relabel(self, perm: Sequence[int]) -> "MultiGraph":
        """Image of the graph under the vertex map ``v -> perm[v]``."""
        return MultiGraph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def edges_between(self, a: int, b: int) -> list[int]:
        """Ids of edges with one end in mask ``a`` and the other in mask ``b``."""
        out = []
        for i, (u, v) in enumerate(self.edges):
            if ((a >> u) & 1 and (b >> v) & 1) or ((a >> v) & 1 and (b >> u) & 1):
                out.append(i)
        return out

    @cached_property
    def cut_sizes(self) -> np.ndarray:
        """``cut_sizes[s]`` = |∂(S)| for every subset S of {0..n-2} encoded as s.

        Every cut has exactly one shore avoiding vertex n-1, so this array
        covers every cut once (s = 0 is the empty cut).
        """
        if self.n > SHORE_SCAN_LIMIT:
            raise TooLarge(f"shore scan limited to n <= {SHORE_SCAN_LIMIT}")
        k = max(self.n - 1, 0)
        s = np.arange(1 << k, dtype=np.int64)
        out = np.zeros(1 << k, dtype=np.int32)
        for (u, v), mu in self.mult.items():
            out += mu * (((s >> u) ^ (s >> v)) & 1).astype(np.int32)
        return out

    @cached_property
    def shore_sizes(self) -> np.ndarray:
        k = max(self.n - 1, 0)
        return np.bitwise_count(np.arange(1 << k, dtype=np.uint64)).astype(np.int32)


def edge_list(g: MultiGraph) -> list[tuple[int, int]]:
    return list(g.edges)


# ---------------------------------------------------------------- cuts

@dataclasses.dataclass(frozen=True)
class Cut:
    shore: int
    co_shore: int
    edge_ids: frozenset
    parity: str
    is_trivial: bool
    is_bond: bool

    @property
    def size(self) -> int:
        return len(self.edge_ids)

    @property
    def is_even(self) -> bool:
        return self.parity == "even"

    @property
    def is_odd(self) -> bool:
        return self.parity == "odd"

    def smaller_shore(self) -> int:
        """The shore that is lexicographically smaller as a sorted vertex list."""
        return min(self.shore, self.co_shore, key=members)


def cut_of(g: MultiGraph, x: int | Iterable[int]) -> Cut:
    shore = x if isinstance(x, int) else vset(x)
    full = full_mask(g.n)
    if shore & ~full:
        raise GraphError("shore has vertices outside the graph")
    co = full & ~shore
    ids = frozenset(i for i, em in enumerate(g.edge_masks) if popcount(em & shore) == 1)
    a, b = popcount(shore), popcount(co)
    parity = "even" if a % 2 == 0 and b % 2 == 0 else "odd"
    trivial = a == 1 or b == 1
    bond = bool(ids) and g.is_connected(shore) and g.is_connected(co)
    return Cut(shore, co, ids, parity, trivial, bond)


def quadrants(g: MultiGraph, c: Cut, d: Cut) -> tuple[tuple[int, int, int, int], bool]:
    """(X∩Y, X∩Ȳ, X̄∩Y, X̄∩Ȳ) and whether C and D are laminar."""
    x, xb, y, yb = c.shore, c.co_shore, d.shore, d.co_shore
    quads = (x & y, x & yb, xb & y, xb & yb)
    return quads, any(q == 0 for q in quads)


def iter_shores(g: MultiGraph) -> Iterable[tuple[int, int]]:
    """(shore, cut size) for each nonempty proper shore avoiding vertex n-1."""
    sizes = g.cut_sizes
    for s in range(1, len(sizes)):
        yield s, int(sizes[s])


def edge_connectivity(g: MultiGraph) -> int:
    if g.n <= 1:
        return 0
    if not g.is_connected():
        raise DisconnectedGraph("edge connectivity of a disconnected graph")
    if g.n <= SHORE_SCAN_LIMIT:
        return int(g.cut_sizes[1:].min())
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    for (u, v), mu in g.mult.items():
        h.add_edge(u, v, weight=mu)
    value, _ = nx.stoer_wagner(h)
    return int(value)


def is_k_edge_connected(g: MultiGraph, k: int) -> bool:
    return g.n >= 2 and g.is_connected() and edge_connectivity(g) >= k


def _local_vertex_connectivity_at_least(g: MultiGraph, u: int, v: int, k: int) -> bool:
    # parallel uv edges count as internally disjoint paths; what remains must
    # survive deletion of any k - mu - 1 other vertices
    need = k - g.multiplicity(u, v)
    if need <= 0:
        return True
    from itertools import combinations

    others = [w for w in range(g.n) if w not in (u, v)]
    adj = [a & ~((1 << v) if w == u else (1 << u) if w == v else 0) for w, a in enumerate(g.adj_mask)]
    for size in range(need):
        for sep in combinations(others, size):
            alive = full_mask(g.n) & ~vset(sep)
            seen = 1 << u
            frontier = seen
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                w = low.bit_length() - 1
                new = adj[w] & alive & ~seen
                seen |= new
                frontier |= new
            if not (seen >> v) & 1:
                return False
    return True


def is_k_connected(g: MultiGraph, k: int) -> bool:
    """Menger-style k-connectivity for multigraphs.

    Every pair of vertices must be joined by k internally disjoint paths,
    where parallel edges count as distinct paths. Under this convention the
    three-edge bundle on two vertices is 3-connected and a cubic graph's
    vertex connectivity equals its edge connectivity.
    """
    if g.n < 2 or not g.is_connected():
        return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not _local_vertex_connectivity_at_least(g, u, v, k):
                return False
    return True


def vertex_connectivity(g: MultiGraph) -> int:
    if g.n < 2 or not g.is_connected():
        return 0
    k = 1
    while is_k_connected(g, k + 1):
        k += 1
    return k


def is_3_connected_cubic(g: MultiGraph) -> bool:
    return g.regular_degree() == 3 and is_k_edge_connected(g, 3)


def bfs_distances(g: MultiGraph, sources: Iterable[int]) -> list[int]:
    dist = [-1] * g.n
    queue = deque()
    for s in sources:
        if dist[s] < 0:
            dist[s] = 0
            queue.append(s)
    while queue:
        v = queue.popleft()
        for w in members(g.adj_mask[v]):
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def edge_distance(g: MultiGraph, e1: int, e2: int) -> int:
    """Length of a shortest path from an end of e1 to an end of e2."""
    dist = bfs_distances(g, g.edges[e1])
    best = min(dist[x] if dist[x] >= 0 else float("inf") for x in g.edges[e2])
    if best == float("inf"):
        raise Unreachable(f"no path between edges {e1} and {e2}")
    return int(best)


# ---------------------------------------------------------------- canonical form

def _matrix(g: MultiGraph) -> list[list[int]]:
    a = [[0] * g.n for _ in range(g.n)]
    for (u, v), mu in g.mult.items():
        a[u][v] = a[v][u] = mu
    return a


def _refine(a, nbrs, cells):
    """Equitable refinement. Cell order depends only on invariants."""
    trace = []
    while True:
        cell_of = {}
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i
        k = len(cells)
        new_cells = []
        level = []
        for i, c in enumerate(cells):
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in c:
                sig = [0] * k
                for w in nbrs[v]:
                    sig[cell_of[w]] += a[v][w]
                groups.setdefault(tuple(sig), []).append(v)
            if len(groups) == 1:
                new_cells.append(c)
                continue
            keys = sorted(groups)
            level.append((i, tuple((key, len(groups[key])) for key in keys)))
            new_cells.extend(groups[key] for key in keys)
        if len(new_cells) == k:
            return cells, tuple(trace)
        trace.append(tuple(level))
        cells = new_cells


def _canon_connected(g: MultiGraph) -> bytes:
    n = g.n
    a = _matrix(g)
    nbrs = [members(m) for m in g.adj_mask]
    best = {"key": None, "order": None}
    autos: list[list[int]] = []

    def leaf(cells, traces):
        order = [c[0] for c in cells]
        cert = tuple(a[order[i]][order[j]] for i in range(n) for j in range(i + 1, n))
        key = (traces, cert)
        if best["key"] is None or key > best["key"]:
            best["key"], best["order"] = key, order
        elif key == best["key"]:
            perm = [0] * n
            for x, y in zip(best["order"], order):
                perm[x] = y
            autos.append(perm)

    def orbit_rep(fixed, v):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in autos:
            if all(p[f] == f for f in fixed):
                for x in range(n):
                    rx, ry = find(x), find(p[x])
                    if rx != ry:
                        parent[rx] = ry
        return find(v)

    def search(cells, traces, fixed, equal):
        if best["key"] is not None and equal:
            depth = len(traces) - 1
            bt = best["key"][0]
            mine = traces[depth]
            theirs = bt[depth] if depth < len(bt) else None
            if theirs is not None:
                if mine < theirs:
                    return
                if mine > theirs:
                    equal = False
        if len(cells) == n:
            leaf(cells, traces)
            return
        target = next(i for i, c in enumerate(cells) if len(c) > 1)
        tried = set()
        for v in sorted(cells[target]):
            if autos:
                rep = orbit_rep(fixed, v)
                if rep in tried:
                    continue
                tried.add(rep)
            else:
                tried.add(v)
            rest = [w for w in cells[target] if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            child, tr = _refine(a, nbrs, child)
            search(child, traces + (tr,), fixed + [v], equal)

    cells, tr = _refine(a, nbrs, [list(range(n))])
    search(cells, (tr,), [], True)
    cert = best["key"][1]
    if any(x > 255 for x in cert):
        raise TooLarge("multiplicity above 255")
    return bytes([n]) + bytes(cert)


def canonical_form(g: MultiGraph, bound: int = CANONICAL_LIMIT) -> bytes:
    """Byte string that is equal for two graphs iff they are isomorphic."""
    if g.n > bound:
        raise TooLarge(f"canonical form limited to n <= {bound}")
    comps = g.component_masks()
    if len(comps) <= 1:
        return b"C" + _canon_connected(g)
    parts = sorted(_canon_connected(g.induced(c)[0]) for c in comps)
    return b"D" + b"".join(bytes([len(p) >> 8, len(p) & 255]) + p for p in parts)


def is_isomorphic(g: MultiGraph, h: MultiGraph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_form(g) == canonical_form(h)


def canonical_relabel(g: MultiGraph) -> MultiGraph:
    """A representative of g's isomorphism class rebuilt from its canonical form."""
    cf = canonical_form(g)
    return from_canonical(cf)


def from_canonical(cf: bytes) -> MultiGraph:
    if cf[:1] == b"C":
        return _from_connected(cf[1:])
    parts = []
    i = 1
    while i < len(cf):
        ln = (cf[i] << 8) | cf[i + 1]
        parts.append(_from_connected(cf[i + 2:i + 2 + ln]))
        i += 2 + ln
    n = 0
    edges = []
    for p in parts:
        edges.extend((u + n, v + n) for u, v in p.edges)
        n += p.n
    return MultiGraph(n, tuple(edges))


def _from_connected(payload: bytes) -> MultiGraph:
    n = payload[0]
    vals = payload[1:]
    edges = []
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            edges.extend([(i, j)] * vals[k])
            k += 1
    return MultiGraph(n, tuple(edges))
