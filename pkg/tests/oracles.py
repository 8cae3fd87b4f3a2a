"""Slow, obviously-correct reference implementations used only by tests.

Nothing here imports the package's algorithms; graphs are plain
(n, [(u, v), ...]) pairs or anything with ``.n`` and ``.edges``.
"""

from collections import Counter, deque
from itertools import combinations, permutations


def _ne(g):
    return g.n, list(g.edges)


def perfect_matchings(g):
    """All perfect matchings as sorted edge-id tuples, by subset enumeration."""
    n, edges = _ne(g)
    if n % 2:
        return []
    out = []
    for ids in combinations(range(len(edges)), n // 2):
        seen = set()
        ok = True
        for e in ids:
            u, v = edges[e]
            if u in seen or v in seen:
                ok = False
                break
            seen.update((u, v))
        if ok:
            out.append(ids)
    return out


def solitary(g):
    cnt = Counter(e for pm in perfect_matchings(g) for e in pm)
    return sorted(e for e in range(len(g.edges)) if cnt[e] == 1)


def classes(g):
    pms = perfect_matchings(g)
    key = {e: frozenset(i for i, pm in enumerate(pms) if e in pm) for e in range(len(g.edges))}
    groups = {}
    for e, k in key.items():
        groups.setdefault(k, []).append(e)
    return sorted(sorted(v) for v in groups.values())


def pattern(g):
    sol = set(solitary(g))
    out = []
    for cl in classes(g):
        if cl[0] in sol:
            out.append(len(cl))
    return tuple(sorted(out, reverse=True))


def crossing(g, shore):
    return sorted(i for i, (u, v) in enumerate(g.edges) if (u in shore) != (v in shore))


def connected(n, edges, within=None):
    verts = set(range(n)) if within is None else set(within)
    if not verts:
        return True
    adj = {v: [] for v in verts}
    for u, v in edges:
        if u in verts and v in verts:
            adj[u].append(v)
            adj[v].append(u)
    start = next(iter(verts))
    seen = {start}
    dq = deque([start])
    while dq:
        x = dq.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                dq.append(y)
    return seen == verts


def edge_connectivity(g):
    n, edges = _ne(g)
    best = None
    for k in range(1, n):
        for shore in combinations(range(n), k):
            if 0 not in shore:
                continue
            c = len(crossing(g, set(shore)))
            best = c if best is None else min(best, c)
    return best


def min_odd_cut(g):
    n, _ = _ne(g)
    return min(len(crossing(g, set(s))) for k in range(1, n, 2) for s in combinations(range(n), k))


def isomorphic(g, h):
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    b = Counter(tuple(sorted(e)) for e in h.edges)
    for p in permutations(range(g.n)):
        if Counter(tuple(sorted((p[u], p[v]))) for u, v in g.edges) == b:
            return True
    return False


def bfs(n, edges, sources):
    dist = {s: 0 for s in sources}
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    dq = deque(sources)
    while dq:
        x = dq.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                dq.append(y)
    return dist


def edge_distance(g, e, f):
    d = bfs(g.n, g.edges, list(g.edges[e]))
    return min(d.get(x, float("inf")) for x in g.edges[f])


def proper_colorings(g, r):
    """All proper r-edge-colourings as colour tuples (not reduced)."""
    n, edges = _ne(g)
    out = []
    col = [None] * len(edges)

    def rec(i):
        if i == len(edges):
            out.append(tuple(col))
            return
        u, v = edges[i]
        used = {col[j] for j in range(i) if set(edges[j]) & {u, v}}
        for c in range(r):
            if c not in used:
                col[i] = c
                rec(i + 1)
        col[i] = None

    rec(0)
    return out


def colorings_up_to_renaming(g, r):
    seen = set()
    for col in proper_colorings(g, r):
        ren = {}
        seen.add(tuple(ren.setdefault(c, len(ren)) for c in col))
    return seen


def is_bridge(g, e):
    rest = [x for i, x in enumerate(g.edges) if i != e]
    return not connected(g.n, rest)
