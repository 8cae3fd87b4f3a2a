import pytest
from hypothesis import given

import oracles as O
from strategies import even_multigraphs, multigraphs
from mcgraphs.families import staircase3_layout
from mcgraphs.fixtures import C4, C6BAR, K2, K4, NAMED, P4, PETERSEN, R8, THETA, edge_id
from mcgraphs.graph_core import MultiGraph, members
from mcgraphs.matching_engine import (
    BoundExceeded,
    NoPerfectMatching,
    NotRGraph,
    NotSolitary,
    NotUniquelyMatchable,
    OddOrder,
    OrderTooSmall,
    bridges,
    companion_of,
    count_pms,
    enumerate_pms,
    is_matching_covered,
    is_matching_double_covered,
    is_uniquely_matchable,
    kotzig_1cut,
    solitary_edges,
)
from mcgraphs.rgraph_tools import is_rgraph


def ladder(n):
    k = n // 2
    edges = [(i, i + k) for i in range(k)]
    edges += [(i, i + 1) for i in range(k - 1)] + [(i + k, i + k + 1) for i in range(k - 1)]
    return MultiGraph(n, tuple(edges))


def dumbbell3(a, b):
    lay = staircase3_layout(a, b)
    h, _, emap = lay.graph.delete_edges(lay.added)
    return h, emap.index(lay.singleton)


def test_pm_counts():
    assert enumerate_pms(K4).count == 3
    assert enumerate_pms(THETA).count == 3
    assert enumerate_pms(PETERSEN).count == 6
    assert [sorted(pm) for pm in enumerate_pms(THETA).matchings] == [[0], [1], [2]]


def test_enumeration_order_is_deterministic():
    assert enumerate_pms(K4).matchings == enumerate_pms(K4).matchings
    assert [tuple(sorted(pm)) for pm in enumerate_pms(K4).matchings] == sorted(
        O.perfect_matchings(K4))


def test_odd_order_and_bound():
    with pytest.raises(OddOrder):
        enumerate_pms(MultiGraph(3, ((0, 1), (1, 2))))
    big = ladder(22)
    with pytest.raises(BoundExceeded):
        enumerate_pms(big)
    assert enumerate_pms(big, bound=None).count == count_pms(big)


def test_matching_covered_examples():
    assert is_matching_covered(PETERSEN) == (True, None)
    assert is_matching_covered(K2)[0]
    for a, b in ((2, 2), (2, 4), (4, 4)):
        h, even_cut = dumbbell3(a, b)
        ok, witness = is_matching_covered(h)
        assert not ok
        bad = [e for e in range(h.m) if not enumerate_pms(h).incidence[e]]
        assert len(bad) == 5 and even_cut in bad and witness in bad


def test_double_covered_examples():
    assert is_matching_double_covered(PETERSEN)
    assert not is_matching_double_covered(K4)
    for n in (2, 4, 6, 8):
        assert not is_matching_double_covered(ladder(n))
    for n in (10, 12):
        assert is_matching_double_covered(ladder(n))


def test_solitary_edges_examples():
    assert solitary_edges(K4) == list(range(6))
    assert len(solitary_edges(R8)) == 5
    assert solitary_edges(PETERSEN) == []
    with pytest.raises(NoPerfectMatching):
        solitary_edges(MultiGraph(4, ((0, 1), (0, 2), (0, 3))))


def test_uniquely_matchable_examples():
    assert is_uniquely_matchable(MultiGraph(0))
    assert is_uniquely_matchable(K2)
    assert not is_uniquely_matchable(C4)


def test_kotzig_examples():
    assert kotzig_1cut(K2) == 0
    e = kotzig_1cut(P4)
    assert e in (0, 2)
    with pytest.raises(NotUniquelyMatchable):
        kotzig_1cut(C4)
    with pytest.raises(NotUniquelyMatchable):
        kotzig_1cut(MultiGraph(0))


def test_kotzig_matches_companion_on_r8():
    for e in solitary_edges(R8):
        u, v = R8.edges[e]
        h, _, emap = R8.delete_vertices([u, v])
        assert emap[kotzig_1cut(h)] == companion_of(R8, e).companion


def test_companion_of_k4():
    e = edge_id(K4, 0, 1)
    cert = companion_of(K4, e)
    assert cert.companion == edge_id(K4, 2, 3)
    assert cert.cut_C.is_trivial and cert.cut_D.is_trivial
    assert cert.unique


def test_companion_of_r8_singleton():
    from mcgraphs.dependence import analyze

    a = analyze(R8)
    (single,) = [c[0] for c in a.solitary_classes() if len(c) == 1]
    cert = companion_of(R8, single)
    u, v = R8.edges[single]
    # frozen from enumeration: the companion is the unique odd bridge of R8 - u - v
    h, _, emap = R8.delete_vertices([u, v])
    odd_bridges = [emap[b] for b in bridges(h)
                   if all(len(O.bfs(h.n, [x for i, x in enumerate(h.edges) if i != b], [s])) % 2
                          for s in h.edges[b])]
    assert odd_bridges == [cert.companion]
    assert cert.unique


def test_companion_of_c6bar_doubleton():
    from mcgraphs.dependence import analyze

    for cls in analyze(C6BAR).solitary_classes():
        cert = companion_of(C6BAR, cls[0])
        assert cert.cut_C.size == cert.cut_D.size == 3
        _check_companion_invariants(C6BAR, cls[0], cert)


def test_companion_errors():
    with pytest.raises(OrderTooSmall):
        companion_of(THETA, 0)
    with pytest.raises(NotSolitary):
        companion_of(PETERSEN, 0)
    with pytest.raises(NotRGraph):
        companion_of(C4, 0)


def _check_companion_invariants(g, e, cert):
    u, v = g.edges[e]
    r = g.regular_degree()
    c, d = cert.cut_C, cert.cut_D
    assert c.is_odd and d.is_odd and c.size == r and d.size == r
    assert cert.companion in c.edge_ids and cert.companion in d.edge_ids
    du, dv = set(g.incident[u]), set(g.incident[v])
    assert len(du & c.edge_ids) == len(dv & d.edge_ids)
    assert len(dv & c.edge_ids) == len(du & d.edge_ids)
    # X and Y partition V - u - v
    assert c.shore & d.shore == 0
    assert members(c.shore | d.shore) == sorted(set(range(g.n)) - {u, v})


def test_companion_invariants_on_fixtures():
    for name, g in NAMED.items():
        if g.n < 4 or g.n > 14 or not is_rgraph(g):
            continue
        for e in solitary_edges(g):
            _check_companion_invariants(g, e, companion_of(g, e))


@given(even_multigraphs(max_n=8, max_m=12))
def test_pms_match_subset_oracle(g):
    got = sorted(tuple(sorted(pm)) for pm in enumerate_pms(g).matchings)
    assert got == O.perfect_matchings(g)
    assert count_pms(g) == len(got)


@given(even_multigraphs(max_n=8, max_m=12))
def test_incidence_popcount_sum(g):
    ms = enumerate_pms(g)
    assert sum(ms.popcount(e) for e in range(g.m)) == ms.count * g.n // 2


@given(multigraphs(min_n=1, max_n=8, max_m=12))
def test_bridges_match_deletion_oracle(g):
    assert bridges(g) == [e for e in range(g.m) if _splits_component(g, e)]


def _splits_component(g, e):
    u, v = g.edges[e]
    rest = [x for i, x in enumerate(g.edges) if i != e]
    return v not in O.bfs(g.n, rest, [u])


@given(even_multigraphs(max_n=8, max_m=12, connected=True))
def test_solitary_iff_deleted_ends_uniquely_matchable(g):
    ms = enumerate_pms(g)
    if ms.count == 0:
        return
    for e in range(g.m):
        u, v = g.edges[e]
        h, _, _ = g.delete_vertices([u, v])
        assert (ms.popcount(e) == 1) == is_uniquely_matchable(h)


@given(even_multigraphs(max_n=8, max_m=12, connected=True))
def test_solitary_hamiltonicity_and_multiplicity(g):
    ms = enumerate_pms(g)
    for e in range(g.m):
        if ms.popcount(e) != 1:
            continue
        (me,) = ms.matchings_with(e)
        for d in me:
            if d != e:
                assert g.multiplicity(*g.edges[d]) == 1
        for pm in ms.matchings:
            if set(pm) & set(me):
                continue
            union = [g.edges[x] for x in set(pm) | set(me)]
            assert len(union) == g.n
            assert len(O.bfs(g.n, union, [0])) == g.n


@given(even_multigraphs(max_n=8, max_m=12))
def test_kotzig_on_uniquely_matchable(g):
    if g.n and is_uniquely_matchable(g):
        f = kotzig_1cut(g)
        (pm,) = enumerate_pms(g).matchings
        assert f in pm
        assert _splits_component(g, f)


def test_rgraph_fixtures_matching_covered():
    for name, g in NAMED.items():
        if g.n <= 20 and is_rgraph(g):
            assert is_matching_covered(g)[0], name
