import random
from collections import Counter

import pytest
from hypothesis import given, strategies as st

import oracles as O
from mcgraphs.cut_structure import (
    Bipartite,
    DegreeMismatch,
    EmptyOrFullShore,
    NotTwoConnected,
    classify_brick_brace,
    contract,
    cut_contractions,
    decompose_2cuts,
    find_even_2cuts,
    glue,
    is_bicritical,
    is_separating_cut,
    is_tight_cut,
    lovasz_doubleton_check,
    marked_components,
    near_bipartite_witness,
    separating_by_matchings,
    splice,
    splice_k4,
)
from mcgraphs.dependence import NotMatchingCovered, analyze
from mcgraphs.families import _contractible_triangles, gen_staircase3
from mcgraphs.fixtures import (
    C4,
    C6BAR,
    GLUINGS,
    K4,
    NAMED,
    PETERSEN,
    R8,
    THETA,
    THREE_PIECE_3GRAPH,
)
from mcgraphs.graph_core import MultiGraph, canonical_form, cut_of, edge_connectivity, is_isomorphic, iter_shores
from mcgraphs.matching_engine import OrderTooSmall, enumerate_pms, is_matching_covered
from mcgraphs.rgraph_tools import is_rgraph

K33 = MultiGraph(6, tuple((a, b) for a in range(3) for b in range(3, 6)))


def small_fixtures(max_n=12):
    return [(k, g) for k, g in NAMED.items() if g.n <= max_n]


def test_find_even_2cuts_examples():
    assert find_even_2cuts(K4) == []
    g = glue(K4, 0, K4, 0)
    (c,) = find_even_2cuts(g)
    assert c.edge_ids == frozenset({g.m - 2, g.m - 1})
    cuts = find_even_2cuts(C4)
    assert sorted(sorted(c.edge_ids) for c in cuts) == [[0, 2], [1, 3]]


def test_marked_components_examples():
    g = glue(K4, 2, K4, 4)
    (c,) = find_even_2cuts(g)
    a, b = marked_components(g, c)
    assert is_isomorphic(a.graph, K4) and is_isomorphic(b.graph, K4)
    for comp in (a, b):
        assert comp.edge_map[comp.marker_edge] is None
        assert set(comp.marker_pair) == set(c.edge_ids)
    for left, right in marked_components(C4, find_even_2cuts(C4)[0]), marked_components(C4, find_even_2cuts(C4)[1]):
        for comp in (left, right):
            assert comp.graph.n == 2 and comp.graph.m == 2


def test_marked_components_of_rgraphs_are_rgraphs():
    for name, g in GLUINGS.items():
        if not is_rgraph(g):
            continue
        for c in find_even_2cuts(g):
            for comp in marked_components(g, c):
                assert is_rgraph(comp.graph), name


def test_glue_examples():
    g = glue(K4, 0, K4, 0)
    assert g.n == 8 and edge_connectivity(g) == 2
    assert is_matching_covered(g)[0]
    for h1 in (THETA, K4, C6BAR, R8):
        for h2 in (THETA, K4, C6BAR):
            glued = glue(h1, 0, h2, 1)
            assert is_matching_covered(glued)[0]
            c = next(c for c in find_even_2cuts(glued) if c.edge_ids == frozenset({glued.m - 2, glued.m - 1}))
            a, b = marked_components(glued, c)
            assert {canonical_form(a.graph), canonical_form(b.graph)} == {canonical_form(h1), canonical_form(h2)}


def test_three_piece_3graph_decomposition():
    tree = decompose_2cuts(THREE_PIECE_3GRAPH)
    expected = Counter(canonical_form(h) for h in (THETA, K4, C6BAR, C6BAR))
    assert tree.leaf_multiset() == expected
    for seed in range(5):
        assert decompose_2cuts(THREE_PIECE_3GRAPH, random.Random(seed)).leaf_multiset() == expected


def test_decompose_trivial_and_errors():
    tree = decompose_2cuts(K4)
    assert tree.root.is_leaf and [h.m for h in tree.leaves()] == [6]
    with pytest.raises(NotTwoConnected):
        decompose_2cuts(MultiGraph(4, ((0, 1), (1, 2), (2, 3))))


def test_shuffled_decompositions_agree_on_gluings():
    for name, g in GLUINGS.items():
        base = decompose_2cuts(g).leaf_multiset()
        for seed in range(5):
            assert decompose_2cuts(g, random.Random(seed)).leaf_multiset() == base, name


def test_regluing_internal_nodes_reproduces_parent():
    for name, g in GLUINGS.items():
        for node in decompose_2cuts(g).internal_nodes():
            a, b = node.components
            again = glue(a.graph, a.marker_edge, b.graph, b.marker_edge)
            assert is_isomorphic(again, node.graph), name


def test_pm_dichotomy_and_solitary_transfer_across_2cuts():
    for name, g in small_fixtures():
        if not is_matching_covered(g)[0]:
            continue
        ms = enumerate_pms(g)
        for c in find_even_2cuts(g):
            comps = marked_components(g, c)
            for pm in ms.matchings:
                hit = c.edge_ids.intersection(pm)
                assert len(hit) in (0, 2), name
                for comp in comps:
                    local = {comp.edge_map.index(e) for e in pm if e in comp.edge_map}
                    if hit:
                        local.add(comp.marker_edge)
                    covered = sorted(v for e in local for v in comp.graph.edges[e])
                    assert covered == list(range(comp.graph.n)), name
            markers_solitary = all(enumerate_pms(x.graph).popcount(x.marker_edge) == 1 for x in comps)
            for f in c.edge_ids:
                assert (ms.popcount(f) == 1) == markers_solitary, name


def test_contract_examples():
    k = contract(K4, {0, 1})
    assert k.graph.n == 3 and k.graph.m == 5 and k.deleted_edges == (0,)
    star = contract(R8, set(range(8)) - {3})
    assert star.graph.n == 2 and star.graph.m == 3
    with pytest.raises(EmptyOrFullShore):
        contract(K4, set())
    with pytest.raises(EmptyOrFullShore):
        contract(K4, {0, 1, 2, 3})


def test_contracting_a_triangle_of_a_3staircase():
    # frozen from canonical comparisons: both triangles of the (4,4) staircase
    # contract to the (2,4) staircase
    g = gen_staircase3(4, 4)
    tris = _contractible_triangles(g)
    assert len(tris) == 2
    for t in tris:
        assert is_isomorphic(contract(g, t).graph, gen_staircase3(2, 4))


def test_splice_examples():
    assert is_isomorphic(splice(K4, 0, K4, 0), C6BAR)
    assert is_isomorphic(splice(K4, 1, K4, 2, {0: 5, 3: 1, 4: 3}), C6BAR)
    with pytest.raises(DegreeMismatch):
        splice(K4, 0, C4, 0)
    for name, g in NAMED.items():
        if g.n <= 12 and g.regular_degree() == 3 and g.is_simple() and edge_connectivity(g) == 3:
            for v in range(g.n):
                h = splice_k4(g, v)
                assert h.regular_degree() == 3 and edge_connectivity(h) == 3
                assert is_isomorphic(h, splice(g, v, K4, 0))


def test_contract_then_splice_roundtrip():
    for name, g in (("R8", R8), ("petersen", PETERSEN), ("C6bar", C6BAR)):
        for shore, size in iter_shores(g):
            c = cut_of(g, shore)
            if not c.is_odd or c.size != 3 or c.is_trivial:
                continue
            keep_x, keep_xb = cut_contractions(g, c)
            by_parent = {keep_xb.edge_map[i]: i for i in keep_xb.graph.incident[keep_xb.vertex]}
            pi = {i: by_parent[keep_x.edge_map[i]] for i in keep_x.graph.incident[keep_x.vertex]}
            again = splice(keep_x.graph, keep_x.vertex, keep_xb.graph, keep_xb.vertex, pi)
            assert is_isomorphic(again, g), name


def test_separating_cuts():
    for v in range(R8.n):
        assert is_separating_cut(R8, cut_of(R8, {v}))
    for name, g in (("R8", R8), ("C6bar", C6BAR), ("N10", NAMED["N10"])):
        for shore, size in iter_shores(g):
            c = cut_of(g, shore)
            if c.is_odd and c.size == 3:
                assert is_separating_cut(g, c)
                assert separating_by_matchings(g, c)
    five = [cut_of(PETERSEN, s) for s, size in iter_shores(PETERSEN) if size == 5 and bin(s).count("1") == 5]
    assert five and any(is_separating_cut(PETERSEN, c) for c in five)
    with pytest.raises(NotMatchingCovered):
        is_separating_cut(MultiGraph(4, ((0, 1), (1, 2), (2, 3), (0, 2))), cut_of(K4, {0}))


def test_tight_cut_examples():
    for v in range(4):
        assert is_tight_cut(K4, cut_of(K4, {v}))
    g = GLUINGS["glue_K4_K4"]
    (c,) = find_even_2cuts(g)
    assert not is_tight_cut(g, c)
    spliced = splice(K33, 0, K33, 0)
    x = cut_of(spliced, set(range(5)))
    assert spliced.is_bipartite() and not x.is_trivial
    assert is_tight_cut(spliced, x)
    v = classify_brick_brace(spliced)
    assert v.kind == "has_nontrivial_tight_cut"


def test_brick_brace_examples():
    for g in (K4, PETERSEN):
        v = classify_brick_brace(g)
        assert v.kind == "brick" and v.elp_consistent
    assert classify_brick_brace(C4).kind == "brace"
    assert classify_brick_brace(K33).kind == "brace"


def test_bicritical_examples():
    assert is_bicritical(K4)
    assert not is_bicritical(C4)
    with pytest.raises(OrderTooSmall):
        is_bicritical(THETA)
    for name, g in NAMED.items():
        if 4 <= g.n <= 12 and is_rgraph(g) and edge_connectivity(g) >= 3 and analyze(g).solitary:
            assert is_bicritical(g), name


def test_near_bipartite_examples():
    w = near_bipartite_witness(K4)
    assert w is not None
    h = K4.delete_edges(w.removed)[0]
    assert is_isomorphic(h, C4)
    w = near_bipartite_witness(C6BAR)
    assert w is not None
    # nine edges less a doubleton: a hexagon with one chord, bipartite
    h = C6BAR.delete_edges(w.removed)[0]
    assert h.m == 7 and h.is_bipartite() and is_matching_covered(h)[0]
    assert near_bipartite_witness(PETERSEN) is None
    with pytest.raises(Bipartite):
        near_bipartite_witness(C4)


def test_lovasz_check_on_solitary_doubletons():
    for g in (K4, C6BAR, R8, NAMED["N10"]):
        for cls in analyze(g).solitary_classes():
            if len(cls) == 2:
                assert lovasz_doubleton_check(g, *cls)


@given(st.sampled_from(sorted(GLUINGS)), st.integers(0, 10 ** 6))
def test_gluing_decomposition_uniqueness_property(name, seed):
    g = GLUINGS[name]
    assert decompose_2cuts(g, random.Random(seed)).leaf_multiset() == decompose_2cuts(g).leaf_multiset()


@given(st.sampled_from([THETA, K4, C6BAR, R8]), st.sampled_from([THETA, K4, C6BAR]), st.data())
def test_glue_then_split_roundtrip(g1, g2, data):
    e1 = data.draw(st.integers(0, g1.m - 1))
    e2 = data.draw(st.integers(0, g2.m - 1))
    g = glue(g1, e1, g2, e2)
    assert is_matching_covered(g)[0]
    c = cut_of(g, set(range(g1.n)))
    assert c.edge_ids == frozenset({g.m - 2, g.m - 1}) and c.is_even
    a, b = marked_components(g, c)
    assert is_isomorphic(a.graph, g1) and is_isomorphic(b.graph, g2)
    assert sorted(O.crossing(g, set(range(g1.n)))) == [g.m - 2, g.m - 1]
