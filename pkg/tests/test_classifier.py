from collections import Counter

import pytest
from hypothesis import given, strategies as st

import oracles as O
from strategies import cubic_corpus, family_corpus, quartic_corpus
from mcgraphs.classifier import (
    CHECKS,
    CUBIC_PATTERNS,
    HIGHER_PATTERNS,
    HarnessConfig,
    build_corpus,
    classify,
    derive_solitary_across_2cut,
    exhaustive_small_corpus,
    generated_members,
    is_half_count_exception,
    resolve_check,
    table_row,
    verify,
    verify_all,
)
from mcgraphs.cut_structure import find_even_2cuts
from mcgraphs.dependence import analyze
from mcgraphs.families import gen_staircase1
from mcgraphs.fixtures import (
    CUBIC_PATTERN_11,
    GLUINGS,
    K4,
    NAMED,
    PETERSEN,
    R8,
    THETA,
    THREE_PIECE_3GRAPH,
)
from mcgraphs.graph_core import MultiGraph, canonical_form, is_isomorphic
from mcgraphs.matching_engine import BoundExceeded, solitary_edges
from mcgraphs.rgraph_tools import is_rgraph


# ---------------------------------------------------------------- corpus

def test_cubic_corpus_counts():
    by_n = Counter(g.n for g in cubic_corpus())
    # connected loopless cubic multigraphs (OEIS A000421)
    assert [by_n[n] for n in (2, 4, 6, 8, 10)] == [1, 2, 6, 20, 91]
    simple = Counter(g.n for g in cubic_corpus() if g.is_simple())
    assert [simple[n] for n in (4, 6, 8, 10)] == [1, 2, 5, 19]


def test_quartic_corpus_counts():
    by_n = Counter(g.n for g in quartic_corpus())
    assert [by_n[n] for n in range(2, 9)] == [1, 1, 3, 6, 19, 50, 204]
    simple = Counter(g.n for g in quartic_corpus() if g.is_simple())
    assert [simple[n] for n in (5, 6, 7, 8)] == [1, 1, 2, 6]


def test_corpus_members_are_distinct_connected_regular():
    for corpus, r in ((cubic_corpus(), 3), (quartic_corpus(), 4)):
        forms = [canonical_form(g) for g in corpus]
        assert len(set(forms)) == len(forms)
        for g in corpus:
            assert g.regular_degree() == r and g.is_connected()


def test_corpus_examples():
    (theta,) = [g for g in cubic_corpus() if g.n == 2]
    assert is_isomorphic(theta, THETA)
    four = [g for g in cubic_corpus() if g.n == 4]
    assert any(is_isomorphic(g, K4) for g in four)
    assert any(is_isomorphic(g, MultiGraph(4, ((0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0))))
               for g in four)
    assert any(is_isomorphic(g, PETERSEN) for g in cubic_corpus() if g.n == 10)


def _labelled_cubics(n):
    """Brute-force connected cubic multigraphs on n vertices, one per class."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    out = []

    def rec(i, deg, chosen):
        if i == len(pairs):
            if all(d == 3 for d in deg):
                g = MultiGraph(n, tuple(chosen))
                if g.is_connected() and not any(O.isomorphic(g, h) for h in out):
                    out.append(g)
            return
        u, v = pairs[i]
        for k in range(0, 4):
            if deg[u] + k > 3 or deg[v] + k > 3:
                break
            deg[u] += k
            deg[v] += k
            rec(i + 1, deg, chosen + [(u, v)] * k)
            deg[u] -= k
            deg[v] -= k

    rec(0, [0] * n, [])
    return out


@pytest.mark.parametrize("n", [2, 4, 6])
def test_cubic_corpus_matches_brute_force(n):
    mine = {canonical_form(g) for g in cubic_corpus() if g.n == n}
    assert mine == {canonical_form(g) for g in _labelled_cubics(n)}


def test_corpus_bounds():
    with pytest.raises(BoundExceeded):
        list(exhaustive_small_corpus(12, 3))
    with pytest.raises(BoundExceeded):
        list(exhaustive_small_corpus(10, 4))


def test_generated_members_and_harness_config():
    members = generated_members()
    assert len(members) >= 80
    assert sum(label.startswith("FamilyD") for label, _ in members) >= 20
    small = build_corpus(HarnessConfig(cubic_max_n=6, quartic_max_n=4, family_max_n=8,
                                       max_t=1, d_max_n=16, d_limit=3, include_fixtures=False))
    labels = [label for label, _ in small]
    assert sum(label.startswith("cubic#") for label in labels) == 9
    assert sum(label.startswith("quartic#") for label in labels) == 5
    assert any(label.startswith("FamilyD") for label in labels)


# ---------------------------------------------------------------- classify

def test_classify_examples():
    rep = classify(R8)
    assert rep.pattern == (2, 2, 1) and rep.theorem_row == "(2,2,1) -> R8" and rep.row_consistent
    rep = classify(gen_staircase1(14))
    assert rep.pattern == (2, 2) and rep.theorem_row == "(2,2) -> staircases of order ten or more"
    assert rep.row_consistent
    rep = classify(CUBIC_PATTERN_11)
    assert rep.pattern == (1, 1) and rep.theorem_row is None
    assert "pattern has no characterised row" in rep.notes
    rep = classify(PETERSEN)
    assert rep.pattern == () and rep.theorem_row is None


def test_classify_non_3ec_decomposes():
    rep = classify(THREE_PIECE_3GRAPH)
    assert not rep.three_ec and len(rep.pieces) == 4
    assert sorted(p.n for p in rep.pieces) == [2, 4, 6, 6]
    d = rep.to_dict()
    assert d["decomposition"]["children"]


def test_table_row_for_pattern_two_needs_cubic():
    assert table_row((2,), 3) == "(2) -> family D"
    assert table_row((2,), 4) is None
    assert table_row((1, 1), 3) is None


def test_derived_solitary_matches_direct():
    for name, g in GLUINGS.items():
        if not is_rgraph(g) or len(analyze(g).solitary) > 1:
            continue
        for cut in find_even_2cuts(g):
            assert derive_solitary_across_2cut(g, cut) == tuple(solitary_edges(g)), name


def test_half_count_exception_is_real():
    # order-8 staircase of thickness two: four = n/2 solitary edges in two
    # doubletons, so no class has n/2 edges
    g = gen_staircase1(8, 2)
    assert g.regular_degree() == 4 and is_rgraph(g)
    assert len(O.perfect_matchings(g)) == 26
    assert len(O.solitary(g)) == 4
    assert max(len(c) for c in O.classes(g)) == 2
    assert O.pattern(g) == (2, 2)
    assert is_half_count_exception(g)
    assert is_half_count_exception(gen_staircase1(8, 3))
    assert not is_half_count_exception(R8)
    assert not is_half_count_exception(gen_staircase1(10, 2))


# ---------------------------------------------------------------- verify

def test_resolve_check_aliases():
    assert resolve_check("bounds") == "solitary_bounds"
    assert resolve_check("family-d") == "pattern_two_cubic"
    with pytest.raises(KeyError):
        resolve_check("nope")


def test_every_check_clean_on_fixtures():
    fixtures = list(NAMED.items())
    for rep in verify_all(fixtures, shuffles=2):
        assert rep.violations == [], rep.check
        assert rep.checked == len(fixtures)


def test_every_check_clean_on_small_corpora():
    items = [g for g in cubic_corpus() if g.n <= 8] + [g for g in quartic_corpus() if g.n <= 6]
    for name in CHECKS:
        rep = verify(name, items, shuffles=1)
        assert rep.violations == [], name


def test_verify_reports_violation_witness(monkeypatch):
    import mcgraphs.classifier as clf

    fake = dict(CHECKS)
    fake["solitary_bounds"] = (lambda c: "boom" if c.g.n == 4 else (None if c.g.n == 2 else ""), "")
    monkeypatch.setattr(clf, "CHECKS", fake)
    rep = verify("solitary_bounds", [("theta", THETA), ("K4", K4), ("R8", R8)])
    assert (rep.checked, rep.applicable) == (3, 2)
    (v,) = rep.violations
    assert v.label == "K4" and v.message == "boom" and v.graph == K4
    assert rep.to_dict()["check"] == "solitary_bounds"


def test_verify_parallel_matches_serial():
    items = [g for g in cubic_corpus() if g.n <= 8]
    a = verify("distance_exclusive", items, workers=1)
    b = verify("distance_exclusive", items, workers=2)
    assert (a.checked, a.applicable, len(a.violations)) == (b.checked, b.applicable, len(b.violations))


@given(st.sampled_from([g for g in cubic_corpus() if 4 <= g.n <= 8]))
def test_classify_pattern_agrees_with_oracle(g):
    rep = classify(g)
    if rep.matching_covered:
        assert rep.pattern == O.pattern(g)
        allowed = CUBIC_PATTERNS if g.regular_degree() == 3 else HIGHER_PATTERNS
        if rep.rgraph.ok and rep.three_ec:
            assert rep.pattern in allowed


@given(st.sampled_from([g for _, g in family_corpus() if g.regular_degree() and g.regular_degree() >= 4 and g.n >= 4]))
def test_higher_degree_patterns_allowed(g):
    rep = classify(g, decompose=False)
    if rep.rgraph.ok and rep.three_ec:
        assert rep.pattern in HIGHER_PATTERNS
