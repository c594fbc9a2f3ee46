from __future__ import annotations

import pytest

from romancrit import (
    CRITICAL_BUT_UNCLASSIFIED,
    IS_C5,
    IS_DN,
    NOT_CRITICAL,
    Classification,
    Graph,
    IndexOutOfRange,
    PreconditionViolated,
    classify_critical4,
    cut_vertex_structure,
    degree_classes,
    ecrit4_by_degrees,
    gamma_r,
    gen_family,
    graph_new,
    parse_graph6,
    high_class_bounds,
    is_e_critical,
    is_roman_saturated,
    is_v_critical,
    local8_conditions,
    local8_fast,
    neighborhood_witness,
    saturated4_by_degrees,
    vcrit4_by_degrees,
    witness_chase_ok,
    witness_pairs,
)
from romancrit.gamma4 import every_cut_vertex_leaves_pendant_component


def _matching_complement_plus_isolated(n: int) -> Graph:
    """K_{n-1} minus a perfect matching, plus one isolated vertex (n odd)."""
    assert n % 2 == 1 and n >= 5
    m = n - 1
    edges = [
        (u, v)
        for u in range(m)
        for v in range(u + 1, m)
        if u + m // 2 != v
    ]
    return graph_new(n, edges)


# -- degree classes ----------------------------------------------------------


def test_degree_classes_examples():
    x6 = degree_classes(gen_family("xn", 6))
    assert x6.high == frozenset(range(6))
    assert x6.low == x6.other == frozenset()

    d6 = degree_classes(gen_family("dn", 6))
    assert d6.high == frozenset({0, 1, 2, 3, 4})
    assert d6.low == frozenset({5})
    assert d6.other == frozenset()

    k4 = degree_classes(gen_family("complete", 4))
    assert k4.other == frozenset(range(4))
    assert k4.high == k4.low == frozenset()


def test_degree_classes_partition_vertices():
    for tag, n in (("cycle", 7), ("path", 6), ("xn", 8), ("dn", 10)):
        g = gen_family(tag, n)
        c = degree_classes(g)
        assert c.high | c.low | c.other == frozenset(range(g.n))
        assert len(c.high) + len(c.low) + len(c.other) == g.n


# -- v-criticality by degrees ------------------------------------------------


def test_vcrit4_by_degrees_examples():
    assert vcrit4_by_degrees(gen_family("cycle", 5))
    assert vcrit4_by_degrees(gen_family("xn", 6))
    assert vcrit4_by_degrees(gen_family("dn", 6))
    assert not vcrit4_by_degrees(gen_family("cycle", 6))


def test_vcrit4_by_degrees_agrees_with_direct_route():
    for g in (
        gen_family("cycle", 5),
        gen_family("cycle", 6),
        gen_family("xn", 7),
        gen_family("dn", 8),
        _matching_complement_plus_isolated(5),
        _matching_complement_plus_isolated(7),
    ):
        assert vcrit4_by_degrees(g) == is_v_critical(g)


def test_gamma4_gates():
    with pytest.raises(PreconditionViolated):
        vcrit4_by_degrees(gen_family("cycle", 7))  # gamma_r 5
    with pytest.raises(PreconditionViolated):
        vcrit4_by_degrees(gen_family("complete", 4))  # gamma_r 2
    with pytest.raises(PreconditionViolated):
        vcrit4_by_degrees(gen_family("empty", 4))  # elementary, gamma_r = n
    with pytest.raises(PreconditionViolated):
        witness_pairs(gen_family("elem3"), 0)
    with pytest.raises(PreconditionViolated):
        saturated4_by_degrees(gen_family("complete", 6))  # gamma_r 2


# -- witnesses ---------------------------------------------------------------


def test_witness_pairs_five_cycle():
    c5 = gen_family("cycle", 5)
    assert witness_pairs(c5, 0) == [(2, 4), (3, 1)]
    assert neighborhood_witness(c5, 0) == (2, 4)
    for x in range(5):
        a, b = neighborhood_witness(c5, x)
        assert c5.closed_neighborhood(a) == frozenset(range(5)) - {x, b}


def test_witness_pairs_x6():
    x6 = gen_family("xn", 6)
    assert witness_pairs(x6, 0) == [(2, 4), (4, 2)]


def test_witness_pairs_empty_when_unwitnessed():
    c6 = gen_family("cycle", 6)
    assert witness_pairs(c6, 0) == []
    assert neighborhood_witness(c6, 0) is None


def test_witness_pairs_vertex_range():
    with pytest.raises(IndexOutOfRange):
        witness_pairs(gen_family("cycle", 5), 5)


def test_witness_chase():
    c5 = gen_family("cycle", 5)
    for x in range(5):
        assert witness_chase_ok(c5, x)
    d6 = gen_family("dn", 6)
    for x in range(6):
        assert witness_chase_ok(d6, x)
    assert not witness_chase_ok(gen_family("cycle", 6), 0)


# -- saturation and e-criticality by degrees ----------------------------------


def test_saturated4_by_degrees_examples():
    assert saturated4_by_degrees(gen_family("cycle", 5))
    assert saturated4_by_degrees(gen_family("dn", 6))
    assert saturated4_by_degrees(gen_family("xn", 8))
    assert not saturated4_by_degrees(gen_family("cycle", 6))


def test_saturated4_by_degrees_agrees_with_direct_route():
    for g in (
        gen_family("cycle", 5),
        gen_family("cycle", 6),
        gen_family("xn", 7),
        gen_family("dn", 8),
        _matching_complement_plus_isolated(7),
    ):
        assert saturated4_by_degrees(g) == is_roman_saturated(g)


def test_ecrit4_by_degrees_examples():
    assert ecrit4_by_degrees(gen_family("cycle", 5))
    assert ecrit4_by_degrees(gen_family("dn", 6))
    assert ecrit4_by_degrees(gen_family("dn", 8))
    assert not ecrit4_by_degrees(gen_family("xn", 6))


def test_ecrit4_by_degrees_agrees_with_direct_route():
    for g in (
        gen_family("cycle", 5),
        gen_family("xn", 6),
        gen_family("xn", 7),
        gen_family("dn", 6),
        _matching_complement_plus_isolated(5),
        _matching_complement_plus_isolated(7),
    ):
        assert ecrit4_by_degrees(g) == is_e_critical(g)


def test_ecrit4_requires_v_critical():
    with pytest.raises(PreconditionViolated):
        ecrit4_by_degrees(gen_family("cycle", 6))


# -- bounds ------------------------------------------------------------------


def test_high_class_bounds_examples():
    assert high_class_bounds(gen_family("cycle", 5)) == (True, True)
    assert high_class_bounds(gen_family("dn", 6)) == (True, True)
    assert high_class_bounds(gen_family("xn", 9)) == (True, True)
    # C6 has no degree-3 vertex at all; it is not v-critical, so the
    # bounds are out of hypothesis there and may fail freely
    assert high_class_bounds(gen_family("cycle", 6)) == (False, False)


def test_high_class_bounds_hold_on_v_critical_families():
    for g in (
        gen_family("cycle", 5),
        gen_family("xn", 6),
        gen_family("xn", 10),
        gen_family("dn", 8),
        gen_family("dn", 12),
        _matching_complement_plus_isolated(7),
        _matching_complement_plus_isolated(9),
    ):
        assert is_v_critical(g)
        half, threequarter = high_class_bounds(g)
        assert half
        if is_roman_saturated(g):
            assert threequarter


# -- cut vertices ------------------------------------------------------------


def test_every_cut_vertex_leaves_pendant_component():
    assert every_cut_vertex_leaves_pendant_component(gen_family("dn", 6))
    assert every_cut_vertex_leaves_pendant_component(gen_family("cycle", 5))
    # deleting the middle of a 5-path leaves two 2-vertex components
    assert not every_cut_vertex_leaves_pendant_component(gen_family("path", 5))


def test_cut_vertex_structure_examples():
    assert cut_vertex_structure(gen_family("cycle", 5))
    assert cut_vertex_structure(gen_family("dn", 6))
    assert cut_vertex_structure(gen_family("dn", 8))
    assert cut_vertex_structure(gen_family("xn", 6))


def test_cut_vertex_structure_fails_on_isolated_low_vertex():
    # qualifying graph whose unique low vertex has degree 0, not 1
    g = _matching_complement_plus_isolated(5)
    assert is_v_critical(g) and is_e_critical(g) and is_roman_saturated(g)
    assert not cut_vertex_structure(g)
    assert not cut_vertex_structure(_matching_complement_plus_isolated(7))


def test_cut_vertex_structure_requires_v_critical():
    with pytest.raises(PreconditionViolated):
        cut_vertex_structure(gen_family("cycle", 6))


# -- classification ----------------------------------------------------------


def test_classify_catalog_members():
    assert classify_critical4(gen_family("cycle", 5)) == Classification(IS_C5)
    assert classify_critical4(gen_family("dn", 6)) == Classification(IS_DN, 6)
    assert classify_critical4(gen_family("dn", 10)) == Classification(IS_DN, 10)
    for tag, verdict in (
        ("elem1", "ElementaryG1"),
        ("elem2", "ElementaryG2"),
        ("elem3", "ElementaryG3"),
    ):
        assert classify_critical4(gen_family(tag)).verdict == verdict


def test_classify_non_members():
    assert classify_critical4(gen_family("cycle", 6)).verdict == NOT_CRITICAL
    assert classify_critical4(gen_family("complete", 4)).verdict == NOT_CRITICAL
    assert classify_critical4(gen_family("complete", 6)).verdict == NOT_CRITICAL
    assert classify_critical4(gen_family("path", 3)).verdict == NOT_CRITICAL
    assert classify_critical4(gen_family("xn", 6)).verdict == NOT_CRITICAL
    assert classify_critical4(graph_new(2)).verdict == NOT_CRITICAL


def test_classify_reports_unclassified_qualifiers():
    # fully critical and saturated, yet outside the known catalog
    for n in (5, 7):
        got = classify_critical4(_matching_complement_plus_isolated(n))
        assert got == Classification(CRITICAL_BUT_UNCLASSIFIED)


def test_classification_str():
    assert str(Classification(IS_DN, 8)) == "IsDn(8)"
    assert str(Classification(IS_C5)) == "IsC5"
    assert str(classify_critical4(gen_family("cycle", 6))) == "NotCritical"


# -- local conditions at order >= 8 -------------------------------------------


def test_local8_on_pendant_family():
    for n in (8, 10, 12):
        g = gen_family("dn", n)
        assert local8_conditions(g) == (True, True, True)
        assert local8_fast(g) == (True, True, True)


def test_local8_on_x8():
    # no vertex of degree below n-3: condition a fails, b and c vacuous
    g = gen_family("xn", 8)
    assert local8_conditions(g) == (False, True, True)
    assert local8_fast(g) == (False, True, True)


def test_local8_routes_agree_on_perturbations():
    d8 = gen_family("dn", 8)
    for u, v in d8.edges():
        h = d8.delete_edge(u, v)
        try:
            assert local8_conditions(h) == local8_fast(h)
        except PreconditionViolated:
            pass


def test_local8_routes_can_disagree_on_twin_low_vertices():
    # Regression pin: the degree shortcut is NOT equivalent to the literal
    # tuple sweep.  This order-8 graph has two mutually non-adjacent
    # degree-4 vertices, each holding the other inside its only
    # non-neighbor triple, so neither can ever occupy the "counted" seat
    # of the middle condition; the literal sweep stays true while the
    # degree route sees two low vertices and says false.
    g = parse_graph6("GMzmtk")
    assert gamma_r(g) == 4
    low = [v for v in range(g.n) if g.degree(v) < g.n - 3]
    assert low == [2, 3]
    assert [g.degree(v) for v in low] == [4, 4]
    assert not g.adjacent(2, 3)
    assert sorted(u for u in range(g.n) if u != 2 and not g.adjacent(2, u)) == [0, 3, 6]
    assert sorted(u for u in range(g.n) if u != 3 and not g.adjacent(3, u)) == [2, 4, 5]
    assert local8_conditions(g) == (True, True, False)
    assert local8_fast(g) == (True, False, False)


def test_local8_gates():
    with pytest.raises(PreconditionViolated):
        local8_conditions(gen_family("cycle", 5))  # order below 8
    with pytest.raises(PreconditionViolated):
        local8_fast(gen_family("complete", 8))  # gamma_r 2
