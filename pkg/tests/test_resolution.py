from fractions import Fraction
from math import ceil, gcd

import pytest

from service.exceptions import InvalidLocator, NotCoprime, NotOrdered, UsageError
from service.resolution import (
    Locator,
    NewtonPairs,
    WeightedGraph,
    continued_fraction,
    curvette_table,
    delta,
    delta_of_chain,
    derivable_locators,
    determinant,
    dual_graph_schematic,
    evaluate_terms,
    exceptional_determinant,
    fractional_claim_check,
    line_at_infinity_contracted,
    m_E_value,
    m_omega_from_pairs,
    monomial_resolution_graph,
    newton_pairs,
    weighted_graph_from_schematic,
)
from service.surface import m_omega
from tests.conftest import ks


# ============================================================================
# Newton pairs and schematics
# ============================================================================

@pytest.mark.parametrize(
    "omegas, pairs, spine, branches, extra",
    [
        ((3, 2, 5), ((2, 3), (-1, 1)), (2, 1), (3,), None),
        ((3, 2, 4), ((2, 3), (-2, 1)), (2, 2), (3,), None),
        ((15, 10, 24), ((2, 3), (-6, 5)), (2, 6), (3,), 5),
        ((2, 1), ((1, 2),), (1,), (), 2),
        ((5, 3), ((3, 5),), (3,), (), 5),
    ],
)
def test_newton_pairs_and_schematic(omegas, pairs, spine, branches, extra):
    result = newton_pairs(ks(*omegas))
    assert result.pairs == pairs
    schematic = dual_graph_schematic(result)
    assert schematic.spine_deltas == spine
    assert schematic.branch_deltas == branches
    assert schematic.extra_chain == extra


def test_sign_pattern_holds_on_surfaces(corpus):
    for seq in corpus:
        assert newton_pairs(seq).sign_pattern_ok(), seq


def test_line_at_infinity():
    assert not line_at_infinity_contracted(newton_pairs(ks(3, 2, 5)))
    assert line_at_infinity_contracted(NewtonPairs(((2, 5), (-1, 1))))


# ============================================================================
# continued fractions and curvettes
# ============================================================================

@pytest.mark.parametrize("p, q, terms", [(5, 3, (1, 1, 2)), (7, 3, (2, 3)), (5, 2, (2, 2)), (2, 1, (2,))])
def test_continued_fraction(p, q, terms):
    cf = continued_fraction(p, q)
    assert cf.terms == terms
    assert cf.evaluate() == Fraction(p, q)


@pytest.mark.parametrize("p, q, error", [(3, 5, NotOrdered), (4, 2, NotCoprime), (1, 1, NotOrdered), (0, 1, NotOrdered)])
def test_continued_fraction_rejects(p, q, error):
    with pytest.raises(error):
        continued_fraction(p, q)


def test_curvette_table_of_5_3():
    table = curvette_table(continued_fraction(5, 3))
    assert len(table) == 4
    assert [(r.p_tilde, r.q_tilde) for r in table.rows] == [(1, 1), (2, 1), (3, 2), (5, 3)]
    last = table.row(2, 2)
    assert last.index == 4
    assert table.is_terminal(last)
    with pytest.raises(UsageError):
        table.row(3, 1)


# ============================================================================
# monomial resolutions
# ============================================================================

def test_resolution_of_2_1():
    graph = monomial_resolution_graph(2, 1)
    assert graph.vertices == ["E0", "E1", "E2"]
    assert [graph.weight(v) for v in graph.vertices] == [-1, -2, -1]
    assert {frozenset(e) for e in graph.edges} == {frozenset(("E0", "E2")), frozenset(("E1", "E2"))}


@pytest.mark.parametrize("p, q, e0", [(5, 3, -1), (7, 2, -3), (2, 1, -1)])
def test_line_weight_after_resolution(p, q, e0):
    assert monomial_resolution_graph(p, q).weight("E0") == e0


def test_exceptional_curves_are_unimodular():
    for p in range(2, 25):
        for q in range(1, p):
            if gcd(p, q) == 1:
                assert exceptional_determinant(p, q) == 1, (p, q)


@pytest.mark.parametrize("p, q", [(2, 1), (5, 3), (7, 2), (7, 3)])
def test_fractional_claims(p, q):
    report = fractional_claim_check(p, q)
    assert report.holds
    assert report.violations == []
    assert len(report.rows) == len(curvette_table(continued_fraction(p, q)))


# ============================================================================
# weighted graphs
# ============================================================================

@pytest.mark.parametrize("weights, expected", [((-2,), 2), ((-2,) * 4, 5), ((), 1), ((-3,), 3), ((-2, -3), 5)])
def test_delta_of_chain(weights, expected):
    assert delta_of_chain(weights) == expected


def test_weighted_graph_basics():
    graph = WeightedGraph()
    graph.add_vertex("a", -2)
    graph.add_chain("c", [-2, -3], attach=("a",))
    assert graph.vertices == ["a", "c1", "c2"]
    assert graph.is_chain()
    assert abs(determinant(graph)) == delta_of_chain([-2, -2, -3])
    with pytest.raises(UsageError):
        graph.add_vertex("a", -1)
    with pytest.raises(UsageError):
        graph.add_edge("a", "missing")


def test_schematic_of_3_2_5_realises_as_a_chain():
    graph = weighted_graph_from_schematic(dual_graph_schematic(newton_pairs(ks(3, 2, 5))))
    assert len(graph.components()) == 1
    assert graph.is_chain()
    assert len(graph) == 4
    order = graph.chain_order()
    assert sorted(order) == sorted(graph.vertices)
    assert graph.degree(order[0]) == graph.degree(order[-1]) == 1


def test_custom_chain_weights_must_match_delta():
    schematic = dual_graph_schematic(newton_pairs(ks(3, 2, 5)))
    graph = weighted_graph_from_schematic(schematic, {"B1": [-3]})
    assert graph.weight("B1_1") == -3
    with pytest.raises(UsageError):
        weighted_graph_from_schematic(schematic, {"B1": [-2]})


# ============================================================================
# m_E
# ============================================================================

def test_locators_of_3_2_5():
    seq = ks(3, 2, 5)
    expected = [
        Locator.corner(1),
        Locator.convergent(1, 2, 1),
        Locator.convergent(1, 3, 1),
        Locator.line(),
    ]
    assert derivable_locators(seq) == expected
    assert [m_E_value(seq, loc) for loc in expected] == [1, 2, 1, 1]
    assert str(expected[1]) == "convergent (1, 2/1)"


def test_underivable_locator():
    with pytest.raises(InvalidLocator):
        m_E_value(ks(3, 2, 5), Locator.corner(2))


@pytest.mark.parametrize("omegas", [(3, 2, 5), (3, 2, 4), (2, 1), (15, 10, 24), (7, 3, 20), (5, 3, 13)])
def test_m_omega_from_pairs(omegas):
    seq = ks(*omegas)
    assert m_omega_from_pairs(seq) == m_omega(seq)


def _star(arm_lengths):
    graph = WeightedGraph()
    graph.add_vertex("c", -2)
    for i, length in enumerate(arm_lengths):
        graph.add_chain(f"a{i}_", [-2] * length, attach=("c",))
    return graph


def test_long_chain_uses_the_chain_recursion():
    graph = WeightedGraph()
    graph.add_chain("v", [-2] * 200)
    assert graph.is_chain()
    assert delta(graph) == 201


@pytest.mark.parametrize("arms, expected", [((1, 1, 1), 4), ((1, 2, 4), 1), ((1, 2, 3), 2), ((1, 2, 2), 3)])
def test_star_determinants(arms, expected):
    graph = _star(arms)
    assert not graph.is_chain()
    assert abs(determinant(graph)) == expected
    assert delta(graph) == expected


# ============================================================================
# wider sweeps
# ============================================================================

def test_m_E_dominates_m_omega(g2a_corpus):
    for seq in g2a_corpus:
        bound = m_omega(seq)
        for loc in derivable_locators(seq):
            assert m_E_value(seq, loc) >= bound, (seq, loc)


def _coprime_pairs(max_p):
    return [(p, q) for p in range(2, max_p + 1) for q in range(1, p) if gcd(p, q) == 1]


@pytest.mark.slow
def test_continued_fractions_round_trip():
    for p, q in _coprime_pairs(200):
        terms = continued_fraction(p, q).terms
        assert evaluate_terms(terms) == Fraction(p, q), (p, q)
        assert all(m >= 1 for m in terms), (p, q)
        assert terms[-1] >= 2, (p, q)


@pytest.mark.slow
def test_exceptional_curves_are_unimodular_full_range():
    for p, q in _coprime_pairs(60):
        assert exceptional_determinant(p, q) == 1, (p, q)


@pytest.mark.slow
def test_line_weight_after_resolution_full_range():
    for p, q in _coprime_pairs(60):
        assert monomial_resolution_graph(p, q).weight("E0") == 1 - ceil(p / q), (p, q)


@pytest.mark.slow
def test_fractional_claims_full_range():
    for p, q in _coprime_pairs(50):
        assert fractional_claim_check(p, q).holds, (p, q)
