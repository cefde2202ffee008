import pytest

from service.actions import g2a_exists
from service.classification import (
    NoMatch,
    SingularityClass,
    TableMatch,
    TableRow,
    classify_arms,
    classify_record,
    del_pezzo_report,
    kawamata_classify,
    singular_del_pezzo_list,
    substitute_template,
    table_classify,
)
from service.enumeration import EnumerationRequest, iter_surface_sequences
from service.key_sequence import essential_subsequence, maybe_validate
from service.resolution import WeightedGraph, dual_graph_schematic, newton_pairs
from service.surface import k_bar_x
from tests.conftest import ks

LT = SingularityClass.LOG_TERMINAL
LC = SingularityClass.LOG_CANONICAL
NEITHER = SingularityClass.NEITHER


# ============================================================================
# dual-graph shapes
# ============================================================================

@pytest.mark.parametrize(
    "deltas, expected",
    [
        ((2, 3, 1), LT),
        ((2, 2, 17), LT),
        ((2, 3, 5), LT),
        ((2, 3, 6), LC),
        ((3, 3, 3), LC),
        ((2, 4, 4), LC),
        ((2, 3, 7), NEITHER),
        ((3, 3, 4), NEITHER),
    ],
)
def test_classify_arms(deltas, expected):
    assert classify_arms(deltas) is expected


def _star(arms):
    graph = WeightedGraph()
    graph.add_vertex("C", -2)
    for i, length in enumerate(arms):
        graph.add_chain(f"A{i}_", [-2] * length, attach=("C",))
    return graph


def test_explicit_stars():
    # arm Δ = length + 1 for (−2)-chains
    assert kawamata_classify(_star([1, 2, 4])) is LT
    assert kawamata_classify(_star([1, 2, 5])) is LC
    assert kawamata_classify(_star([1, 2, 6])) is NEITHER
    assert kawamata_classify(_star([1, 1, 1, 1])) is LC
    assert kawamata_classify(_star([1, 1, 1, 2])) is NEITHER


def test_explicit_double_fork_and_cycle():
    graph = WeightedGraph()
    graph.add_chain("S", [-3, -3])
    for center in ("S1", "S2"):
        graph.add_chain(f"{center}a", [-2], attach=(center,))
        graph.add_chain(f"{center}b", [-2], attach=(center,))
    assert kawamata_classify(graph) is LC

    cycle = WeightedGraph()
    cycle.add_chain("c", [-2, -2, -2])
    cycle.add_edge("c1", "c3")
    assert kawamata_classify(cycle) is NEITHER


def test_worst_component_wins():
    graph = _star([1, 2, 6])
    graph.add_chain("X", [-2, -2])
    assert len(graph.components()) == 2
    assert kawamata_classify(graph) is NEITHER


def test_schematic_route():
    assert kawamata_classify(dual_graph_schematic(newton_pairs(ks(3, 2, 5)))) is LT
    assert kawamata_classify(dual_graph_schematic(newton_pairs(ks(15, 10, 24)))) is LC
    assert kawamata_classify(dual_graph_schematic(newton_pairs(ks(2, 1)))) is LT
    with pytest.raises(TypeError):
        kawamata_classify("not a graph")


# ============================================================================
# tables
# ============================================================================

@pytest.mark.parametrize(
    "omegas, row, parameters, g2a",
    [
        ((1, 1), TableRow.PLANE, {}, True),
        ((5, 3), TableRow.WEIGHTED, {"p": 5, "q": 3}, True),
        ((3, 2, 5), TableRow.R_ONE, {"p1": 3, "q1": 2, "p2": 1, "r": 1}, True),
        ((7, 3, 20), TableRow.R_ONE, {"p1": 7, "q1": 3, "p2": 1, "r": 1}, True),
        ((3, 2, 4), TableRow.Q_TWO_R_TWO, {"p1": 3, "q1": 2, "p2": 1, "r": 2}, True),
        ((3, 2, 3), TableRow.Q_TWO_EXCEPTIONAL, {"p1": 3, "q1": 2, "p2": 1, "r": 3}, False),
        ((5, 3, 13), TableRow.Q_THREE, {"p1": 5, "q1": 3, "p2": 1, "r": 2}, True),
        ((15, 10, 24), TableRow.LOG_CANONICAL, {"p": 5}, True),
    ],
)
def test_table_rows(omegas, row, parameters, g2a):
    match = table_classify(ks(*omegas))
    assert isinstance(match, TableMatch)
    assert match.row is row
    assert match.parameters == parameters
    assert match.g2a is g2a
    assert substitute_template(match) == essential_subsequence(ks(*omegas)).omegas


def test_arms_of_3_2_3():
    schematic = dual_graph_schematic(newton_pairs(ks(3, 2, 3)))
    assert sorted(schematic.node_arms(1)) == [2, 3, 3]
    assert kawamata_classify(schematic) is LT


def test_no_match_is_neither():
    result = NoMatch("two essential indices")
    assert not result
    assert result.singularity_class is NEITHER


# ============================================================================
# both routes over the corpus
# ============================================================================

def _check_record(seq):
    record = classify_record(seq)
    assert record.routes_agree, seq
    assert record.singularity_class == record.table_class, seq
    if record.table_g2a is not None:
        assert record.table_g2a == record.g2a, seq
    if newton_pairs(seq).l <= 1:
        assert record.explicit_class == record.singularity_class, seq


def test_routes_agree_on_the_corpus(corpus):
    for seq in corpus:
        _check_record(seq)


def test_long_arm_record():
    _check_record(ks(11, 7, 1))


@pytest.mark.slow
def test_routes_agree_on_a_larger_sweep():
    for seq in iter_surface_sequences(EnumerationRequest(max_omega0=60, max_len=3, max_entry=60)):
        _check_record(seq)
    for seq in iter_surface_sequences(EnumerationRequest(max_omega0=30, max_len=4, max_entry=60)):
        if len(seq) == 4:
            _check_record(seq)


# ============================================================================
# table families against the 𝔾²ₐ criterion
# ============================================================================

def test_table_column_matches_g2a_margin(corpus):
    checked = 0
    for seq in corpus:
        match = table_classify(seq)
        if not match:
            continue
        assert match.g2a == g2a_exists(seq), seq
        v = match.parameters
        if "r" in v:
            essential = essential_subsequence(seq)
            assert k_bar_x(essential) + essential.omega(0) == v["r"] - 1 - v["q1"] * v["p2"], seq
            checked += 1
    assert checked > 0


def test_family_identity_on_a_parameter_grid():
    for p1 in range(2, 13):
        for q1 in range(1, 9):
            for p2 in range(1, 6):
                for r in range(1, q1 * p1 * p2):
                    seq = maybe_validate((p1 * p2, q1 * p2, q1 * p1 * p2 - r))
                    if seq is None or seq.alpha(1) != p1 or seq.alpha(2) != p2:
                        continue
                    assert k_bar_x(seq) + seq.omega(0) == r - 1 - q1 * p2, seq


def test_record_of_3_2_5():
    record = classify_record(ks(3, 2, 5))
    assert record.singularity_class == "LogTerminal"
    assert record.matched_row == "T1.3"
    assert record.template == "(p1p2, q1p2, q1p1p2−1)"
    assert record.g2a
    assert record.del_pezzo
    assert record.ade_types == ["A_4"]


# ============================================================================
# del Pezzo
# ============================================================================

def test_del_pezzo_report():
    report = del_pezzo_report(ks(3, 2, 5))
    assert report.is_del_pezzo_with_g2a
    assert report.is_singular_del_pezzo
    assert report.moduli_summary.root_order == 2

    no_structures = del_pezzo_report(ks(3, 2, 3))
    assert no_structures.is_singular_del_pezzo
    assert not no_structures.is_del_pezzo_with_g2a
    assert no_structures.ade_types == ()

    assert not del_pezzo_report(ks(5, 3, 13)).is_singular_del_pezzo


def test_singular_del_pezzo_list():
    listed = [s.omegas for s in singular_del_pezzo_list()]
    assert len(listed) == 8
    assert (3, 2, 5, 1) in listed
    assert listed[:3] == [(2, 1), (3, 2), (3, 2, 5, 1)]
