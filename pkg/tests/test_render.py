import pytest

from service.exceptions import UsageError
from service.render import TemplateLoader, render_schematic_dot, render_surface_text, render_weighted_graph_dot
from service.reports.builders import surface_report
from service.resolution import WeightedGraph, dual_graph_schematic, monomial_resolution_graph, newton_pairs
from tests.conftest import ks


def test_weighted_graph_dot():
    dot = render_weighted_graph_dot(monomial_resolution_graph(2, 1), name="monomial")
    assert dot.startswith("graph monomial {\n  rankdir=LR;")
    assert '  "E0" [label="E0 (-1)"];' in dot.splitlines()
    assert "subgraph" not in dot
    assert dot.rstrip().endswith("}")


def test_chains_become_clusters():
    graph = WeightedGraph()
    graph.add_vertex("V", -1)
    graph.add_chain("B_", [-2, -3], attach=("V",))
    dot = render_weighted_graph_dot(graph, rankdir="TB")
    assert "rankdir=TB;" in dot
    assert "subgraph cluster_B {" in dot
    assert '    "B_2" [label="B_2 (-3)"];' in dot.splitlines()


def test_schematic_dot_of_3_2_5():
    dot = render_schematic_dot(dual_graph_schematic(newton_pairs(ks(3, 2, 5))))
    assert '"V1" [shape=point, xlabel="V1"];' in dot
    assert '"S1" [shape=box, label="Δ=2"];' in dot
    assert '"B1" [shape=box, label="Δ=3"];' in dot
    assert '"S1" -- "V1";' in dot
    assert '"V1" -- "B1";' in dot
    assert "cluster_X" not in dot


def test_schematic_dot_with_extra_chain():
    dot = render_schematic_dot(dual_graph_schematic(newton_pairs(ks(15, 10, 24))))
    assert '"X" [shape=box, label="Δ=5"];' in dot


def test_surface_text():
    text = render_surface_text(surface_report(ks(3, 2, 5)))
    lines = text.splitlines()
    assert lines[0] == "X̄_ω for ω = (3,2,5)"
    assert "  weights: (1, 3, 2, 5)" in lines
    assert "  k_X̄: -5" in lines
    assert "  m_ω: 1" in lines
    assert "  moduli: LineModRoots (d = 2, ω̄_0 = 3)" in lines
    assert any(line.startswith("  class: LogTerminal (row T1.3") for line in lines)


def test_loader_lists_and_rejects(tmp_path):
    loader = TemplateLoader()
    assert loader.list_available() == ["schematic.dot.j2", "surface.txt.j2", "weighted_graph.dot.j2"]
    with pytest.raises(UsageError):
        loader.load("missing.j2")
    assert TemplateLoader(tmp_path / "none").list_available() == []


def test_custom_templates_dir(tmp_path):
    (tmp_path / "flag.txt.j2").write_text("{{ value | yesno }}", encoding="utf-8")
    loader = TemplateLoader(tmp_path)
    assert loader.render("flag.txt.j2", value=True) == "yes"
    assert loader.render("flag.txt.j2", value=0) == "no"


def test_template_may_use_a_name_variable(tmp_path):
    (tmp_path / "graph.dot.j2").write_text("graph {{ name }} {}", encoding="utf-8")
    assert TemplateLoader(tmp_path).render("graph.dot.j2", name="g") == "graph g {}"
