"""
DOT and text renderings of resolution graphs and surface reports.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from service.reports.models import SurfaceReport
from service.resolution import DualGraphSchematic, WeightedGraph
from service.render.template_loader import TemplateLoader, get_template_loader


@dataclass(frozen=True)
class _Vertex:
    label: str
    weight: int


@dataclass(frozen=True)
class _Cluster:
    name: str
    vertices: Tuple[_Vertex, ...]


@dataclass(frozen=True)
class _Chain:
    name: str
    delta: int


def _cluster_of(label: str) -> Optional[str]:
    # chain members are labelled "<chain>_<i>"
    prefix, sep, _ = label.partition("_")
    return prefix if sep else None


def render_weighted_graph_dot(
    graph: WeightedGraph,
    name: str = "resolution",
    rankdir: str = "LR",
    loader: Optional[TemplateLoader] = None,
) -> str:
    loose: List[_Vertex] = []
    clusters: List[_Cluster] = []
    members: dict = {}
    for label in graph.vertices:
        vertex = _Vertex(label, graph.weight(label))
        cluster = _cluster_of(label)
        if cluster is None:
            loose.append(vertex)
        else:
            members.setdefault(cluster, []).append(vertex)
    for cluster, vertices in members.items():
        clusters.append(_Cluster(cluster, tuple(vertices)))
    return (loader or get_template_loader()).render(
        "weighted_graph.dot.j2",
        name=name,
        rankdir=rankdir,
        loose=loose,
        clusters=clusters,
        edges=graph.edges,
    )


def render_schematic_dot(
    schematic: DualGraphSchematic,
    rankdir: str = "LR",
    loader: Optional[TemplateLoader] = None,
) -> str:
    """One box per non-empty chain, one point per node V_j."""
    nodes = [f"V{j}" for j in range(1, schematic.l + 1)]
    chains: List[_Chain] = []
    edges: List[Tuple[str, str]] = []

    for j, spine in enumerate(schematic.spine_deltas, start=1):
        if schematic.is_empty(spine):
            if 1 < j <= schematic.l:
                edges.append((f"V{j - 1}", f"V{j}"))
            continue
        chains.append(_Chain(f"S{j}", spine))
        if j > 1:
            edges.append((f"V{j - 1}", f"S{j}"))
        if j <= schematic.l:
            edges.append((f"S{j}", f"V{j}"))

    for j, branch in enumerate(schematic.branch_deltas, start=1):
        if schematic.is_empty(branch):
            continue
        chains.append(_Chain(f"B{j}", branch))
        edges.append((f"V{j}", f"B{j}"))

    if schematic.extra_chain:
        chains.append(_Chain("X", schematic.extra_chain))

    return (loader or get_template_loader()).render(
        "schematic.dot.j2", rankdir=rankdir, nodes=nodes, chains=chains, edges=edges
    )


def render_surface_text(report: SurfaceReport, loader: Optional[TemplateLoader] = None) -> str:
    return (loader or get_template_loader()).render("surface.txt.j2", report=report)
