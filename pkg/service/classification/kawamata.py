"""
Log terminal / log canonical classification by dual-graph shape.

A component is log terminal when it is a chain or a star whose three arms
have Δ-triple (2,2,n), (2,3,3), (2,3,4) or (2,3,5). It is log canonical but
not log terminal when it is a star with (3,3,3), (2,4,4) or (2,3,6), a
vertex carrying four (−2)-leaves, or a chain carrying two (−2)-leaves at
each end. The class of a surface is the worst class among its components.
"""

from collections import Counter
from enum import Enum
from functools import singledispatch
from logging import getLogger
from typing import Iterable, List, Sequence

from service.resolution import DualGraphSchematic, WeightedGraph, delta

logger = getLogger(__name__)


class SingularityClass(str, Enum):
    LOG_TERMINAL = "LogTerminal"
    LOG_CANONICAL = "LogCanonicalNotLT"
    NEITHER = "Neither"

    @property
    def rank(self) -> int:
        return _RANK[self]


_RANK = {
    SingularityClass.LOG_TERMINAL: 0,
    SingularityClass.LOG_CANONICAL: 1,
    SingularityClass.NEITHER: 2,
}

LT_TRIPLES = ((2, 3, 3), (2, 3, 4), (2, 3, 5))
LC_TRIPLES = ((3, 3, 3), (2, 4, 4), (2, 3, 6))


def worst(classes: Iterable[SingularityClass]) -> SingularityClass:
    return max(classes, key=lambda c: c.rank, default=SingularityClass.LOG_TERMINAL)


def classify_arms(deltas: Sequence[int]) -> SingularityClass:
    """Class of a star from the Δ values of its arms; Δ = 1 arms are empty."""
    arms = tuple(sorted(d for d in deltas if d != 1))
    if len(arms) <= 2:
        return SingularityClass.LOG_TERMINAL
    if len(arms) > 3:
        return SingularityClass.NEITHER
    if arms[:2] == (2, 2) or arms in LT_TRIPLES:
        return SingularityClass.LOG_TERMINAL
    if arms in LC_TRIPLES:
        return SingularityClass.LOG_CANONICAL
    return SingularityClass.NEITHER


@singledispatch
def kawamata_classify(graph) -> SingularityClass:
    raise TypeError(f"cannot classify {type(graph).__name__}")


@kawamata_classify.register
def _(schematic: DualGraphSchematic) -> SingularityClass:
    """Schematic route: one node is a star, two or more nodes are Neither."""
    classes: List[SingularityClass] = [SingularityClass.LOG_TERMINAL]  # spine (l = 0) and extra chain
    if schematic.l == 1:
        classes.append(classify_arms(schematic.node_arms(1)))
    elif schematic.l >= 2:
        classes.append(SingularityClass.NEITHER)
    result = worst(classes)
    logger.debug(f"schematic {schematic}: {result.value}")
    return result


def _classify_component(component: WeightedGraph) -> SingularityClass:
    if component.is_chain():
        return SingularityClass.LOG_TERMINAL
    g = component.nx_graph
    if not _is_tree(component):
        return SingularityClass.NEITHER
    degrees = Counter(d for _, d in g.degree)
    branch_points = [v for v in component.vertices if component.degree(v) >= 3]

    if len(branch_points) == 1:
        center = branch_points[0]
        if component.degree(center) == 3:
            arms = component.without([center]).components()
            return classify_arms([delta(arm) for arm in arms])
        if component.degree(center) == 4 and len(component) == 5:
            if all(component.weight(v) == -2 for v in component.neighbors(center)):
                return SingularityClass.LOG_CANONICAL
        return SingularityClass.NEITHER

    if len(branch_points) == 2 and degrees[3] == 2 and degrees[1] == 4:
        for center in branch_points:
            leaves = [v for v in component.neighbors(center) if component.degree(v) == 1]
            if len(leaves) != 2 or any(component.weight(v) != -2 for v in leaves):
                return SingularityClass.NEITHER
        return SingularityClass.LOG_CANONICAL
    return SingularityClass.NEITHER


def _is_tree(component: WeightedGraph) -> bool:
    g = component.nx_graph
    return g.number_of_edges() == g.number_of_nodes() - 1


@kawamata_classify.register
def _(graph: WeightedGraph) -> SingularityClass:
    """Explicit-graph route, component by component."""
    return worst(_classify_component(c) for c in graph.components())
