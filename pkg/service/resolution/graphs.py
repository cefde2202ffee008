"""
Weighted dual graphs on top of networkx.

Vertices carry integer self-intersections; the intersection matrix has the
weights on the diagonal and 1 for every edge. Determinants are exact
(sympy DomainMatrix over ZZ); chains use the three-term recurrence.

Public API
~~~~~~~~~~
* ``WeightedGraph`` (insertion-ordered, deterministic listing)
* ``intersection_matrix(graph, labels)`` / ``determinant(graph, labels)``
* ``delta_of_chain(weights)``
* ``weighted_graph_from_schematic(schematic, chain_weights=None)``
"""

from logging import getLogger
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from sympy import Matrix
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from service.exceptions import UsageError
from service.resolution.newton import DualGraphSchematic

logger = getLogger(__name__)


class WeightedGraph:
    """Simple graph with integer vertex weights; vertex order is insertion order."""

    def __init__(self):
        self._graph = nx.Graph()

    # ------------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------------

    def add_vertex(self, label: str, weight: int) -> None:
        if label in self._graph:
            raise UsageError(f"vertex {label} already present")
        self._graph.add_node(label, weight=int(weight))

    def add_edge(self, a: str, b: str) -> None:
        if a == b or a not in self._graph or b not in self._graph:
            raise UsageError(f"cannot join {a} and {b}")
        self._graph.add_edge(a, b)

    def remove_edge(self, a: str, b: str) -> None:
        self._graph.remove_edge(a, b)

    def set_weight(self, label: str, weight: int) -> None:
        self._graph.nodes[label]["weight"] = int(weight)

    def add_chain(self, prefix: str, weights: Sequence[int], attach: Sequence[str] = ()) -> List[str]:
        """Append a chain prefix1 -- prefix2 -- …; its first vertex joins every label in attach."""
        labels = [f"{prefix}{i}" for i in range(1, len(weights) + 1)]
        for label, weight in zip(labels, weights):
            self.add_vertex(label, weight)
        for a, b in zip(labels, labels[1:]):
            self.add_edge(a, b)
        if labels:
            for anchor in attach:
                self.add_edge(anchor, labels[0])
        return labels

    # ------------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------------

    @property
    def nx_graph(self) -> nx.Graph:
        return self._graph

    @property
    def vertices(self) -> List[str]:
        return list(self._graph.nodes)

    def weight(self, label: str) -> int:
        return self._graph.nodes[label]["weight"]

    def weights(self) -> Dict[str, int]:
        return {v: self.weight(v) for v in self.vertices}

    def _position(self) -> Dict[str, int]:
        return {v: i for i, v in enumerate(self._graph.nodes)}

    @property
    def edges(self) -> List[Tuple[str, str]]:
        position = self._position()
        ordered = [tuple(sorted(e, key=position.__getitem__)) for e in self._graph.edges]
        return sorted(ordered, key=lambda e: (position[e[0]], position[e[1]]))

    def neighbors(self, label: str) -> List[str]:
        position = self._position()
        return sorted(self._graph.neighbors(label), key=position.__getitem__)

    def degree(self, label: str) -> int:
        return self._graph.degree[label]

    def has_edge(self, a: str, b: str) -> bool:
        return self._graph.has_edge(a, b)

    def __len__(self) -> int:
        return self._graph.number_of_nodes()

    def __contains__(self, label: str) -> bool:
        return label in self._graph

    def subgraph(self, labels: Iterable[str]) -> "WeightedGraph":
        keep = set(labels)
        result = WeightedGraph()
        for v in self.vertices:
            if v in keep:
                result.add_vertex(v, self.weight(v))
        for a, b in self.edges:
            if a in keep and b in keep:
                result.add_edge(a, b)
        return result

    def without(self, labels: Iterable[str]) -> "WeightedGraph":
        drop = set(labels)
        return self.subgraph(v for v in self.vertices if v not in drop)

    def components(self) -> List["WeightedGraph"]:
        position = self._position()
        parts = [sorted(c, key=position.__getitem__) for c in nx.connected_components(self._graph)]
        parts.sort(key=lambda c: position[c[0]])
        return [self.subgraph(c) for c in parts]

    def is_chain(self) -> bool:
        """Connected, acyclic, every degree ≤ 2 (the empty graph counts)."""
        if len(self) == 0:
            return True
        return nx.is_tree(self._graph) and max(d for _, d in self._graph.degree) <= 2

    def chain_order(self) -> List[str]:
        """Vertices of a chain from one end to the other."""
        if not self.is_chain():
            raise UsageError("graph is not a chain")
        if len(self) <= 1:
            return self.vertices
        ends = [v for v in self.vertices if self.degree(v) == 1]
        return nx.shortest_path(self._graph, ends[0], ends[1])

    def shortest_path(self, a: str, b: str) -> List[str]:
        return nx.shortest_path(self._graph, a, b)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.weights() == other.weights() and set(map(frozenset, self.edges)) == set(
            map(frozenset, other.edges)
        )

    def __repr__(self) -> str:
        body = ", ".join(f"{v}({self.weight(v)})" for v in self.vertices)
        return f"WeightedGraph[{body}; {len(self.edges)} edges]"


# ============================================================================
# Intersection matrices
# ============================================================================

def intersection_matrix(graph: WeightedGraph, labels: Optional[Sequence[str]] = None) -> Matrix:
    labels = list(labels) if labels is not None else graph.vertices
    size = len(labels)
    entries = [[0] * size for _ in range(size)]
    for i, a in enumerate(labels):
        entries[i][i] = graph.weight(a)
        for j, b in enumerate(labels):
            if i != j and graph.has_edge(a, b):
                entries[i][j] = 1
    return Matrix(entries)


def determinant(graph: WeightedGraph, labels: Optional[Sequence[str]] = None) -> int:
    labels = list(labels) if labels is not None else graph.vertices
    if not labels:
        return 1
    matrix = DomainMatrix.from_Matrix(intersection_matrix(graph, labels)).convert_to(ZZ)
    return int(matrix.det())


def delta_of_chain(weights: Sequence[int]) -> int:
    """Δ of a chain: |det| of its tridiagonal intersection matrix (1 for the empty chain)."""
    previous, current = 1, 1
    for index, w in enumerate(weights):
        if index == 0:
            previous, current = 1, w
        else:
            previous, current = current, w * current - previous
    return abs(current)


def delta(graph: WeightedGraph) -> int:
    if graph.is_chain():
        return delta_of_chain([graph.weight(v) for v in graph.chain_order()])
    return abs(determinant(graph))


# ============================================================================
# Realising a schematic
# ============================================================================

def _a_chain(delta_value: int) -> List[int]:
    return [-2] * (delta_value - 1)


def weighted_graph_from_schematic(
    schematic: DualGraphSchematic,
    chain_weights: Optional[Dict[str, Sequence[int]]] = None,
    node_weight: int = -2,
) -> WeightedGraph:
    """Explicit graph for a schematic.

    Chains are named S1…S_{l+1} (spine), B1…B_l (branches) and X (extra);
    chain_weights overrides the default A-chain of length Δ−1, listed from the
    V_{j−1} side. Nodes V1…V_l get node_weight. Spine chain S_j runs from
    V_{j−1} to V_j.
    """
    chain_weights = dict(chain_weights or {})
    graph = WeightedGraph()

    def weights_for(name: str, delta_value: int) -> List[int]:
        if name in chain_weights:
            weights = list(chain_weights[name])
            if delta_of_chain(weights) != delta_value:
                raise UsageError(f"chain {name} has Δ {delta_of_chain(weights)}, expected {delta_value}")
            return weights
        return _a_chain(delta_value)

    for j in range(1, schematic.l + 1):
        graph.add_vertex(f"V{j}", node_weight)

    for j, spine in enumerate(schematic.spine_deltas, start=1):
        labels = graph.add_chain(f"S{j}_", weights_for(f"S{j}", spine))
        if not labels:
            continue
        if j - 1 >= 1:
            graph.add_edge(f"V{j - 1}", labels[0])
        if j <= schematic.l:
            graph.add_edge(f"V{j}", labels[-1])

    for j, branch in enumerate(schematic.branch_deltas, start=1):
        graph.add_chain(f"B{j}_", weights_for(f"B{j}", branch), attach=(f"V{j}",))

    if schematic.extra_chain:
        graph.add_chain("X_", weights_for("X", schematic.extra_chain))

    # consecutive nodes with an empty spine chain between them meet directly
    for j in range(1, schematic.l):
        if schematic.is_empty(schematic.spine_deltas[j]):
            graph.add_edge(f"V{j}", f"V{j + 1}")

    logger.debug(f"realised schematic {schematic} as {graph!r}")
    return graph
