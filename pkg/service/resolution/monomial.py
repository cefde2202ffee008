"""
Minimal embedded resolution of the germ v^p = u^q together with the line u = 0.

The blow-up sequence follows the Euclidean algorithm on (p, q): at each step
the center is the point where the two current coordinate axes meet, the new
curve E_new gets weight −1, and every curve through the center loses 1.
E_0 (the line at infinity) starts at +1.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from logging import getLogger
from typing import Dict, List, Optional, Tuple

from service.exceptions import UnimodularityError
from service.resolution.continued_fractions import (
    CurvetteRow,
    check_pair,
    continued_fraction,
    curvette_table,
)
from service.resolution.graphs import WeightedGraph, determinant
from service.symbolic.rational import ceil_rational, floor_rational

logger = getLogger(__name__)


def _label(index: int) -> str:
    return f"E{index}"


def monomial_resolution_graph(p: int, q: int) -> WeightedGraph:
    check_pair(p, q)
    graph = WeightedGraph()
    graph.add_vertex(_label(0), 1)
    a, b = p, q
    axis_u: Optional[str] = _label(0)
    axis_v: Optional[str] = None
    count = 0
    while True:
        count += 1
        new = _label(count)
        graph.add_vertex(new, -1)
        axes = [axis for axis in (axis_u, axis_v) if axis is not None]
        for axis in axes:
            graph.set_weight(axis, graph.weight(axis) - 1)
            graph.add_edge(axis, new)
        if len(axes) == 2:
            graph.remove_edge(axis_u, axis_v)
        if a == b == 1:
            break
        if a > b:
            a, axis_v = a - b, new
        else:
            b, axis_u = b - a, new

    cf = continued_fraction(p, q)
    if count != cf.M(cf.N):
        raise UnimodularityError(f"{count} blow-ups for {p}/{q}, expected {cf.M(cf.N)}")
    expected_e0 = 1 - ceil_rational(Fraction(p, q))
    if graph.weight(_label(0)) != expected_e0:
        raise UnimodularityError(f"E0 has weight {graph.weight(_label(0))}, expected {expected_e0}")
    return graph


def exceptional_labels(graph: WeightedGraph) -> List[str]:
    return [v for v in graph.vertices if v != _label(0)]


def exceptional_determinant(p: int, q: int) -> int:
    """|det| of the E_1 … E_{M_N} intersection matrix; 1 for every coprime p > q."""
    graph = monomial_resolution_graph(p, q)
    value = abs(determinant(graph, exceptional_labels(graph)))
    if value != 1:
        raise UnimodularityError(f"exceptional determinant of {p}/{q} is {value}")
    return value


# ============================================================================
# Curvette inequalities
# ============================================================================

def is_irrelevant_chain(graph: WeightedGraph, index: int, m1: int) -> bool:
    """E_0(−1) -- E_{m_1+1}(−2) -- … -- E_index(−2)."""
    path = graph.shortest_path(_label(0), _label(index))
    if len(path) < 2 or graph.weight(path[0]) != -1 or path[1] != _label(m1 + 1):
        return False
    return all(graph.weight(v) == -2 for v in path[1:])


@dataclass(frozen=True)
class ClaimRow:
    row: CurvetteRow
    parity: str                                     # "even" / "odd"
    terminal: bool
    irrelevant: bool
    checks: Dict[str, Optional[bool]] = field(default_factory=dict)  # None = skipped

    @property
    def holds(self) -> bool:
        return all(value is not False for value in self.checks.values())


@dataclass(frozen=True)
class ClaimReport:
    p: int
    q: int
    rows: Tuple[ClaimRow, ...]

    @property
    def violations(self) -> List[Tuple[ClaimRow, str]]:
        return [(r, name) for r in self.rows for name, value in r.checks.items() if value is False]

    @property
    def holds(self) -> bool:
        return not self.violations


def fractional_claim_check(p: int, q: int) -> ClaimReport:
    check_pair(p, q)
    cf = continued_fraction(p, q)
    table = curvette_table(cf)
    graph = monomial_resolution_graph(p, q)
    target = Fraction(p - q, p)
    target_inverse_floor = floor_rational(Fraction(p, p - q))

    rows = []
    for row in table.rows:
        terminal = table.is_terminal(row)
        ratio = Fraction(row.p_tilde - row.q_tilde, row.p_tilde)
        checks: Dict[str, Optional[bool]] = {}
        irrelevant = False
        if row.j % 2 == 0:
            checks["even-1"] = None if terminal else ratio < target
            checks["even-2"] = floor_rational(ratio) == floor_rational(target) == 0
        else:
            checks["odd-1"] = None if terminal else ratio > target
            irrelevant = is_irrelevant_chain(graph, row.index, cf.m(1))
            if irrelevant:
                checks["odd-2"] = None
            else:
                value = floor_rational(Fraction(row.p_tilde, row.p_tilde - row.q_tilde))
                checks["odd-2"] = value >= target_inverse_floor
        rows.append(ClaimRow(
            row=row,
            parity="even" if row.j % 2 == 0 else "odd",
            terminal=terminal,
            irrelevant=irrelevant,
            checks=checks,
        ))

    report = ClaimReport(p=p, q=q, rows=tuple(rows))
    for claim_row, name in report.violations:
        logger.warning(f"{p}/{q}: row {claim_row.row.index} violates {name}")
    return report
