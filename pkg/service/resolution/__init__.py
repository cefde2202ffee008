"""
Newton pairs, resolution schematics, continued fractions, monomial
resolutions and m_E values.

Public API
~~~~~~~~~~
* ``newton_pairs(ks)`` -> ``NewtonPairs``; ``dual_graph_schematic(pairs)``
* ``continued_fraction(p, q)``, ``curvette_table(cf)``
* ``monomial_resolution_graph(p, q)`` -> ``WeightedGraph``
* ``fractional_claim_check(p, q)`` -> ``ClaimReport``
* ``derivable_locators(ks)``, ``m_E_value(ks, locator)``

Usage::

    pairs = newton_pairs(parse_key_sequence("3,2,5"))
    schematic = dual_graph_schematic(pairs)   # spine (2, 1), branch (3,)
"""
from service.resolution.continued_fractions import (
    ContinuedFraction,
    CurvetteRow,
    CurvetteTable,
    check_pair,
    continued_fraction,
    curvette_table,
    evaluate_terms,
)
from service.resolution.graphs import (
    WeightedGraph,
    delta,
    delta_of_chain,
    determinant,
    intersection_matrix,
    weighted_graph_from_schematic,
)
from service.resolution.m_values import (
    Locator,
    LocatorKind,
    derivable_locators,
    m_E_value,
    m_omega_from_pairs,
)
from service.resolution.monomial import (
    ClaimReport,
    ClaimRow,
    exceptional_determinant,
    exceptional_labels,
    fractional_claim_check,
    is_irrelevant_chain,
    monomial_resolution_graph,
)
from service.resolution.newton import (
    DualGraphSchematic,
    NewtonPairs,
    dual_graph_schematic,
    line_at_infinity_contracted,
    newton_pairs,
)

__all__ = [
    'ContinuedFraction',
    'CurvetteRow',
    'CurvetteTable',
    'check_pair',
    'continued_fraction',
    'curvette_table',
    'evaluate_terms',
    'WeightedGraph',
    'delta',
    'delta_of_chain',
    'determinant',
    'intersection_matrix',
    'weighted_graph_from_schematic',
    'Locator',
    'LocatorKind',
    'derivable_locators',
    'm_E_value',
    'm_omega_from_pairs',
    'ClaimReport',
    'ClaimRow',
    'exceptional_determinant',
    'exceptional_labels',
    'fractional_claim_check',
    'is_irrelevant_chain',
    'monomial_resolution_graph',
    'DualGraphSchematic',
    'NewtonPairs',
    'dual_graph_schematic',
    'line_at_infinity_contracted',
    'newton_pairs',
]
