"""
Per-surface invariants, defining equations, θ-equivalence and automorphisms.
"""
from service.surface.automorphisms import AConstraint, AutCase, AutDescription, aut_description
from service.surface.equations import (
    SurfaceModel,
    check_theta,
    coordinate_names,
    defining_equations,
    equation_degrees,
    equations_are_homogeneous,
)
from service.surface.invariants import (
    InvariantBundle,
    bar_omega_star_ks,
    bar_omegas,
    g2a_margin,
    invariant_bundle,
    k_bar_x,
    m_omega,
    weights,
)
from service.surface.theta import (
    ThetaEquivalence,
    integer_kernel_basis,
    mu_exponent_matrix,
    mu_exponents,
    theta_equivalence,
    theta_equivalent,
)

__all__ = [
    'AConstraint',
    'AutCase',
    'AutDescription',
    'aut_description',
    'SurfaceModel',
    'check_theta',
    'coordinate_names',
    'defining_equations',
    'equation_degrees',
    'equations_are_homogeneous',
    'InvariantBundle',
    'bar_omega_star_ks',
    'bar_omegas',
    'g2a_margin',
    'invariant_bundle',
    'k_bar_x',
    'm_omega',
    'weights',
    'ThetaEquivalence',
    'integer_kernel_basis',
    'mu_exponent_matrix',
    'mu_exponents',
    'theta_equivalence',
    'theta_equivalent',
]
