from fractions import Fraction

import pytest

from service.exceptions import LengthMismatch, NotNormalForm, ZeroTheta
from service.surface import (
    AConstraint,
    AutCase,
    SurfaceModel,
    aut_description,
    bar_omegas,
    defining_equations,
    equation_degrees,
    equations_are_homogeneous,
    g2a_margin,
    integer_kernel_basis,
    invariant_bundle,
    k_bar_x,
    m_omega,
    mu_exponent_matrix,
    theta_equivalence,
    theta_equivalent,
    weights,
)
from service.symbolic import Polynomial
from tests.conftest import ks


# ============================================================================
# invariants
# ============================================================================

@pytest.mark.parametrize(
    "omegas, k, m",
    [
        ((3, 2, 5), -5, 1),
        ((3, 2, 4), -4, 0),
        ((2, 1), -4, 2),
        ((3, 2), -6, 1),
        ((15, 10, 24), -20, 0),
        ((7, 3, 20), -10, 2),
        ((5, 3, 13), -7, 1),
    ],
)
def test_canonical_degree_and_m_omega(omegas, k, m):
    seq = ks(*omegas)
    assert k_bar_x(seq) == k
    assert m_omega(seq) == m


def test_g2a_margin():
    assert g2a_margin(ks(3, 2, 5)) == -2
    assert g2a_margin(ks(3, 2, 3)) == 0
    assert g2a_margin(ks(1, 1)) == -2


def test_weights_and_bar_omegas():
    assert weights(ks(3, 2, 5)) == (1, 3, 2, 5)
    assert bar_omegas(ks(3, 2, 5)) == (3, 2)
    bundle = invariant_bundle(ks(3, 2, 5))
    assert bundle.bar_omega_prime == 2
    assert bundle.bar_omega_star is None


# ============================================================================
# defining equations
# ============================================================================

def test_equation_of_3_2_5():
    model = SurfaceModel(ks(3, 2, 5), (1,))
    V = model.variables
    w, y0, y1, y2 = (Polynomial.variable(name, V) for name in ("w", "y0", "y1", "y2"))
    [g1] = defining_equations(model)
    assert g1 == w * y2 - y1 ** 3 + y0 ** 2
    assert equation_degrees(model) == [6]


def test_theta_enters_the_mixed_term():
    model = SurfaceModel(ks(3, 2, 5), (Fraction(-1, 2),))
    V = model.variables
    w, y0, y1, y2 = (Polynomial.variable(name, V) for name in ("w", "y0", "y1", "y2"))
    assert defining_equations(model) == [w * y2 - y1 ** 3 + y0 ** 2 * Fraction(-1, 2)]


def test_equations_are_weighted_homogeneous(corpus):
    for seq in corpus:
        theta = tuple(Fraction(k + 1, 2) for k in range(seq.n))
        assert equations_are_homogeneous(SurfaceModel(seq, theta)), seq


def test_surface_model_rejects_bad_theta():
    with pytest.raises(LengthMismatch):
        SurfaceModel(ks(3, 2, 5), (1, 2))
    with pytest.raises(ZeroTheta) as info:
        SurfaceModel(ks(3, 2, 5), (0,))
    assert info.value.details["index"] == 1
    with pytest.raises(NotNormalForm):
        SurfaceModel(ks(4, 6, 11, 1), (1, 1))


# ============================================================================
# automorphisms
# ============================================================================

def test_automorphisms_of_weighted_planes():
    assert aut_description(ks(1, 1)).case is AutCase.P2
    assert aut_description(ks(2, 1)).case is AutCase.WP_CASE_1B
    aut = aut_description(ks(3, 2))
    assert aut.case is AutCase.WP_CASE_1C
    assert aut.f_weighted_degree == 3


def test_automorphisms_in_general():
    aut = aut_description(ks(3, 2, 5))
    assert aut.case is AutCase.GENERAL
    assert aut.f_degree_bound == 1
    assert aut.c_allowed
    assert aut.a_constraint is AConstraint.ANY_NONZERO
    # no 𝔾²ₐ-structure, so no translations in y
    assert not aut_description(ks(3, 2, 3)).c_allowed


# ============================================================================
# θ-equivalence
# ============================================================================

def test_single_equation_surfaces_have_no_theta_moduli():
    result = theta_equivalence(ks(3, 2, 5), (1,), (7,))
    assert result.matrix == ((-2,), (3,))
    assert result.kernel_basis == ()
    assert result.equivalent


def _dot(row, vector):
    return sum(a * b for a, b in zip(row, vector))


def test_integer_kernel_basis():
    [v] = integer_kernel_basis([[1, 2, 3], [0, 1, 1]])
    assert _dot([1, 2, 3], v) == _dot([0, 1, 1], v) == 0
    assert sorted(map(abs, v)) == [1, 1, 1]
    # the kernel lattice is saturated: (2, -1), not a multiple
    [u] = integer_kernel_basis([[2, 4]])
    assert sorted(map(abs, u)) == [1, 2]
    assert integer_kernel_basis([[1, 0], [0, 1]]) == []


def test_orbit_of_theta_is_equivalent(corpus):
    lambda1, lambda2 = Fraction(2), Fraction(3)
    for seq in corpus:
        if seq.n == 0:
            continue
        first, mu = mu_exponent_matrix(seq)
        theta = tuple(Fraction(1, k + 1) for k in range(seq.n))
        moved = tuple(t * lambda1 ** a * lambda2 ** b for t, a, b in zip(theta, first, mu))
        assert theta_equivalent(seq, theta, moved), seq


def test_theta_off_the_orbit_is_not_equivalent():
    seq = ks(3, 2, 5, 4, 3)
    result = theta_equivalence(seq, (1, 1, 1), (1, 1, 1))
    assert result.kernel_basis
    vector = result.kernel_basis[0]
    i = next(i for i, v in enumerate(vector) if v)
    theta_prime = [1, 1, 1]
    theta_prime[i] = 2
    result = theta_equivalence(seq, (1, 1, 1), theta_prime)
    assert not result.equivalent
    assert result.failed_relation
