"""
θ-equivalence of surfaces X̄_{ω,θ} and X̄_{ω,θ′}.

θ′ ~ θ iff θ′_i = λ_1^{−β_{i,0}} λ_2^{μ_i} θ_i for some λ_1, λ_2 ∈ ℂ*. The
image of that monomial map is the subtorus cut out by r^v = 1 for v in the
integer kernel L of the 2×n exponent matrix, so over ℚ* the test reduces to
checking ∏ r_i^{v_i} = 1 on a basis of L.
"""

from dataclasses import dataclass
from fractions import Fraction
from logging import getLogger
from typing import List, Sequence, Tuple

from service.key_sequence import KeySequence, beta_expansion, essential_data
from service.surface.equations import check_theta

logger = getLogger(__name__)

IntMatrix = List[List[int]]


@dataclass(frozen=True)
class ThetaEquivalence:
    equivalent: bool
    matrix: Tuple[Tuple[int, ...], Tuple[int, ...]]
    kernel_basis: Tuple[Tuple[int, ...], ...]
    ratios: Tuple[Fraction, ...]
    failed_relation: Tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.equivalent


def mu_exponents(ks: KeySequence) -> Tuple[int, ...]:
    """μ_1 … μ_n, reading β_{i,j} as 0 for j ≥ i."""
    data = essential_data(ks)
    expansion = beta_expansion(ks)
    values = []
    for i in range(1, ks.n + 1):
        k = max(t for t in range(data.l + 1) if data.index(t) <= i)
        prefix = 1  # α_{i_0} ⋯ α_{i_{j−1}} with α_{i_0} = 1
        total = 0
        for j in range(1, k + 1):
            total += prefix * expansion.beta(i, data.index(j))
            prefix *= ks.alpha(data.index(j))
        values.append(prefix - total)
    return tuple(values)


def mu_exponent_matrix(ks: KeySequence) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Rows (−β_{i,0})_i and (μ_i)_i."""
    expansion = beta_expansion(ks)
    first = tuple(-expansion.row(i).beta0 for i in range(1, ks.n + 1))
    return first, mu_exponents(ks)


def integer_kernel_basis(matrix: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Basis of {v ∈ ℤ^n : Mv = 0} by unimodular column reduction.

    The transform U is unimodular, so the columns of U matching zero columns
    of MU span the full (saturated) kernel lattice.
    """
    rows = [list(r) for r in matrix]
    n = len(rows[0]) if rows else 0
    M: IntMatrix = [r[:] for r in rows]
    U: IntMatrix = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap(a: int, b: int) -> None:
        for mat in (M, U):
            for r in mat:
                r[a], r[b] = r[b], r[a]

    def add_multiple(target: int, source: int, factor: int) -> None:
        for mat in (M, U):
            for r in mat:
                r[target] += factor * r[source]

    pivot_col = 0
    for row in range(len(M)):
        if pivot_col >= n:
            break
        while True:
            nonzero = [c for c in range(pivot_col, n) if M[row][c] != 0]
            if not nonzero:
                break
            smallest = min(nonzero, key=lambda c: abs(M[row][c]))
            swap(pivot_col, smallest)
            done = True
            for c in range(pivot_col + 1, n):
                if M[row][c]:
                    add_multiple(c, pivot_col, -(M[row][c] // M[row][pivot_col]))
                    if M[row][c]:
                        done = False
            if done:
                pivot_col += 1
                break
    kernel = []
    for c in range(pivot_col, n):
        if all(M[r][c] == 0 for r in range(len(M))):
            kernel.append(tuple(U[r][c] for r in range(n)))
    return kernel


def _relation_value(ratios: Sequence[Fraction], vector: Sequence[int]) -> Fraction:
    value = Fraction(1)
    for r, v in zip(ratios, vector):
        value *= r ** v
    return value


def theta_equivalence(ks: KeySequence, theta: Sequence, theta_prime: Sequence) -> ThetaEquivalence:
    theta = check_theta(ks, theta)
    theta_prime = check_theta(ks, theta_prime)
    ratios = tuple(b / a for a, b in zip(theta, theta_prime))
    matrix = mu_exponent_matrix(ks)
    basis = tuple(integer_kernel_basis(matrix)) if ks.n else ()
    for vector in basis:
        if _relation_value(ratios, vector) != 1:
            logger.debug(f"θ-equivalence fails on kernel vector {vector}")
            return ThetaEquivalence(False, matrix, basis, ratios, failed_relation=vector)
    return ThetaEquivalence(True, matrix, basis, ratios)


def theta_equivalent(ks: KeySequence, theta: Sequence, theta_prime: Sequence) -> bool:
    return theta_equivalence(ks, theta, theta_prime).equivalent
