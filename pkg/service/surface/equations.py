"""
Defining equations of X̄_{ω,θ} in ℙ(1, ω_0, …, ω_{n+1}).

    G_k = w^{α_kω_k − ω_{k+1}} y_{k+1} − (y_k^{α_k} − θ_k ∏_{j<k} y_j^{β_{k,j}}),  1 ≤ k ≤ n
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from service.exceptions import LengthMismatch, ZeroTheta
from service.key_sequence import KeySequence, beta_expansion, require_surface
from service.surface.invariants import weights
from service.symbolic import DEFAULT_EXPONENT_CAP, Polynomial, VariableSet, to_rational


def coordinate_names(ks: KeySequence) -> Tuple[str, ...]:
    return ("w", *(f"y{k}" for k in range(ks.n + 2)))


def check_theta(ks: KeySequence, theta: Sequence) -> Tuple[Fraction, ...]:
    values = tuple(to_rational(t) for t in theta)
    if len(values) != ks.n:
        raise LengthMismatch(f"θ needs {ks.n} entries for {ks}, got {len(values)}")
    for k, value in enumerate(values, start=1):
        if value == 0:
            raise ZeroTheta(f"θ_{k} must be nonzero", {"index": k})
    return values


@dataclass(frozen=True)
class SurfaceModel:
    """A primitive algebraic normal-form key sequence with exact θ ∈ (ℚ*)^n."""

    ks: KeySequence
    theta: Tuple[Fraction, ...]
    exponent_cap: int = field(default=DEFAULT_EXPONENT_CAP, compare=False)

    def __post_init__(self):
        require_surface(self.ks)
        object.__setattr__(self, "theta", check_theta(self.ks, self.theta))

    @property
    def variables(self) -> VariableSet:
        return VariableSet(coordinate_names(self.ks), self.exponent_cap)

    def grading(self) -> Dict[str, int]:
        return dict(zip(coordinate_names(self.ks), weights(self.ks)))


def defining_equations(model: SurfaceModel) -> List[Polynomial]:
    ks = model.ks
    V = model.variables
    expansion = beta_expansion(ks)
    equations = []
    for k in range(1, ks.n + 1):
        row = expansion.row(k)
        w_power = ks.alpha(k) * ks.omega(k) - ks.omega(k + 1)
        lead = Polynomial.monomial(V, {"w": w_power, f"y{k + 1}": 1})
        pure = Polynomial.monomial(V, {f"y{k}": ks.alpha(k)})
        mixed = Polynomial.monomial(
            V, {f"y{j}": row.beta(j) for j in range(k)}, model.theta[k - 1]
        )
        equations.append(lead - (pure - mixed))
    return equations


def equation_degrees(model: SurfaceModel) -> List[int]:
    """α_kω_k, the weighted degree each G_k must have."""
    return [model.ks.alpha(k) * model.ks.omega(k) for k in range(1, model.ks.n + 1)]


def equations_are_homogeneous(model: SurfaceModel) -> bool:
    grading = model.grading()
    return all(
        g.is_weighted_homogeneous(grading, degree)
        for g, degree in zip(defining_equations(model), equation_degrees(model))
    )
