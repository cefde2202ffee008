"""
Existence and moduli of 𝔾²ₐ-structures on X̄_ω.

Structures exist iff ω_0 + k_X̄ < 0. Up to equivalence:
  m_ω = 0            → a single structure τ_0
  n = 0, m_ω > 0     → exactly τ_0 and τ_1
  n ≥ 1, m_ω > 0     → τ_λ, λ ∈ ℂ, with τ_λ ~ τ_λ′ iff λ′ = ζ^{ω̄_0}λ, ζ^d = 1
                       (d = ω̄_1 for n = 1, d = ω̄′ for n > 1)
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple

from service.actions.families import ActionFamily, Param, tau_lambda
from service.exceptions import DiscreteModuli, IsP2, NoG2aStructure
from service.key_sequence import KeySequence, require_surface
from service.surface import g2a_margin, invariant_bundle, k_bar_x, m_omega
from service.symbolic import DEFAULT_EXPONENT_CAP, to_rational


class ModuliKind(str, Enum):
    POINT = "Point"
    TWO_POINTS = "TwoPoints"
    LINE_MOD_ROOTS = "LineModRoots"


@dataclass(frozen=True)
class ModuliDescription:
    kind: ModuliKind
    m: int
    root_order: Optional[int] = None   # d
    exponent: Optional[int] = None     # ω̄_0
    representatives: Tuple[str, ...] = ()

    def __str__(self) -> str:
        if self.kind is ModuliKind.LINE_MOD_ROOTS:
            return f"LineModRoots(d = {self.root_order}, exponent = {self.exponent})"
        return self.kind.value


# Sequences whose moduli statement elsewhere disagrees with the m_ω computation.
DISCREPANCIES = {
    (3, 2, 4): (
        "del Pezzo corollary lists a one-dimensional moduli of 𝔾²ₐ-structures for (3,2,4), "
        "but m_ω = 0 forces every structure to be equivalent to τ_0; both facts are reported"
    ),
}


def moduli_notes(ks: KeySequence) -> List[str]:
    note = DISCREPANCIES.get(ks.omegas)
    return [note] if note else []


def g2a_exists(ks: KeySequence) -> bool:
    require_surface(ks)
    return g2a_margin(ks) < 0


def require_g2a(ks: KeySequence) -> KeySequence:
    if not g2a_exists(ks):
        raise NoG2aStructure(
            f"{ks} admits no 𝔾²ₐ-structure: ω_0 + k_X̄ = {g2a_margin(ks)} ≥ 0",
            {"k_bar_x": k_bar_x(ks)},
        )
    return ks


def tau_for(ks: KeySequence, lam: Param = "lam", exponent_cap: int = DEFAULT_EXPONENT_CAP) -> ActionFamily:
    """τ_λ on X̄_ω with m = m_ω."""
    require_g2a(ks)
    return tau_lambda(m_omega(ks), lam, exponent_cap)


def moduli_description(ks: KeySequence) -> ModuliDescription:
    require_g2a(ks)
    if ks.is_p2:
        raise IsP2("X̄ ≅ ℙ²: 𝔾²ₐ-structures on ℙ² are classified separately (automorphism group PGL(3, ℂ))")
    m = m_omega(ks)
    if m == 0:
        return ModuliDescription(ModuliKind.POINT, m, representatives=("τ_0",))
    if ks.n == 0:
        return ModuliDescription(ModuliKind.TWO_POINTS, m, representatives=("τ_0", "τ_1"))
    bundle = invariant_bundle(ks)
    d = bundle.bar_omegas[1] if ks.n == 1 else bundle.bar_omega_prime
    exponent = bundle.bar_omegas[0]
    return ModuliDescription(
        ModuliKind.LINE_MOD_ROOTS,
        m,
        root_order=d,
        exponent=exponent,
        representatives=(f"τ_λ, λ ∈ ℂ, λ ~ ζ^{exponent}·λ for ζ^{d} = 1",),
    )


def sign_flip_allowed(d: int, exponent: int) -> bool:
    """Is −1 = ζ^{exponent} for some d-th root of unity ζ?"""
    return (d // gcd(d, exponent)) % 2 == 0


def tau_equivalent(ks: KeySequence, lam, lam_prime) -> bool:
    """Rational λ, λ′: equivalent iff λ′ = ρλ with ρ ∈ {±1} a power ζ^{ω̄_0}, ζ^d = 1."""
    description = moduli_description(ks)
    if description.kind is not ModuliKind.LINE_MOD_ROOTS:
        raise DiscreteModuli(
            f"moduli of {ks} is {description.kind.value}; τ_λ-equivalence needs n ≥ 1 and m_ω > 0"
        )
    lam, lam_prime = to_rational(lam), to_rational(lam_prime)
    if lam_prime == lam:
        return True
    return lam_prime == -lam and sign_flip_allowed(description.root_order, description.exponent)


def tau_orbit(ks: KeySequence, lam) -> Tuple[Fraction, ...]:
    """Rational members of the equivalence class of λ, sorted."""
    lam = to_rational(lam)
    return tuple(sorted({v for v in (lam, -lam) if tau_equivalent(ks, lam, v)}))
