"""
Automorphism groups of normal primitive compactifications.

n = 0 gives a weighted projective plane ℙ(1, ω_0, ω_1); n ≥ 1 gives maps
(x, y) ↦ (a^{ω̄_0}x + f(y), a^{ω̄_1}y + c) with deg f ≤ m_ω.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from service.key_sequence import KeySequence, require_normal_form, require_primitive
from service.surface.invariants import g2a_margin, invariant_bundle


class AutCase(str, Enum):
    P2 = "P2"
    WP_CASE_1B = "WP_case_1b"
    WP_CASE_1C = "WP_case_1c"
    GENERAL = "General"


class AConstraint(str, Enum):
    ANY_NONZERO = "any nonzero"
    ROOT_OF_UNITY = "root of unity"


@dataclass(frozen=True)
class AutDescription:
    case: AutCase
    f_degree_bound: Optional[int] = None        # General: deg f ≤ m_ω
    f_weighted_degree: Optional[int] = None     # n = 0: (weighted) degree ω_0 of f(y, z)
    c_allowed: bool = False
    a_constraint: AConstraint = AConstraint.ANY_NONZERO
    a_root_order: Optional[int] = None          # ω̄* when n ≥ 2
    summary: str = ""


def aut_description(ks: KeySequence) -> AutDescription:
    require_normal_form(require_primitive(ks))
    omega0, omega1 = ks.omega(0), ks.omega(1)
    if ks.n == 0:
        if omega0 == omega1 == 1:
            return AutDescription(case=AutCase.P2, summary="X̄ ≅ ℙ², automorphism group PGL(3, ℂ)")
        if omega1 == 1:
            return AutDescription(
                case=AutCase.WP_CASE_1B,
                f_weighted_degree=omega0,
                c_allowed=True,
                summary=(
                    f"[z:x:y] ↦ [az+by : cx+f(y,z) : dz+ey], ad−be ≠ 0, c ≠ 0, "
                    f"f homogeneous of degree {omega0}"
                ),
            )
        return AutDescription(
            case=AutCase.WP_CASE_1C,
            f_weighted_degree=omega0,
            c_allowed=True,
            summary=(
                f"[z:x:y] ↦ [z : ax+f(y,z) : by+cz^{omega1}], a, b ≠ 0, "
                f"f weighted homogeneous of degree {omega0}"
            ),
        )

    bundle = invariant_bundle(ks)
    c_allowed = g2a_margin(ks) < 0
    if ks.n == 1:
        constraint, order = AConstraint.ANY_NONZERO, None
        a_text = "a ∈ ℂ*"
    else:
        constraint, order = AConstraint.ROOT_OF_UNITY, bundle.bar_omega_star
        a_text = f"a^{order} = 1"
    w0, w1 = bundle.bar_omegas[0], bundle.bar_omegas[1]
    return AutDescription(
        case=AutCase.GENERAL,
        f_degree_bound=bundle.m_omega,
        c_allowed=c_allowed,
        a_constraint=constraint,
        a_root_order=order,
        summary=(
            f"(x, y) ↦ (a^{w0}·x + f(y), a^{w1}·y + {'c' if c_allowed else '0'}), "
            f"{a_text}, deg f ≤ {bundle.m_omega}"
        ),
    )
