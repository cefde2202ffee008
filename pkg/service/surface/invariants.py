"""
Numerical invariants of X̄_ω: k_X̄, m_ω and the ω̄ family.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Tuple

from service.exceptions import NonPrimitive
from service.key_sequence import KeySequence, require_normal_form, require_primitive
from service.symbolic.rational import floor_rational


@dataclass(frozen=True)
class InvariantBundle:
    k_bar_x: int
    m_omega: int
    bar_omegas: Tuple[int, ...]               # ω̄_0 … ω̄_n
    bar_omega_star_ks: Tuple[int, ...] = ()   # ω̄*_2 … ω̄*_n
    bar_omega_star: Optional[int] = None      # n ≥ 2
    bar_omega_prime: Optional[int] = None     # n ≥ 1


def weights(ks: KeySequence) -> Tuple[int, ...]:
    """Grading (1, ω_0, …, ω_{n+1}) of the coordinates [w : y_0 : … : y_{n+1}]."""
    return (1, *ks.omegas)


def k_bar_x(ks: KeySequence) -> int:
    correction = sum((ks.alpha(k) - 1) * ks.omega(k) for k in range(1, ks.n + 1))
    return -(ks.omega(0) + ks.omega(ks.n + 1) + 1 - correction)


def m_omega(ks: KeySequence) -> int:
    omega1 = ks.omega(1)
    if omega1 <= 0:
        raise NonPrimitive(f"m_ω needs ω_1 > 0, got {ks}")
    return floor_rational(Fraction(-(k_bar_x(ks) + omega1 + 1), omega1))


def bar_omegas(ks: KeySequence) -> Tuple[int, ...]:
    alpha_last = ks.alpha(ks.n + 1)
    return tuple(ks.omega(k) // alpha_last for k in range(ks.n + 1))


def bar_omega_star_ks(ks: KeySequence) -> Tuple[int, ...]:
    bar = bar_omegas(ks)
    values = []
    for k in range(2, ks.n + 1):
        inner = sum((ks.alpha(j) - 1) * bar[j] for j in range(2, k))
        values.append(ks.alpha(1) * bar[1] + inner - bar[k])
    return tuple(values)


def g2a_margin(ks: KeySequence) -> int:
    """ω_0 + k_X̄; negative exactly when 𝔾²ₐ-structures exist."""
    return ks.omega(0) + k_bar_x(ks)


def invariant_bundle(ks: KeySequence) -> InvariantBundle:
    require_normal_form(require_primitive(ks))
    bar = bar_omegas(ks)
    stars = bar_omega_star_ks(ks)
    star = gcd(*stars) if ks.n >= 2 else None
    prime = gcd(*bar[1:]) if ks.n >= 1 else None
    return InvariantBundle(
        k_bar_x=k_bar_x(ks),
        m_omega=m_omega(ks),
        bar_omegas=bar,
        bar_omega_star_ks=stars,
        bar_omega_star=star,
        bar_omega_prime=prime,
    )
