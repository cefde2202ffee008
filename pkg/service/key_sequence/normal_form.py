"""
Normal-form test for key sequences.

(N0) n = 0 and ω_0 ≥ ω_1.
(N1) n ≥ 1, ω_0 > ω_1, ω_1/ω_0 ∉ {1/k : k ≥ 1} ∪ {0}, and for every β in
     the exponent set 𝓔_ω no i ∈ Î_β has ω_i = ω̂_β.

Every failed condition is reported with a witness that ``recheck_failure``
re-validates in isolation.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from logging import getLogger
from typing import List, Optional, Tuple

from service.key_sequence.essential import EssentialData, essential_data
from service.key_sequence.sequence import KeySequence
from service.symbolic.rational import ceil_rational, floor_rational

logger = getLogger(__name__)


class NormalCase(str, Enum):
    N0 = "N0"
    N1 = "N1"
    NEITHER = "neither"


class NormalCondition(str, Enum):
    N0B = "N0b"  # ω_0 ≥ ω_1 (n = 0)
    N1B = "N1b"  # ω_0 > ω_1
    N1C = "N1c"  # ω_1/ω_0 not 1/k and not 0
    N1D = "N1d"  # no i ∈ Î_β with ω_i = ω̂_β


@dataclass(frozen=True)
class NormalFormFailure:
    condition: NormalCondition
    message: str
    beta: Optional[Fraction] = None
    index: Optional[int] = None


@dataclass(frozen=True)
class HatEntry:
    """(k̂(β), ω̂_β, Î_β) for one β ∈ 𝓔_ω."""

    beta: Fraction
    k_hat: int
    omega_hat: Fraction
    i_hat: Tuple[int, ...]


@dataclass(frozen=True)
class NormalFormReport:
    is_normal: bool
    case: NormalCase
    failures: Tuple[NormalFormFailure, ...] = ()
    exponent_set: Tuple[Fraction, ...] = ()
    hat_table: Tuple[HatEntry, ...] = field(default_factory=tuple)


# ============================================================================
# 𝓔_ω and the hat data
# ============================================================================

def exponent_set(ks: KeySequence, data: Optional[EssentialData] = None) -> Tuple[Fraction, ...]:
    """𝓔_ω in increasing order (empty when ω_1 = 0)."""
    data = data or essential_data(ks)
    omega0, omega1 = ks.omega(0), ks.omega(1)
    if omega1 == 0:
        return ()
    chi_last = data.chi_at(data.l + 1)
    ratio = Fraction(omega0, omega1)
    if omega1 > 0:
        lower = max(Fraction(0), (chi_last + 1) * ratio)
        upper = ratio + 1
        values = {Fraction(0)}
    else:
        lower = Fraction(0)
        upper = (chi_last + 1) * ratio
        values = set()
    # strict inequalities on both sides, boundaries included literally
    for k in range(floor_rational(lower) + 1, ceil_rational(upper)):
        values.add(Fraction(k * omega1, omega0) - 1)
    return tuple(sorted(values))


def k_hat(beta: Fraction, data: EssentialData) -> int:
    if beta >= data.chi_at(1):
        return 0
    return max(k for k in range(1, data.l + 2) if beta < data.chi_at(k))


def omega_hat(ks: KeySequence, beta: Fraction, data: EssentialData) -> Fraction:
    total = ks.omega(0) * beta
    for j in range(1, k_hat(beta, data) + 1):
        i_j = data.index(j)
        if i_j <= ks.n:
            total += (ks.alpha(i_j) - 1) * ks.omega(i_j)
    return total


def i_hat(beta: Fraction, data: EssentialData) -> Tuple[int, ...]:
    kh = k_hat(beta, data)
    if kh > data.l:
        return ()
    return tuple(range(data.index(kh) + 1, data.index(kh + 1)))


def hat_entry(ks: KeySequence, beta: Fraction, data: Optional[EssentialData] = None) -> HatEntry:
    data = data or essential_data(ks)
    return HatEntry(
        beta=beta,
        k_hat=k_hat(beta, data),
        omega_hat=omega_hat(ks, beta, data),
        i_hat=i_hat(beta, data),
    )


# ============================================================================
# Report
# ============================================================================

def normal_form_report(ks: KeySequence) -> NormalFormReport:
    omega0, omega1 = ks.omega(0), ks.omega(1)
    failures: List[NormalFormFailure] = []

    if ks.n == 0:
        if omega0 < omega1:
            failures.append(NormalFormFailure(
                NormalCondition.N0B, f"ω_0 = {omega0} < ω_1 = {omega1}"
            ))
        return NormalFormReport(
            is_normal=not failures,
            case=NormalCase.N0 if not failures else NormalCase.NEITHER,
            failures=tuple(failures),
        )

    data = essential_data(ks)
    if not omega0 > omega1:
        failures.append(NormalFormFailure(
            NormalCondition.N1B, f"ω_0 = {omega0} is not > ω_1 = {omega1}"
        ))
    if omega1 == 0 or (omega1 > 0 and omega0 % omega1 == 0):
        failures.append(NormalFormFailure(
            NormalCondition.N1C, f"ω_1/ω_0 = {Fraction(omega1, omega0)} is 0 or of the form 1/k"
        ))

    exponents = exponent_set(ks, data)
    table = tuple(hat_entry(ks, beta, data) for beta in exponents)
    for entry in table:
        for i in entry.i_hat:
            if ks.omega(i) == entry.omega_hat:
                failures.append(NormalFormFailure(
                    NormalCondition.N1D,
                    f"β = {entry.beta}: ω_{i} = {ks.omega(i)} equals ω̂_β",
                    beta=entry.beta,
                    index=i,
                ))

    if failures:
        logger.debug(f"{ks} not in normal form: {[f.condition.value for f in failures]}")
    return NormalFormReport(
        is_normal=not failures,
        case=NormalCase.N1 if not failures else NormalCase.NEITHER,
        failures=tuple(failures),
        exponent_set=exponents,
        hat_table=table,
    )


def is_normal_form(ks: KeySequence) -> bool:
    return normal_form_report(ks).is_normal


def recheck_failure(ks: KeySequence, failure: NormalFormFailure) -> bool:
    """True when the recorded violation reproduces from its witness alone."""
    omega0, omega1 = ks.omega(0), ks.omega(1)
    if failure.condition is NormalCondition.N0B:
        return ks.n == 0 and omega0 < omega1
    if failure.condition is NormalCondition.N1B:
        return ks.n >= 1 and not omega0 > omega1
    if failure.condition is NormalCondition.N1C:
        return ks.n >= 1 and (omega1 == 0 or (omega1 > 0 and omega0 % omega1 == 0))
    data = essential_data(ks)
    if failure.beta is None or failure.index is None:
        return False
    if failure.beta not in exponent_set(ks, data):
        return False
    entry = hat_entry(ks, failure.beta, data)
    return failure.index in entry.i_hat and ks.omega(failure.index) == entry.omega_hat
