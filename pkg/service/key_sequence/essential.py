"""
Essential subsequence and χ values.

Essential indices are the k (1 ≤ k ≤ n) with α_k ≥ 2; together with the
endpoints 0 and n+1 they give 0 = i_0 < i_1 < … < i_{l+1} = n+1, and

    χ_j = (ω_{i_j} − Σ_{t<j} (α_{i_t} − 1)ω_{i_t}) / ω_0,   1 ≤ j ≤ l+1.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from service.key_sequence.sequence import KeySequence, validate


@dataclass(frozen=True)
class EssentialData:
    indices: Tuple[int, ...]   # i_0 … i_{l+1}
    chi: Tuple[Fraction, ...]  # χ_1 … χ_{l+1}

    @property
    def l(self) -> int:
        return len(self.indices) - 2

    def index(self, j: int) -> int:
        return self.indices[j]

    def chi_at(self, j: int) -> Fraction:
        """χ_j for 1 ≤ j ≤ l+1."""
        return self.chi[j - 1]

    @property
    def interior(self) -> Tuple[int, ...]:
        return self.indices[1:-1]


def essential_data(ks: KeySequence) -> EssentialData:
    interior = [k for k in range(1, ks.n + 1) if ks.alpha(k) >= 2]
    indices = (0, *interior, ks.n + 1)
    chi = []
    correction = 0
    for j in range(1, len(indices)):
        i_j = indices[j]
        chi.append(Fraction(ks.omega(i_j) - correction, ks.omega(0)))
        if i_j <= ks.n:
            correction += (ks.alpha(i_j) - 1) * ks.omega(i_j)
    return EssentialData(indices=indices, chi=tuple(chi))


def essential_subsequence(ks: KeySequence) -> KeySequence:
    """(ω_{i_0}, …, ω_{i_{l+1}}), itself a key sequence."""
    return validate([ks.omega(i) for i in essential_data(ks).indices])


def exponent_sequence(ks: KeySequence) -> Tuple[Fraction, ...]:
    """β_1 … β_{n+1} with β_k = (ω_k − Σ_{j<k}(α_j − 1)ω_j)/ω_0.

    Agrees with χ on essential indices and decreases strictly along k.
    """
    values = []
    correction = 0
    for k in range(1, ks.n + 2):
        values.append(Fraction(ks.omega(k) - correction, ks.omega(0)))
        if k <= ks.n:
            correction += (ks.alpha(k) - 1) * ks.omega(k)
    return tuple(values)
