"""
β-expansions and algebraicity.

For each k, α_kω_k = β_{k,0}ω_0 + β_{k,1}ω_1 + … + β_{k,k−1}ω_{k−1} with
digits 0 ≤ β_{k,j} < α_j (j ≥ 1), computed from the top digit down: at step
j the remainder lies in e_jℤ and ω_j generates the cyclic group
e_jℤ/e_{j−1}ℤ of order α_j, so exactly one digit fits.
"""

from dataclasses import dataclass
from logging import getLogger
from typing import Optional, Sequence, Tuple

from service.exceptions import ReconstructionError, UsageError
from service.key_sequence.sequence import KeySequence

logger = getLogger(__name__)


@dataclass(frozen=True)
class BetaRow:
    """Digits (β_{k,0}, β_{k,1}, …, β_{k,k−1}) of α_kω_k."""

    k: int
    digits: Tuple[int, ...]

    @property
    def beta0(self) -> int:
        return self.digits[0]

    def beta(self, j: int) -> int:
        """β_{k,j}, with β_{k,j} = 0 for j ≥ k."""
        return self.digits[j] if 0 <= j < len(self.digits) else 0


@dataclass(frozen=True)
class BetaExpansion:
    """Rows k = 1 … n of the β-expansion."""

    rows: Tuple[BetaRow, ...]

    def row(self, k: int) -> BetaRow:
        return self.rows[k - 1]

    def beta(self, k: int, j: int) -> int:
        return self.row(k).beta(j)


@dataclass(frozen=True)
class AlgebraicityResult:
    is_algebraic: bool
    witness: Optional[int] = None  # first k with β_{k,0} < 0

    def __bool__(self) -> bool:
        return self.is_algebraic


def beta_row(ks: KeySequence, k: int) -> BetaRow:
    """Digits of α_kω_k over ω_0 … ω_{k−1}, for 1 ≤ k ≤ n+1."""
    if not 1 <= k <= ks.n + 1:
        raise UsageError(f"β-row index must lie in 1..{ks.n + 1}, got {k}")
    target = ks.alpha(k) * ks.omega(k)
    remainder = target
    digits = [0] * k
    for j in range(k - 1, 0, -1):
        alpha_j = ks.alpha(j)
        if alpha_j == 1:
            continue
        e_j = ks.e(j)
        # remainder/e_j ≡ β·(ω_j/e_j) (mod α_j)
        unit = (ks.omega(j) // e_j) % alpha_j
        digit = ((remainder // e_j) * pow(unit, -1, alpha_j)) % alpha_j
        digits[j] = digit
        remainder -= digit * ks.omega(j)
    if remainder % ks.omega(0) != 0:
        raise ReconstructionError(
            f"β-expansion of α_{k}ω_{k} = {target} left remainder {remainder} "
            f"not divisible by ω_0 = {ks.omega(0)}"
        )
    digits[0] = remainder // ks.omega(0)
    row = BetaRow(k=k, digits=tuple(digits))
    if sum(d * ks.omega(j) for j, d in enumerate(row.digits)) != target:
        raise ReconstructionError(f"β-row {k} does not reconstruct {target}")
    return row


def beta_expansion(ks: KeySequence) -> BetaExpansion:
    return BetaExpansion(rows=tuple(beta_row(ks, k) for k in range(1, ks.n + 1)))


def is_algebraic(ks: KeySequence) -> AlgebraicityResult:
    """Algebraic iff every β_{k,0} ≥ 0 for 1 ≤ k ≤ n."""
    for row in beta_expansion(ks).rows:
        if row.beta0 < 0:
            logger.debug(f"{ks} is not algebraic: β_{{{row.k},0}} = {row.beta0}")
            return AlgebraicityResult(False, witness=row.k)
    return AlgebraicityResult(True)


def semigroup_member_bruteforce(
    target: int,
    generators: Sequence[int],
) -> bool:
    """Is target ∈ ℤ_{≥0}⟨generators⟩? Exhaustive reachability table over 0..target."""
    if any(g <= 0 for g in generators):
        raise UsageError(f"generators must be positive, got {tuple(generators)}")
    if target < 0:
        return False
    reachable = [True] + [False] * target
    for g in sorted(set(generators)):
        for value in range(g, target + 1):
            if reachable[value - g]:
                reachable[value] = True
    return reachable[target]
