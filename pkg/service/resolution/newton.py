"""
Formal Newton pairs and the resolution schematic of X̄_ω.

With essential indices 0 = i_0 < i_1 < … < i_{l+1} = n+1:

    p_j  = α_{i_j}
    q′_1 = p_1·χ_1
    q′_j = p_1⋯p_j·(χ_j − χ_{j−1}),   2 ≤ j ≤ l+1

The schematic is a spine of chains with Δ = |q′_1|, …, |q′_{l+1}| separated
by l nodes, node j carrying a branch chain with Δ = p_j, plus a disjoint
chain with Δ = p_{l+1} when p_{l+1} > 1. A chain with Δ = 1 is empty.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Tuple

from service.exceptions import NonIntegerPair
from service.key_sequence import KeySequence, essential_data, require_normal_form, require_primitive


@dataclass(frozen=True)
class NewtonPairs:
    pairs: Tuple[Tuple[int, int], ...]  # (q′_j, p_j), j = 1 … l+1

    @property
    def l(self) -> int:
        return len(self.pairs) - 1

    def q(self, j: int) -> int:
        return self.pairs[j - 1][0]

    def p(self, j: int) -> int:
        return self.pairs[j - 1][1]

    def p_product(self, upto: int) -> int:
        """p_1 ⋯ p_upto (1 for upto = 0)."""
        result = 1
        for j in range(1, upto + 1):
            result *= self.p(j)
        return result

    def sign_pattern_ok(self) -> bool:
        """p_j ≥ 2 (j ≤ l), q′_1 > 0, gcd(q′_1, p_1) = 1, q′_j < 0 (j ≥ 2)."""
        if any(self.p(j) < 2 for j in range(1, self.l + 1)) or self.p(self.l + 1) < 1:
            return False
        if self.q(1) <= 0 or gcd(self.q(1), self.p(1)) != 1:
            return False
        return all(self.q(j) < 0 for j in range(2, self.l + 2))

    def __str__(self) -> str:
        return ", ".join(f"({q}, {p})" for q, p in self.pairs)


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegerPair(f"{what} = {value} is not an integer")
    return value.numerator


def newton_pairs(ks: KeySequence) -> NewtonPairs:
    require_normal_form(require_primitive(ks))
    data = essential_data(ks)
    pairs = []
    product = 1
    for j in range(1, data.l + 2):
        p = ks.alpha(data.index(j))
        product *= p
        if j == 1:
            q = _integral(p * data.chi_at(1), "q′_1")
        else:
            q = _integral(product * (data.chi_at(j) - data.chi_at(j - 1)), f"q′_{j}")
        pairs.append((q, p))
    return NewtonPairs(tuple(pairs))


def line_at_infinity_contracted(pairs: NewtonPairs) -> bool:
    """The curve at infinity is contracted in the minimal resolution iff q′_1 ≤ p_1/2."""
    return 2 * pairs.q(1) <= pairs.p(1)


@dataclass(frozen=True)
class DualGraphSchematic:
    spine_deltas: Tuple[int, ...]       # |q′_1| … |q′_{l+1}|
    branch_deltas: Tuple[int, ...]      # p_1 … p_l
    extra_chain: Optional[int] = None   # p_{l+1} when > 1

    @property
    def l(self) -> int:
        return len(self.branch_deltas)

    @staticmethod
    def is_empty(delta: int) -> bool:
        return delta == 1

    def node_arms(self, j: int) -> Tuple[int, int, int]:
        """Δ values around node j (1 ≤ j ≤ l): left spine, branch, right spine."""
        return self.spine_deltas[j - 1], self.branch_deltas[j - 1], self.spine_deltas[j]

    def __str__(self) -> str:
        text = f"spine {self.spine_deltas}, branches {self.branch_deltas}"
        if self.extra_chain:
            text += f", extra chain Δ = {self.extra_chain}"
        return text


def dual_graph_schematic(pairs: NewtonPairs) -> DualGraphSchematic:
    last_p = pairs.p(pairs.l + 1)
    return DualGraphSchematic(
        spine_deltas=tuple(abs(pairs.q(j)) for j in range(1, pairs.l + 2)),
        branch_deltas=tuple(pairs.p(j) for j in range(1, pairs.l + 1)),
        extra_chain=last_p if last_p > 1 else None,
    )
