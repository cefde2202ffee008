"""
m_E for the exceptional curves E of the resolution of X̄_ω.

Writing c = p_1/q′_1, P_i = p_1⋯p_i and β_k for the exponent sequence:

    corner i            ⌊c(χ_i + 1) − 1⌋                          1 ≤ i ≤ l
    interior k          ⌊c(β_k + 1) − 1⌋                          k < i_l, α_k = 1
    convergent (1, row) ⌊p̃/(p̃ − q̃)⌋                             rows of (p_1, p_1 − q′_1)
    convergent (i, row) ⌊c(χ_{i−1} − q̃/(P_{i−1}p̃) + 1) − 1⌋     rows of (p_i, |q′_i|)
    line                1                                         E_0 not contracted

m_ω itself is ⌊c(χ_{l+1} + 1) − 1⌋.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from logging import getLogger
from typing import List, Optional

from service.exceptions import InvalidLocator, NotCoprime, NotOrdered
from service.key_sequence import KeySequence, essential_data, exponent_sequence
from service.resolution.continued_fractions import continued_fraction, curvette_table
from service.resolution.monomial import is_irrelevant_chain, monomial_resolution_graph
from service.resolution.newton import NewtonPairs, line_at_infinity_contracted, newton_pairs
from service.symbolic.rational import floor_rational

logger = getLogger(__name__)


class LocatorKind(str, Enum):
    CORNER = "corner"
    INTERIOR = "interior"
    CONVERGENT = "convergent"
    LINE = "line"


@dataclass(frozen=True)
class Locator:
    kind: LocatorKind
    i: Optional[int] = None        # corner / convergent
    k: Optional[int] = None        # interior key-sequence index
    p_tilde: Optional[int] = None
    q_tilde: Optional[int] = None

    @classmethod
    def corner(cls, i: int) -> "Locator":
        return cls(LocatorKind.CORNER, i=i)

    @classmethod
    def interior(cls, k: int) -> "Locator":
        return cls(LocatorKind.INTERIOR, k=k)

    @classmethod
    def convergent(cls, i: int, p_tilde: int, q_tilde: int) -> "Locator":
        return cls(LocatorKind.CONVERGENT, i=i, p_tilde=p_tilde, q_tilde=q_tilde)

    @classmethod
    def line(cls) -> "Locator":
        return cls(LocatorKind.LINE)

    def __str__(self) -> str:
        if self.kind is LocatorKind.CORNER:
            return f"corner {self.i}"
        if self.kind is LocatorKind.INTERIOR:
            return f"interior {self.k}"
        if self.kind is LocatorKind.CONVERGENT:
            return f"convergent ({self.i}, {self.p_tilde}/{self.q_tilde})"
        return "line"


def _slope(pairs: NewtonPairs) -> Fraction:
    return Fraction(pairs.p(1), pairs.q(1))


def m_omega_from_pairs(ks: KeySequence) -> int:
    pairs = newton_pairs(ks)
    data = essential_data(ks)
    return floor_rational(_slope(pairs) * (data.chi_at(data.l + 1) + 1) - 1)


def _convergent_rows(pairs: NewtonPairs, i: int) -> List[Locator]:
    if i == 1:
        p, q = pairs.p(1), pairs.p(1) - pairs.q(1)
    else:
        p, q = pairs.p(i), abs(pairs.q(i))
    try:
        cf = continued_fraction(p, q)
    except (NotCoprime, NotOrdered):
        return []
    table = curvette_table(cf)
    graph = monomial_resolution_graph(p, q) if i == 1 else None
    rows = []
    for row in table.rows:
        if i == 1:
            if row.p_tilde == row.q_tilde:
                continue
            if row.j % 2 == 1 and is_irrelevant_chain(graph, row.index, cf.m(1)):
                continue
        rows.append(Locator.convergent(i, row.p_tilde, row.q_tilde))
    return rows


def derivable_locators(ks: KeySequence) -> List[Locator]:
    """Every locator ``m_E_value`` accepts for ks, in a fixed order."""
    pairs = newton_pairs(ks)
    data = essential_data(ks)
    locators = [Locator.corner(i) for i in range(1, data.l + 1)]
    if data.l >= 1:
        essential = set(data.indices)
        locators += [Locator.interior(k) for k in range(1, data.index(data.l)) if k not in essential]
    for i in range(1, data.l + 1):
        if i == 1 or pairs.p(i) > abs(pairs.q(i)):
            locators += _convergent_rows(pairs, i)
    if ks.n >= 1 and not line_at_infinity_contracted(pairs):
        locators.append(Locator.line())
    return locators


def m_E_value(ks: KeySequence, locator: Locator) -> int:
    pairs = newton_pairs(ks)
    data = essential_data(ks)
    if locator not in derivable_locators(ks):
        raise InvalidLocator(f"{locator} is not derivable for {ks}")
    c = _slope(pairs)
    if locator.kind is LocatorKind.CORNER:
        return floor_rational(c * (data.chi_at(locator.i) + 1) - 1)
    if locator.kind is LocatorKind.INTERIOR:
        beta = exponent_sequence(ks)[locator.k - 1]
        return floor_rational(c * (beta + 1) - 1)
    if locator.kind is LocatorKind.LINE:
        return 1
    p_t, q_t = locator.p_tilde, locator.q_tilde
    if locator.i == 1:
        return floor_rational(Fraction(p_t, p_t - q_t))
    shift = Fraction(q_t, pairs.p_product(locator.i - 1) * p_t)
    return floor_rational(c * (data.chi_at(locator.i - 1) - shift + 1) - 1)
