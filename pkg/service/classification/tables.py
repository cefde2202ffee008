"""
Direct classification from the essential subsequence ω_e.

Rows with one essential index are of the form (p_1p_2, q_1p_2, q_1p_1p_2 − r)
with p_1 = α_{i_1} and p_2 = α_{n+1}; k_X̄ + ω_0 = r − 1 − q_1p_2 there, so
every 𝔾²ₐ column reduces to q_1p_2 ≥ r.
"""

from dataclasses import dataclass, field
from enum import Enum
from logging import getLogger
from math import gcd
from typing import Callable, Dict, Optional, Tuple, Union

from service.classification.kawamata import SingularityClass
from service.exceptions import ReconstructionError
from service.key_sequence import KeySequence, essential_subsequence, require_surface

logger = getLogger(__name__)


class TableRow(str, Enum):
    PLANE = "T1.1"
    WEIGHTED = "T1.2"
    R_ONE = "T1.3"
    Q_TWO_R_TWO = "T1.4"
    Q_TWO_EXCEPTIONAL = "T1.5"
    Q_THREE = "T1.6"
    LOG_CANONICAL = "T2.1"

    @property
    def template(self) -> str:
        return _TEMPLATES[self]

    @property
    def singularity_class(self) -> SingularityClass:
        if self is TableRow.LOG_CANONICAL:
            return SingularityClass.LOG_CANONICAL
        return SingularityClass.LOG_TERMINAL


_TEMPLATES = {
    TableRow.PLANE: "(1,1)",
    TableRow.WEIGHTED: "(p,q)",
    TableRow.R_ONE: "(p1p2, q1p2, q1p1p2−1)",
    TableRow.Q_TWO_R_TWO: "(p1p2, 2p2, 2p1p2−2)",
    TableRow.Q_TWO_EXCEPTIONAL: "(p1p2, 2p2, 2p1p2−r)",
    TableRow.Q_THREE: "(p1p2, 3p2, 3p1p2−2)",
    TableRow.LOG_CANONICAL: "(3p, 2p, 6p−6)",
}

Q_TWO_PAIRS = ((3, 3), (3, 4), (3, 5), (5, 3))


@dataclass(frozen=True)
class TableMatch:
    row: TableRow
    parameters: Dict[str, int] = field(default_factory=dict)
    g2a: bool = False

    @property
    def singularity_class(self) -> SingularityClass:
        return self.row.singularity_class

    @property
    def template(self) -> str:
        return self.row.template

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class NoMatch:
    reason: str

    @property
    def singularity_class(self) -> SingularityClass:
        return SingularityClass.NEITHER

    def __bool__(self) -> bool:
        return False


TableResult = Union[TableMatch, NoMatch]


def substitute_template(match: TableMatch) -> Tuple[int, ...]:
    """ω_e rebuilt from a row and its parameters."""
    v = match.parameters
    if match.row is TableRow.PLANE:
        return (1, 1)
    if match.row is TableRow.WEIGHTED:
        return (v["p"], v["q"])
    if match.row is TableRow.LOG_CANONICAL:
        p = v["p"]
        return (3 * p, 2 * p, 6 * p - 6)
    p1, q1, p2, r = v["p1"], v["q1"], v["p2"], v["r"]
    return (p1 * p2, q1 * p2, q1 * p1 * p2 - r)


# (row, side condition, 𝔾²ₐ column), tried in table order
_RowRule = Tuple[TableRow, Callable[[int, int, int, int], bool], Callable[[int, int, int, int], bool]]

_ONE_ESSENTIAL_RULES: Tuple[_RowRule, ...] = (
    (TableRow.R_ONE,
     lambda p1, q1, p2, r: r == 1 and q1 > 1,
     lambda p1, q1, p2, r: True),
    (TableRow.Q_TWO_R_TWO,
     lambda p1, q1, p2, r: q1 == 2 and r == 2,
     lambda p1, q1, p2, r: True),
    (TableRow.Q_TWO_EXCEPTIONAL,
     lambda p1, q1, p2, r: q1 == 2 and (p1, r) in Q_TWO_PAIRS,
     lambda p1, q1, p2, r: p2 >= 3 if (p1, r) == (3, 5) else p2 >= 2),
    (TableRow.Q_THREE,
     lambda p1, q1, p2, r: q1 == 3 and r == 2 and p1 in (4, 5) and gcd(p2, 2) == 1,
     lambda p1, q1, p2, r: True),
    (TableRow.LOG_CANONICAL,
     lambda p1, q1, p2, r: p1 == 3 and q1 == 2 and r == 6 and gcd(p2, 6) == 1,
     lambda p1, q1, p2, r: p2 >= 3),
)


def _checked(match: TableMatch, essential: KeySequence) -> TableMatch:
    rebuilt = substitute_template(match)
    if rebuilt != essential.omegas:
        raise ReconstructionError(
            f"row {match.row.value} with {match.parameters} gives {rebuilt}, expected {essential.omegas}"
        )
    return match


def table_classify(ks: KeySequence) -> TableResult:
    require_surface(ks)
    essential = essential_subsequence(ks)
    l = essential.n

    if l == 0:
        if essential.is_p2:
            return _checked(TableMatch(TableRow.PLANE, {}, g2a=True), essential)
        p, q = essential.omegas
        return _checked(TableMatch(TableRow.WEIGHTED, {"p": p, "q": q}, g2a=True), essential)

    if l >= 2:
        return NoMatch(f"{l} essential indices")

    p1, p2 = essential.alpha(1), essential.alpha(2)
    q1 = essential.omega(1) // p2
    r = q1 * p1 * p2 - essential.omega(2)
    for row, condition, g2a_rule in _ONE_ESSENTIAL_RULES:
        if not condition(p1, q1, p2, r):
            continue
        if row is TableRow.LOG_CANONICAL:
            match = TableMatch(row, {"p": p2}, g2a=g2a_rule(p1, q1, p2, r))
        else:
            match = TableMatch(row, {"p1": p1, "q1": q1, "p2": p2, "r": r}, g2a=g2a_rule(p1, q1, p2, r))
        logger.debug(f"{ks}: ω_e = {essential} matches {row.value} {match.parameters}")
        return _checked(match, essential)
    return NoMatch(f"(p1, q1, p2, r) = ({p1}, {q1}, {p2}, {r}) fits no row")
