"""
Plus-form continued fractions and their curvette tables.

    p/q = m_1 + 1/(m_2 + 1/(… + 1/m_N)),   m_j ≥ 1,  m_N ≥ 2 when N ≥ 2

M_j = m_1 + … + m_j. Row (j, k), 0 ≤ j < N, 1 ≤ k ≤ m_{j+1}, is the
truncation [m_1, …, m_j, k] and belongs to E_{M_j + k}.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

from service.exceptions import NotCoprime, NotOrdered, UsageError


def check_pair(p: int, q: int) -> None:
    if p <= 0 or q <= 0:
        raise NotOrdered(f"p and q must be positive, got {p}/{q}")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {gcd(p, q)}")
    if p <= q:
        raise NotOrdered(f"expected p > q, got {p}/{q}")


def evaluate_terms(terms: Sequence[int]) -> Fraction:
    if not terms:
        raise UsageError("empty continued fraction")
    value = Fraction(terms[-1])
    for m in reversed(terms[:-1]):
        value = m + 1 / value
    return value


@dataclass(frozen=True)
class ContinuedFraction:
    terms: Tuple[int, ...]

    def __post_init__(self):
        if not self.terms or any(m < 1 for m in self.terms):
            raise UsageError(f"partial quotients must be ≥ 1: {self.terms}")
        if len(self.terms) >= 2 and self.terms[-1] < 2:
            raise UsageError(f"last partial quotient must be ≥ 2: {self.terms}")

    @property
    def N(self) -> int:
        return len(self.terms)

    def m(self, j: int) -> int:
        return self.terms[j - 1]

    def M(self, j: int) -> int:
        """M_j = m_1 + … + m_j (M_0 = 0)."""
        return sum(self.terms[:j])

    def evaluate(self) -> Fraction:
        return evaluate_terms(self.terms)

    def __str__(self) -> str:
        return "[" + ", ".join(str(m) for m in self.terms) + "]"


def continued_fraction(p: int, q: int) -> ContinuedFraction:
    check_pair(p, q)
    terms = []
    a, b = p, q
    while b:
        terms.append(a // b)
        a, b = b, a % b
    return ContinuedFraction(tuple(terms))


@dataclass(frozen=True)
class CurvetteRow:
    j: int
    k: int
    index: int          # M_j + k
    p_tilde: int
    q_tilde: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.p_tilde, self.q_tilde)


@dataclass(frozen=True)
class CurvetteTable:
    cf: ContinuedFraction
    rows: Tuple[CurvetteRow, ...]

    def row(self, j: int, k: int) -> CurvetteRow:
        for candidate in self.rows:
            if (candidate.j, candidate.k) == (j, k):
                return candidate
        raise UsageError(f"no curvette row ({j}, {k}) for {self.cf}")

    def is_terminal(self, row: CurvetteRow) -> bool:
        return row.index == self.cf.M(self.cf.N)

    def __len__(self) -> int:
        return len(self.rows)


def curvette_table(cf: ContinuedFraction) -> CurvetteTable:
    rows: List[CurvetteRow] = []
    for j in range(cf.N):
        prefix = list(cf.terms[:j])
        for k in range(1, cf.m(j + 1) + 1):
            value = evaluate_terms(prefix + [k])
            rows.append(
                CurvetteRow(
                    j=j,
                    k=k,
                    index=cf.M(j) + k,
                    p_tilde=value.numerator,
                    q_tilde=value.denominator,
                )
            )
    return CurvetteTable(cf=cf, rows=tuple(rows))
