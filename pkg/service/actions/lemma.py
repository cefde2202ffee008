"""
Recognising actions of the shape
    (t1, t2)·(x, y) = (a·x + Σ_{i=0}^{m} b_i·y^i, b·y + c)
with a, b, c, b_i ∈ ℚ[t1, t2].

Such a map is a 𝔾²ₐ-action iff
  (1) a = b = 1;
  (2) c = c1·t1 + c2·t2;
  (3) when c = 0, every b_i is linear in (t1, t2);
  (4) when c ≠ 0, b_i = g_i(c1·t1 + c2·t2) for i ≥ 1 and
      b_0 = g_0(c1·t1 + c2·t2) + (a linear form), for some λ_0 … λ_m.
"""

from dataclasses import dataclass
from fractions import Fraction
from logging import getLogger
from typing import Optional, Sequence, Tuple

from service.actions.families import (
    BASE_NAMES,
    ActionFamily,
    FamilyKind,
    g_polynomial,
)
from service.actions.verification import AxiomCheck, verify_action_axioms
from service.exceptions import UsageError
from service.symbolic import PolyMap, Polynomial, VariableSet

logger = getLogger(__name__)

LEMMA_VARIABLES = VariableSet(BASE_NAMES)


@dataclass(frozen=True)
class LemmaVerdict:
    is_action: bool
    failed_condition: Optional[int]
    message: str
    lambdas: Tuple[Fraction, ...] = ()
    axioms: Optional[AxiomCheck] = None

    @property
    def agrees_with_axioms(self) -> bool:
        return self.axioms is None or self.axioms.holds == self.is_action


def _lift(p: Polynomial) -> Polynomial:
    if not set(p.names) <= set(LEMMA_VARIABLES.names):
        raise UsageError(f"lemma data must live over a subset of {LEMMA_VARIABLES.names}")
    for name in p.names:
        if name not in ("t1", "t2") and p.depends_on(name):
            raise UsageError(f"lemma data must be polynomials in t1, t2; {p} involves {name}")
    return p.extend(LEMMA_VARIABLES)


def _is_linear_form(p: Polynomial) -> bool:
    return all(sum(monom) == 1 for monom in p.terms())


def assemble_lemma_map(a: Polynomial, b: Polynomial, c: Polynomial, b_i: Sequence[Polynomial]) -> PolyMap:
    V = LEMMA_VARIABLES
    x, y = Polynomial.variable("x", V), Polynomial.variable("y", V)
    first = _lift(a) * x
    for i, coeff in enumerate(b_i):
        first = first + _lift(coeff) * y ** i
    return PolyMap(first, _lift(b) * y + _lift(c))


def _solve_lambdas(r: Polynomial, b_i: Sequence[Polynomial]) -> Tuple[Optional[int], Tuple[Fraction, ...]]:
    """Peel λ_m, …, λ_0 off the b_i; returns (failing index or None, λ's)."""
    m = len(b_i) - 1
    c1 = r.coefficient("t1", 1).constant_value()
    c2 = r.coefficient("t2", 1).constant_value()
    lambdas = [Fraction(0)] * (m + 1)
    for i in range(m, -1, -1):
        known = [Polynomial.constant(v, LEMMA_VARIABLES) for v in lambdas]
        partial = g_polynomial(i, m, known, r)
        remainder = b_i[i] - partial
        if i == 0:
            # any linear form: λ_0·r plus μ_0 times the independent form
            if not _is_linear_form(remainder):
                return 0, tuple(lambdas)
            coeff1 = remainder.coefficient("t1", 1).substitute({"t2": 0})
            coeff2 = remainder.coefficient("t2", 1).substitute({"t1": 0})
            lambdas[0] = (coeff1.constant_value() / c1) if c1 else coeff2.constant_value() / c2
            continue
        if c1:
            lam = remainder.coefficient("t1", 1).substitute({"t2": 0}).constant_value() / c1
        else:
            lam = remainder.coefficient("t2", 1).substitute({"t1": 0}).constant_value() / c2
        if remainder != r * lam:
            return i, tuple(lambdas)
        lambdas[i] = lam
    return None, tuple(lambdas)


def action_lemma_classify(
    a: Polynomial,
    b: Polynomial,
    c: Polynomial,
    b_i: Sequence[Polynomial],
) -> LemmaVerdict:
    if not b_i:
        raise UsageError("need at least b_0")
    lifted = [_lift(p) for p in b_i]
    a_l, b_l, c_l = _lift(a), _lift(b), _lift(c)
    axioms = verify_action_axioms(_as_family(assemble_lemma_map(a, b, c, b_i), len(b_i) - 1))

    def verdict(ok: bool, condition: Optional[int], message: str, lambdas=()) -> LemmaVerdict:
        result = LemmaVerdict(ok, condition, message, tuple(lambdas), axioms)
        if not result.agrees_with_axioms:
            logger.error(f"lemma verdict {ok} disagrees with the axiom check")
        return result

    if a_l != 1 or b_l != 1:
        return verdict(False, 1, "a and b must both be the constant 1")
    if not (c_l.is_zero or _is_linear_form(c_l)):
        return verdict(False, 2, f"c = {c_l} is not of the form c1·t1 + c2·t2")
    if c_l.is_zero:
        for i, p in enumerate(lifted):
            if not (p.is_zero or _is_linear_form(p)):
                return verdict(False, 3, f"c = 0 but b_{i} = {p} is not linear in (t1, t2)")
        return verdict(True, None, "action (c = 0, all b_i linear)")
    failing, lambdas = _solve_lambdas(c_l, lifted)
    if failing is not None:
        return verdict(False, 4, f"b_{failing} does not match g_{failing}(c1·t1 + c2·t2)", lambdas)
    return verdict(True, None, "action (b_i = g_i(c1·t1 + c2·t2))", lambdas)


def _as_family(phi: PolyMap, m: int) -> ActionFamily:
    zero = Fraction(0)
    return ActionFamily(
        kind=FamilyKind.LEMMA,
        m=m,
        lambdas=(zero,) * (m + 1),
        c1=zero, c2=zero, cbar1=zero, cbar2=zero, mu=zero,
        map=phi,
    )
