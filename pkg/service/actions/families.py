"""
𝔾²ₐ-action families on ℂ² as exact polynomial maps.

An action is a ``PolyMap`` (image of x, image of y) in the coordinates
t1, t2 (group), x, y (plane) and any symbolic parameters. The primed group
coordinates t1p, t2p are always present so compositions can be formed
without re-indexing.

Public API
~~~~~~~~~~
* ``tau_lambda(m, lam)``: (x + λΣ 1/(m−i+1)·C(m, m−i)·t1^{m−i+1}·y^i + t2, y + t1)
  for a bare m; ``service.actions.moduli.tau_for(ks, lam)`` picks m = m_ω of a surface
* ``general_action(m, lambdas, c1, c2, cbar1, cbar2, mu)``
* ``g_polynomial(i, m, lambdas, r)`` and ``chain_rule_residual(i, m)``
* ``perturbed_family(fam, component, term)``, ``inject_fault(fam)``
* ``action_coefficients(fam)``, ``render_action(fam)``

Parameters are exact rationals or symbol names (``str``); a symbol becomes a
variable of the family. Builders take an ``exponent_cap`` for the variable set
they create (the engine config supplies it on the command line).
"""

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from service.exceptions import UsageError
from service.symbolic import (
    DEFAULT_EXPONENT_CAP,
    PolyMap,
    Polynomial,
    VariableSet,
    binomial,
    render_terms,
    to_rational,
)

Param = Union[int, Fraction, str]

GROUP = ("t1", "t2")
PRIMED = ("t1p", "t2p")
PLANE = ("x", "y")
BASE_NAMES = (*GROUP, *PLANE, *PRIMED)


class FamilyKind(str, Enum):
    TAU = "tau"
    GENERAL = "general"
    LEMMA = "lemma"
    PERTURBED = "perturbed"


def display_names(lambda_symbol: str = "λ") -> Dict[str, str]:
    """Pretty names for parameter variables (``lam3`` → ``λ3``, ``cb1`` → ``c̄1``)."""
    names = {"lam": lambda_symbol, "mu": "μ", "cb1": "c̄1", "cb2": "c̄2"}
    for k in range(64):
        names[f"lam{k}"] = f"{lambda_symbol}{k}"
    return names


def action_variables(params: Sequence[Param], exponent_cap: int = DEFAULT_EXPONENT_CAP) -> VariableSet:
    symbols = []
    for p in params:
        if isinstance(p, str):
            if p in BASE_NAMES:
                raise UsageError(f"parameter name {p!r} clashes with a coordinate")
            if p not in symbols:
                symbols.append(p)
    return VariableSet((*BASE_NAMES, *symbols), exponent_cap)


def param_value(p: Param, V: VariableSet) -> Polynomial:
    if isinstance(p, str):
        return Polynomial.variable(p, V)
    return Polynomial.constant(to_rational(p), V)


def param_text(p: Param) -> str:
    return p if isinstance(p, str) else str(to_rational(p))


@dataclass(frozen=True)
class ActionFamily:
    kind: FamilyKind
    m: int
    lambdas: Tuple[Param, ...]
    c1: Param
    c2: Param
    cbar1: Param
    cbar2: Param
    mu: Param
    map: PolyMap

    @property
    def variables(self) -> VariableSet:
        return self.map.variables

    @property
    def symbols(self) -> Tuple[str, ...]:
        return self.variables.names[len(BASE_NAMES):]

    def is_symbolic(self) -> bool:
        return bool(self.symbols)

    def nondegenerate(self) -> Optional[bool]:
        """μ ≠ 0 and (c1, c2) ≠ 0; None when a parameter is symbolic."""
        params = (self.mu, self.c1, self.c2)
        if any(isinstance(p, str) for p in params):
            return None
        return to_rational(self.mu) != 0 and (to_rational(self.c1), to_rational(self.c2)) != (0, 0)


# ============================================================================
# g_i and the composition identity
# ============================================================================

def g_polynomial(i: int, m: int, lambdas: Sequence[Polynomial], r: Polynomial) -> Polynomial:
    """g_i(r) = Σ_{k=i}^{m} λ_k/(k−i+1)·C(k, k−i)·r^{k−i+1}."""
    if not 0 <= i <= m or len(lambdas) != m + 1:
        raise UsageError(f"g_{i} needs 0 ≤ i ≤ m = {m} and {m + 1} coefficients")
    total = Polynomial.zero(r.variables)
    for k in range(i, m + 1):
        total = total + lambdas[k] * r ** (k - i + 1) * Fraction(binomial(k, k - i), k - i + 1)
    return total


def chain_rule_residual(i: int, m: int) -> Polynomial:
    """g_i(r+r′) − g_i(r′) − Σ_{j=i}^{m} C(j, j−i)·r′^{j−i}·g_j(r), symbolic in λ_0 … λ_m."""
    V = VariableSet(("r", "rp", *(f"lam{k}" for k in range(m + 1))))
    r, rp = Polynomial.variable("r", V), Polynomial.variable("rp", V)
    lambdas = [Polynomial.variable(f"lam{k}", V) for k in range(m + 1)]
    lhs = g_polynomial(i, m, lambdas, r + rp) - g_polynomial(i, m, lambdas, rp)
    rhs = Polynomial.zero(V)
    for j in range(i, m + 1):
        rhs = rhs + rp ** (j - i) * g_polynomial(j, m, lambdas, r) * binomial(j, j - i)
    return lhs - rhs


# ============================================================================
# Families
# ============================================================================

def tau_lambda(m: int, lam: Param = "lam", exponent_cap: int = DEFAULT_EXPONENT_CAP) -> ActionFamily:
    if m < 0:
        raise UsageError(f"m must be non-negative, got {m}")
    V = action_variables([lam], exponent_cap)
    t1, t2 = Polynomial.variable("t1", V), Polynomial.variable("t2", V)
    x, y = Polynomial.variable("x", V), Polynomial.variable("y", V)
    body = Polynomial.zero(V)
    for i in range(m + 1):
        body = body + t1 ** (m - i + 1) * y ** i * Fraction(binomial(m, m - i), m - i + 1)
    first = x + param_value(lam, V) * body + t2
    zero, one = Fraction(0), Fraction(1)
    return ActionFamily(
        kind=FamilyKind.TAU,
        m=m,
        lambdas=(*([zero] * m), lam),
        c1=one, c2=zero, cbar1=one, cbar2=zero, mu=Fraction(-1),
        map=PolyMap(first, y + t1),
    )


def general_action(
    m: int,
    lambdas: Optional[Sequence[Param]] = None,
    c1: Param = "c1",
    c2: Param = "c2",
    cbar1: Param = "cb1",
    cbar2: Param = "cb2",
    mu: Param = "mu",
    exponent_cap: int = DEFAULT_EXPONENT_CAP,
) -> ActionFamily:
    """(x + Σ g_i(c1t1 + c2t2)·y^i + μ(c̄2t1 − c̄1t2), y + c1t1 + c2t2)."""
    if m < 0:
        raise UsageError(f"m must be non-negative, got {m}")
    if lambdas is None:
        lambdas = tuple(f"lam{k}" for k in range(m + 1))
    lambdas = tuple(lambdas)
    if len(lambdas) != m + 1:
        raise UsageError(f"expected {m + 1} λ values, got {len(lambdas)}")
    V = action_variables([*lambdas, c1, c2, cbar1, cbar2, mu], exponent_cap)
    t1, t2 = Polynomial.variable("t1", V), Polynomial.variable("t2", V)
    x, y = Polynomial.variable("x", V), Polynomial.variable("y", V)
    lam_polys = [param_value(p, V) for p in lambdas]
    r = param_value(c1, V) * t1 + param_value(c2, V) * t2
    first = x
    for i in range(m + 1):
        first = first + g_polynomial(i, m, lam_polys, r) * y ** i
    first = first + param_value(mu, V) * (param_value(cbar2, V) * t1 - param_value(cbar1, V) * t2)
    return ActionFamily(
        kind=FamilyKind.GENERAL,
        m=m,
        lambdas=lambdas,
        c1=c1, c2=c2, cbar1=cbar1, cbar2=cbar2, mu=mu,
        map=PolyMap(first, y + r),
    )


def perturbed_family(fam: ActionFamily, component: str, term: Polynomial) -> ActionFamily:
    """Add ``term`` to the x- or y-component."""
    term = term.extend(fam.variables) if term.names != fam.variables.names else term
    if component == "x":
        new_map = PolyMap(fam.map.x + term, fam.map.y)
    elif component == "y":
        new_map = PolyMap(fam.map.x, fam.map.y + term)
    else:
        raise UsageError(f"component must be 'x' or 'y', got {component!r}")
    return replace(fam, kind=FamilyKind.PERTURBED, map=new_map)


def inject_fault(fam: ActionFamily) -> ActionFamily:
    """Perturb g_1 by +t1², i.e. add t1²·y to the x-component."""
    term = Polynomial.monomial(fam.variables, {"t1": 2, "y": 1})
    return perturbed_family(fam, "x", term)


# ============================================================================
# Inspection and rendering
# ============================================================================

def action_coefficients(
    fam: ActionFamily, lambda_symbol: str = "λ"
) -> List[Dict[str, Union[int, str]]]:
    """Coefficients of t1^a·t2^b·y^c in (x-component − x), as parameter polynomials."""
    V = fam.variables
    x = Polynomial.variable("x", V)
    ia, ib, ic, ix = V.index("t1"), V.index("t2"), V.index("y"), V.index("x")
    groups: Dict[Tuple[int, int, int], Dict[Tuple[int, ...], Fraction]] = {}
    for monom, coeff in (fam.map.x - x).terms().items():
        if monom[ix]:
            raise UsageError("x-component is not of the form x + f(t, y)")
        key = (monom[ia], monom[ib], monom[ic])
        param_monom = list(monom)
        for i in (ia, ib, ic):
            param_monom[i] = 0
        groups.setdefault(key, {})[tuple(param_monom)] = coeff
    display = display_names(lambda_symbol)
    rows = []
    for (a, b, c) in sorted(groups, reverse=True):
        rows.append({
            "t1": a,
            "t2": b,
            "y": c,
            "coefficient": render_terms(V.names, groups[(a, b, c)].items(), display),
        })
    return rows


def _plus(rendered: str) -> str:
    if rendered.startswith("-"):
        return f" - {rendered[1:]}"
    return f" + {rendered}"


def render_component(base: str, rest: Polynomial, display: Mapping[str, str]) -> str:
    if rest.is_zero:
        return base
    return base + _plus(render_terms(rest.names, rest.terms().items(), display))


def render_action(fam: ActionFamily, lambda_symbol: str = "λ") -> str:
    """``(x + …, y + …)``; a symbolic τ_λ keeps the λ factored out."""
    V = fam.variables
    display = display_names(lambda_symbol)
    x, y = Polynomial.variable("x", V), Polynomial.variable("y", V)
    first_rest = fam.map.x - x
    second = render_component("y", fam.map.y - y, display)
    lam = fam.lambdas[-1] if fam.lambdas else None
    if fam.kind is FamilyKind.TAU and isinstance(lam, str):
        t2 = Polynomial.variable("t2", V)
        body = first_rest.coefficient(lam, 1)
        if (first_rest - body * Polynomial.variable(lam, V)) == t2 and not body.is_zero:
            inner = render_terms(V.names, body.terms().items(), display)
            return f"(x + {display.get(lam, lam)}({inner}) + t2, {second})"
    return f"({render_component('x', first_rest, display)}, {second})"
