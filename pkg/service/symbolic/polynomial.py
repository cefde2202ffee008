"""
Sparse multivariate polynomials over ℚ.

Polynomials live over an explicit ``VariableSet`` (ordered names plus an
exponent cap). Arithmetic is delegated to a sympy ``PolyRing`` over ``QQ``
with graded-lex order; the wrapper keeps values immutable and enforces
shared variable sets and the exponent cap.

Public API
~~~~~~~~~~
* ``VariableSet(names, exponent_cap=DEFAULT_EXPONENT_CAP)``
* ``Polynomial(variables, terms)`` / ``Polynomial.variable`` / ``Polynomial.constant``
* ``poly_arith(a, b, op)``, ``substitute(p, bindings)``, ``binomial(n, k)``
* ``PolyMap(x, y)``: the image pair of an action or automorphism
* ``render_polynomial(p)``: deterministic graded-lex text form

Usage::

    V = VariableSet(("x", "y"))
    x, y = Polynomial.variable("x", V), Polynomial.variable("y", V)
    assert (x + y) * (x - y) == x**2 - y**2
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from service.exceptions import ExponentOverflowError, UsageError
from service.symbolic.rational import RationalLike, format_rational, to_rational

DEFAULT_EXPONENT_CAP = 2 ** 20

Monomial = Tuple[int, ...]


@lru_cache(maxsize=256)
def _ring_for(names: Tuple[str, ...]) -> PolyRing:
    return PolyRing(names, QQ, grlex)


@dataclass(frozen=True)
class VariableSet:
    """Ordered variable names of one computation context."""

    names: Tuple[str, ...]
    exponent_cap: int = field(default=DEFAULT_EXPONENT_CAP, compare=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise UsageError("a variable set needs at least one variable")
        if len(set(names)) != len(names):
            raise UsageError(f"duplicate variable names: {names}")
        if self.exponent_cap < 1:
            raise UsageError("exponent cap must be positive")

    @property
    def ring(self) -> PolyRing:
        return _ring_for(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UsageError(f"unknown variable {name!r} (have {', '.join(self.names)})") from None

    def __contains__(self, name: str) -> bool:
        return name in self.names

    def __len__(self) -> int:
        return len(self.names)


Operand = Union["Polynomial", int, Fraction]


class Polynomial:
    """Immutable polynomial with exact rational coefficients."""

    __slots__ = ("_vars", "_element")

    def __init__(
        self,
        variables: VariableSet,
        terms: Optional[Mapping[Sequence[int], RationalLike]] = None,
    ):
        data: Dict[Monomial, object] = {}
        for exps, coeff in (terms or {}).items():
            monom = tuple(int(e) for e in exps)
            if len(monom) != len(variables):
                raise UsageError(
                    f"exponent vector {monom} does not match {len(variables)} variables"
                )
            if any(e < 0 for e in monom):
                raise UsageError(f"negative exponent in {monom}")
            if monom and max(monom) > variables.exponent_cap:
                raise ExponentOverflowError(
                    f"exponent {max(monom)} exceeds cap {variables.exponent_cap}"
                )
            value = to_rational(coeff)
            if value:
                total = data.get(monom, QQ(0)) + QQ(value.numerator, value.denominator)
                data[monom] = total
        self._vars = variables
        self._element = variables.ring.from_dict({k: v for k, v in data.items() if v})

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def _wrap(cls, variables: VariableSet, element: PolyElement) -> "Polynomial":
        obj = cls.__new__(cls)
        obj._vars = variables
        obj._element = element
        return obj

    @classmethod
    def zero(cls, variables: VariableSet) -> "Polynomial":
        return cls._wrap(variables, variables.ring.zero)

    @classmethod
    def constant(cls, value: RationalLike, variables: VariableSet) -> "Polynomial":
        value = to_rational(value)
        return cls._wrap(variables, variables.ring.ground_new(QQ(value.numerator, value.denominator)))

    @classmethod
    def variable(cls, name: str, variables: VariableSet) -> "Polynomial":
        return cls._wrap(variables, variables.ring.gens[variables.index(name)])

    @classmethod
    def monomial(
        cls, variables: VariableSet, powers: Mapping[str, int], coeff: RationalLike = 1
    ) -> "Polynomial":
        exps = [0] * len(variables)
        for name, power in powers.items():
            exps[variables.index(name)] += power
        return cls(variables, {tuple(exps): coeff})

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def variables(self) -> VariableSet:
        return self._vars

    @property
    def names(self) -> Tuple[str, ...]:
        return self._vars.names

    def terms(self) -> Dict[Monomial, Fraction]:
        """Term map in graded-lex descending order (fresh dict)."""
        return {monom: to_rational(coeff) for monom, coeff in self._element.terms()}

    def __len__(self) -> int:
        return len(self._element)

    @property
    def is_zero(self) -> bool:
        return not self._element

    @property
    def is_constant(self) -> bool:
        return all(not any(m) for m in self._element.keys())

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise UsageError(f"polynomial {self} is not constant")
        return to_rational(self._element.get(self._vars.ring.zero_monom, QQ(0)))

    def degree(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        i = self._vars.index(name)
        return max((m[i] for m in self._element.keys()), default=-1)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._element.keys()), default=-1)

    def max_exponent(self) -> int:
        return max((max(m) for m in self._element.keys() if m), default=0)

    def depends_on(self, name: str) -> bool:
        return self.degree(name) > 0

    def coefficient(self, name: str, power: int) -> "Polynomial":
        """Coefficient of ``name**power`` as a polynomial in the other variables."""
        i = self._vars.index(name)
        data = {}
        for monom, coeff in self._element.items():
            if monom[i] == power:
                reduced = list(monom)
                reduced[i] = 0
                data[tuple(reduced)] = coeff
        return Polynomial._wrap(self._vars, self._vars.ring.from_dict(data))

    def weighted_degrees(self, weights: Mapping[str, int]) -> set:
        """Set of weighted degrees of the terms (variables absent from ``weights`` weigh 0)."""
        w = [weights.get(name, 0) for name in self.names]
        return {sum(e * wi for e, wi in zip(monom, w)) for monom in self._element.keys()}

    def is_weighted_homogeneous(self, weights: Mapping[str, int], degree: Optional[int] = None) -> bool:
        degrees = self.weighted_degrees(weights)
        if not degrees:
            return True
        if len(degrees) != 1:
            return False
        return degree is None or degrees == {degree}

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _coerce(self, other: Operand) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            if other._vars.names != self._vars.names:
                raise UsageError(
                    f"mismatched variable sets: {self._vars.names} vs {other._vars.names}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(other, self._vars)
        return None

    def _checked(self, element: PolyElement) -> "Polynomial":
        result = Polynomial._wrap(self._vars, element)
        if result.max_exponent() > self._vars.exponent_cap:
            raise ExponentOverflowError(
                f"exponent {result.max_exponent()} exceeds cap {self._vars.exponent_cap}"
            )
        return result

    def __add__(self, other: Operand) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial._wrap(self._vars, self._element + other._element)

    __radd__ = __add__

    def __sub__(self, other: Operand) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial._wrap(self._vars, self._element - other._element)

    def __rsub__(self, other: Operand) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial._wrap(self._vars, other._element - self._element)

    def __neg__(self) -> "Polynomial":
        return Polynomial._wrap(self._vars, -self._element)

    def __mul__(self, other: Operand) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.max_exponent() + other.max_exponent() > self._vars.exponent_cap:
            raise ExponentOverflowError(
                f"product exponent would exceed cap {self._vars.exponent_cap}"
            )
        return self._checked(self._element * other._element)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise UsageError(f"exponent must be a non-negative integer, got {n!r}")
        if n and self.max_exponent() * n > self._vars.exponent_cap:
            raise ExponentOverflowError(
                f"power {n} would exceed exponent cap {self._vars.exponent_cap}"
            )
        return self._checked(self._element ** n)

    def scale(self, factor: RationalLike) -> "Polynomial":
        return self * to_rational(factor)

    # ------------------------------------------------------------------
    # Substitution and re-indexing
    # ------------------------------------------------------------------

    def substitute(self, bindings: Mapping[str, Operand]) -> "Polynomial":
        """Simultaneous substitution; unbound variables pass through."""
        if not bindings:
            return self
        ring = self._vars.ring
        bound: Dict[int, "Polynomial"] = {}
        for name, value in bindings.items():
            poly = self._coerce(value)
            if poly is None:
                raise UsageError(f"cannot substitute {value!r} for {name!r}")
            bound[self._vars.index(name)] = poly

        spread = [1] * len(self._vars)
        for i, poly in bound.items():
            spread[i] = poly.max_exponent()
        bound_exp = max(
            (sum(e * s for e, s in zip(monom, spread)) for monom in self._element.keys()),
            default=0,
        )
        if bound_exp > self._vars.exponent_cap:
            raise ExponentOverflowError(
                f"substitution would exceed exponent cap {self._vars.exponent_cap}"
            )

        replacements = [(ring.gens[i], poly._element) for i, poly in sorted(bound.items())]
        return self._checked(self._element.compose(replacements))

    def extend(self, variables: VariableSet) -> "Polynomial":
        """Re-express over a superset of the current variables."""
        positions = [variables.index(name) for name in self.names]
        data = {}
        for monom, coeff in self._element.items():
            exps = [0] * len(variables)
            for pos, e in zip(positions, monom):
                exps[pos] = e
            data[tuple(exps)] = coeff
        return Polynomial._wrap(variables, variables.ring.from_dict(data))

    # ------------------------------------------------------------------
    # Equality and rendering
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._vars.names == other._vars.names and self._element == other._element
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._vars.names, frozenset(self.terms().items())))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        return render_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({render_polynomial(self)!r}, vars={self.names})"


# ============================================================================
# Free functions
# ============================================================================

class ArithOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"


def poly_arith(a: Polynomial, b: Polynomial, op: Union[ArithOp, str]) -> Polynomial:
    """Exact ``a op b`` over a shared variable set."""
    op = ArithOp(op)
    if a.names != b.names:
        raise UsageError(f"mismatched variable sets: {a.names} vs {b.names}")
    if op is ArithOp.ADD:
        return a + b
    if op is ArithOp.SUB:
        return a - b
    return a * b


def substitute(p: Polynomial, bindings: Mapping[str, Operand]) -> Polynomial:
    return p.substitute(bindings)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient; 0 when k > n."""
    if n < 0 or k < 0:
        raise UsageError(f"binomial arguments must be non-negative, got ({n}, {k})")
    return comb(n, k)


def render_monomial(names: Sequence[str], monom: Monomial, display: Mapping[str, str]) -> str:
    factors = []
    for name, e in zip(names, monom):
        if e == 0:
            continue
        shown = display.get(name, name)
        factors.append(shown if e == 1 else f"{shown}^{e}")
    return "·".join(factors)


def render_terms(
    names: Sequence[str],
    terms: Iterable[Tuple[Monomial, Fraction]],
    display: Optional[Mapping[str, str]] = None,
) -> str:
    """Join terms as ``a + b - c``; coefficient ±1 is omitted on non-constant terms."""
    display = display or {}
    pieces = []
    for monom, coeff in terms:
        body = render_monomial(names, monom, display)
        magnitude = abs(coeff)
        if not body:
            text = format_rational(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{format_rational(magnitude)}·{body}"
        if not pieces:
            pieces.append(f"-{text}" if coeff < 0 else text)
        else:
            pieces.append(f"- {text}" if coeff < 0 else f"+ {text}")
    return " ".join(pieces) if pieces else "0"


def render_polynomial(p: Polynomial, display: Optional[Mapping[str, str]] = None) -> str:
    """Graded-lex text form, e.g. ``1/2·t1^2 + t1·y``."""
    return render_terms(p.names, p.terms().items(), display)


# ============================================================================
# Polynomial maps
# ============================================================================

@dataclass(frozen=True)
class PolyMap:
    """Ordered pair (image of x, image of y) over one variable set."""

    x: Polynomial
    y: Polynomial

    def __post_init__(self):
        if self.x.names != self.y.names:
            raise UsageError("both components of a PolyMap must share one variable set")

    @property
    def variables(self) -> VariableSet:
        return self.x.variables

    @property
    def components(self) -> Tuple[Polynomial, Polynomial]:
        return (self.x, self.y)

    def substitute(self, bindings: Mapping[str, Operand]) -> "PolyMap":
        return PolyMap(self.x.substitute(bindings), self.y.substitute(bindings))

    def __sub__(self, other: "PolyMap") -> "PolyMap":
        return PolyMap(self.x - other.x, self.y - other.y)

    @property
    def is_zero(self) -> bool:
        return self.x.is_zero and self.y.is_zero

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"
