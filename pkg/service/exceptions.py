"""
Exception hierarchy for g2a-surfaces.

Every named failure of the engine is a ``CompactificationError`` carrying:
- ``tag``: short stable identifier printed by the CLI (``error[<tag>]: ...``)
- ``exit_code``: 1 for invalid input / violated preconditions,
  2 for internal invariant violations (bugs, never valid input)
"""

from typing import Any, Dict, Optional


class CompactificationError(Exception):
    """Base class for all engine errors."""

    tag: str = "error"
    exit_code: int = 1

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"tag": self.tag, "message": self.message, "details": self.details}


# ============================================================================
# Input errors (exit 1)
# ============================================================================

class InputError(CompactificationError):
    tag = "input"


class ParseError(InputError):
    tag = "parse"


class UsageError(InputError):
    """Operands live over different variable sets, or an API was misused."""
    tag = "usage"


class ExponentOverflowError(InputError):
    tag = "exponent-overflow"


# ============================================================================
# Key sequence validation (exit 1)
# ============================================================================

class KeySequenceError(InputError):
    """A defining property of key sequences fails; ``index`` points at it."""
    tag = "key-sequence"

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message, {"index": index} if index is not None else None)
        self.index = index


class TooShort(KeySequenceError):
    tag = "TooShort"


class NonPositiveOmega0(KeySequenceError):
    tag = "NonPositiveOmega0"


class GcdNotOne(KeySequenceError):
    tag = "GcdNotOne"


class SmallerPropertyViolated(KeySequenceError):
    tag = "SmallerPropertyViolated"


# ============================================================================
# Precondition failures (exit 1)
# ============================================================================

class PreconditionError(CompactificationError):
    tag = "precondition"


class NonPrimitive(PreconditionError):
    tag = "NonPrimitive"


class NotAlgebraic(PreconditionError):
    tag = "NotAlgebraic"


class NotNormalForm(PreconditionError):
    tag = "NotNormalForm"


class NoG2aStructure(PreconditionError):
    tag = "NoG2aStructure"


class IsP2(PreconditionError):
    tag = "IsP2"


class InvalidLocator(PreconditionError):
    tag = "InvalidLocator"


class NotCoprime(PreconditionError):
    tag = "NotCoprime"


class NotOrdered(PreconditionError):
    tag = "NotOrdered"


class LengthMismatch(PreconditionError):
    tag = "LengthMismatch"


class ZeroTheta(PreconditionError):
    tag = "ZeroTheta"


class BoundExceeded(PreconditionError):
    tag = "BoundExceeded"


class DiscreteModuli(PreconditionError):
    """τ_λ-equivalence asked where the moduli are finite (n = 0 or m_ω = 0)."""
    tag = "DiscreteModuli"


# ============================================================================
# Internal invariant violations (exit 2)
# ============================================================================

class InternalInvariantError(CompactificationError):
    tag = "internal"
    exit_code = 2


class ReconstructionError(InternalInvariantError):
    tag = "ReconstructionError"


class NonIntegerPair(InternalInvariantError):
    tag = "NonIntegerPair"


class UnimodularityError(InternalInvariantError):
    tag = "UnimodularityError"
