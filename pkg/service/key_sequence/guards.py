"""
Precondition guards shared by the surface, action and resolution layers.
"""

from service.exceptions import NonPrimitive, NotAlgebraic, NotNormalForm
from service.key_sequence.expansion import is_algebraic
from service.key_sequence.normal_form import normal_form_report
from service.key_sequence.sequence import KeySequence, is_primitive


def require_primitive(ks: KeySequence) -> KeySequence:
    if not is_primitive(ks):
        raise NonPrimitive(f"{ks} is not primitive (ω_{ks.n + 1} = {ks.omega(ks.n + 1)})")
    return ks


def require_algebraic(ks: KeySequence) -> KeySequence:
    result = is_algebraic(ks)
    if not result:
        raise NotAlgebraic(
            f"{ks} is not algebraic: β_{{{result.witness},0}} < 0",
            {"witness": result.witness},
        )
    return ks


def require_normal_form(ks: KeySequence) -> KeySequence:
    report = normal_form_report(ks)
    if not report.is_normal:
        tags = [f.condition.value for f in report.failures]
        raise NotNormalForm(f"{ks} is not in normal form (fails {', '.join(tags)})", {"failed": tags})
    return ks


def require_surface(ks: KeySequence) -> KeySequence:
    """Primitive, algebraic and in normal form, checked in that order."""
    return require_normal_form(require_algebraic(require_primitive(ks)))
