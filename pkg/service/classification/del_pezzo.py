"""
Singular del Pezzo surfaces among the X̄_ω.
"""

from dataclasses import dataclass, field
from logging import getLogger
from typing import Dict, List, Optional, Tuple

from service.actions import ModuliDescription, g2a_exists, moduli_description, moduli_notes
from service.key_sequence import KeySequence, require_surface, validate

logger = getLogger(__name__)

# ADE type of the singular points for the four del Pezzo surfaces with 𝔾²ₐ-structures
ADE_TYPES: Dict[Tuple[int, ...], Tuple[str, ...]] = {
    (2, 1): ("A_1",),
    (3, 2): ("A_2", "A_1"),
    (3, 2, 5): ("A_4",),
    (3, 2, 4): ("D_5",),
}

_SINGULAR_DEL_PEZZO = ((2, 1), (3, 2), (3, 2, 5, 1)) + tuple((3, 2, 6 - r) for r in range(1, 6))


def singular_del_pezzo_list() -> List[KeySequence]:
    """Every ω for which X̄_ω is a singular del Pezzo surface, as tabulated."""
    return [validate(omegas) for omegas in _SINGULAR_DEL_PEZZO]


@dataclass(frozen=True)
class DelPezzoReport:
    is_del_pezzo_with_g2a: bool
    is_singular_del_pezzo: bool
    ade_types: Tuple[str, ...] = ()
    moduli_summary: Optional[ModuliDescription] = None
    notes: Tuple[str, ...] = field(default_factory=tuple)


def del_pezzo_report(ks: KeySequence) -> DelPezzoReport:
    require_surface(ks)
    singular = ks.omegas in _SINGULAR_DEL_PEZZO
    with_g2a = singular and g2a_exists(ks)
    moduli = moduli_description(ks) if g2a_exists(ks) and not ks.is_p2 else None
    ade = ADE_TYPES.get(ks.omegas, ()) if with_g2a else ()
    if with_g2a and not ade:
        logger.error(f"{ks} is del Pezzo with 𝔾²ₐ-structures but has no ADE entry")
    return DelPezzoReport(
        is_del_pezzo_with_g2a=with_g2a,
        is_singular_del_pezzo=singular,
        ade_types=ade,
        moduli_summary=moduli,
        notes=tuple(moduli_notes(ks)) if with_g2a else (),
    )
