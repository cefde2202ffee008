"""
Symbolic check of the group-action axioms.

For φ(t; x, y) the two axioms are checked as exact polynomial identities:
    φ(0; x, y) = (x, y)
    φ(t; φ(t′; x, y)) = φ(t + t′; x, y)
"""

from dataclasses import dataclass
from logging import getLogger

from service.actions.families import ActionFamily
from service.symbolic import PolyMap, Polynomial

logger = getLogger(__name__)


@dataclass(frozen=True)
class AxiomCheck:
    identity_residual: PolyMap
    composition_residual: PolyMap

    @property
    def holds(self) -> bool:
        return self.identity_residual.is_zero and self.composition_residual.is_zero

    @property
    def residual(self) -> PolyMap:
        """First nonzero residual pair, or the (zero) composition residual."""
        if not self.identity_residual.is_zero:
            return self.identity_residual
        return self.composition_residual

    def __bool__(self) -> bool:
        return self.holds


def verify_action_axioms(fam: ActionFamily) -> AxiomCheck:
    V = fam.variables
    var = lambda name: Polynomial.variable(name, V)  # noqa: E731
    phi = fam.map

    identity = phi.substitute({"t1": 0, "t2": 0}) - PolyMap(var("x"), var("y"))

    inner = phi.substitute({"t1": var("t1p"), "t2": var("t2p")})
    composed = phi.substitute({"x": inner.x, "y": inner.y})
    shifted = phi.substitute({"t1": var("t1") + var("t1p"), "t2": var("t2") + var("t2p")})
    composition = composed - shifted

    check = AxiomCheck(identity_residual=identity, composition_residual=composition)
    if not check.holds:
        logger.debug(f"{fam.kind.value} family (m = {fam.m}) fails the action axioms")
    return check
