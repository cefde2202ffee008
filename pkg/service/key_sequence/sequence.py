"""
Key sequences and their gcd towers.

A key sequence is an integer vector (ω_0, …, ω_{n+1}) with ω_0 ≥ 1, a gcd
tower e_k = gcd(|ω_0|, …, |ω_k|) ending in e_{n+1} = 1, and the smaller
property ω_{k+1} < α_kω_k for 1 ≤ k ≤ n, where α_k = e_{k−1}/e_k.

``KeySequence`` instances are validated on construction, so holding one
means the three defining properties hold.
"""

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterator, Optional, Sequence, Tuple

from service.utils.utils import parse_integer_list
from service.exceptions import (
    GcdNotOne,
    NonPositiveOmega0,
    SmallerPropertyViolated,
    TooShort,
)


@dataclass(frozen=True)
class GcdTower:
    """e_0 … e_{n+1} and α_1 … α_{n+1}."""

    e: Tuple[int, ...]
    alpha: Tuple[int, ...]


def _tower_of(omegas: Sequence[int]) -> GcdTower:
    e = []
    current = 0
    for omega in omegas:
        current = gcd(current, abs(omega))
        e.append(current)
    alpha = tuple(e[k - 1] // e[k] for k in range(1, len(e)))
    return GcdTower(e=tuple(e), alpha=alpha)


@dataclass(frozen=True)
class KeySequence:
    """A validated key sequence (ω_0, …, ω_{n+1})."""

    omegas: Tuple[int, ...]

    def __post_init__(self):
        omegas = tuple(int(w) for w in self.omegas)
        object.__setattr__(self, "omegas", omegas)
        _check(omegas)

    @property
    def n(self) -> int:
        return len(self.omegas) - 2

    def omega(self, k: int) -> int:
        return self.omegas[k]

    @cached_property
    def tower(self) -> GcdTower:
        return _tower_of(self.omegas)

    def e(self, k: int) -> int:
        return self.tower.e[k]

    def alpha(self, k: int) -> int:
        """α_k for 1 ≤ k ≤ n+1."""
        if not 1 <= k <= self.n + 1:
            raise IndexError(f"α_{k} is defined for 1 ≤ k ≤ {self.n + 1}")
        return self.tower.alpha[k - 1]

    @property
    def is_p2(self) -> bool:
        return self.omegas == (1, 1)

    def __len__(self) -> int:
        return len(self.omegas)

    def __iter__(self) -> Iterator[int]:
        return iter(self.omegas)

    def __str__(self) -> str:
        return "(" + ",".join(str(w) for w in self.omegas) + ")"


def _check(omegas: Tuple[int, ...]) -> None:
    if len(omegas) < 2:
        raise TooShort(f"a key sequence needs at least 2 entries, got {len(omegas)}")
    if omegas[0] < 1:
        raise NonPositiveOmega0(f"ω_0 must be ≥ 1, got {omegas[0]}", index=0)
    tower = _tower_of(omegas)
    if tower.e[-1] != 1:
        raise GcdNotOne(f"gcd of all entries is {tower.e[-1]}, expected 1", index=len(omegas) - 1)
    n = len(omegas) - 2
    for k in range(1, n + 1):
        bound = tower.alpha[k - 1] * omegas[k]
        if not omegas[k + 1] < bound:
            raise SmallerPropertyViolated(
                f"ω_{k + 1} = {omegas[k + 1]} is not < α_{k}ω_{k} = {bound}",
                index=k,
            )


def validate(omegas: Sequence[int]) -> KeySequence:
    """Return the KeySequence or raise the first violated property."""
    return KeySequence(tuple(omegas))


def gcd_tower(ks: KeySequence) -> GcdTower:
    return ks.tower


def is_primitive(ks: KeySequence) -> bool:
    return all(w > 0 for w in ks.omegas)


def iter_key_sequences(
    max_omega0: int,
    max_len: int,
    max_entry: int,
    min_entry: int = 1,
    min_omega0: int = 1,
    min_len: int = 2,
    max_omega1: Optional[int] = None,
) -> Iterator[KeySequence]:
    """All key sequences within bounds, in (length, ω_0, ω_1, …) order.

    Entries after ω_0 range over [min_entry, max_entry]; the smaller
    property prunes extensions as the sequence grows. ``max_omega1`` caps
    ω_1 alone (normal-form sweeps pass ω_0).
    """
    for length in range(max(2, min_len), max_len + 1):
        for omega0 in range(min_omega0, max_omega0 + 1):
            for omega1 in range(min_entry, max_entry + 1):
                if max_omega1 is not None and omega1 > max_omega1:
                    break
                yield from _extend(
                    (omega0, omega1), omega0, gcd(omega0, abs(omega1)), length, min_entry, max_entry
                )


def _extend(
    prefix: Tuple[int, ...], e_before: int, e_prev: int, length: int, low: int, high: int
) -> Iterator[KeySequence]:
    # e_before = e_{k-2}, e_prev = e_{k-1} for the entry ω_k being chosen
    k = len(prefix)
    if k == length:
        if e_prev == 1:
            yield KeySequence(prefix)
        return
    upper = high
    if k >= 2:
        upper = min(upper, (e_before // e_prev) * prefix[-1] - 1)
    for omega in range(low, upper + 1):
        yield from _extend(prefix + (omega,), e_prev, gcd(e_prev, abs(omega)), length, low, high)


def parse_omegas(text: str) -> Tuple[int, ...]:
    """Parse ``"3,2,5"`` (whitespace and Unicode minus tolerated)."""
    return parse_integer_list(text)


def parse_key_sequence(text: str) -> KeySequence:
    return validate(parse_omegas(text))


def maybe_validate(omegas: Sequence[int]) -> Optional[KeySequence]:
    """KeySequence, or None when any defining property fails."""
    try:
        return validate(omegas)
    except (TooShort, NonPositiveOmega0, GcdNotOne, SmallerPropertyViolated):
        return None
