"""
Key sequences: validation, gcd towers, β-expansions, essential data and
the normal-form test.

Public API
~~~~~~~~~~
* ``validate(omegas)`` / ``parse_key_sequence(text)`` -> ``KeySequence``
* ``gcd_tower``, ``is_primitive``, ``beta_expansion``, ``is_algebraic``
* ``essential_data``, ``exponent_sequence``, ``essential_subsequence``
* ``normal_form_report`` -> ``NormalFormReport``
* ``iter_key_sequences(max_omega0, max_len, max_entry)``

Usage::

    ks = parse_key_sequence("3,2,5")
    assert is_algebraic(ks) and normal_form_report(ks).is_normal
"""
from service.key_sequence.essential import (
    EssentialData,
    essential_data,
    essential_subsequence,
    exponent_sequence,
)
from service.key_sequence.expansion import (
    AlgebraicityResult,
    BetaExpansion,
    BetaRow,
    beta_expansion,
    beta_row,
    is_algebraic,
    semigroup_member_bruteforce,
)
from service.key_sequence.guards import (
    require_algebraic,
    require_normal_form,
    require_primitive,
    require_surface,
)
from service.key_sequence.normal_form import (
    HatEntry,
    NormalCase,
    NormalCondition,
    NormalFormFailure,
    NormalFormReport,
    exponent_set,
    hat_entry,
    is_normal_form,
    normal_form_report,
    recheck_failure,
)
from service.key_sequence.sequence import (
    GcdTower,
    KeySequence,
    gcd_tower,
    is_primitive,
    iter_key_sequences,
    maybe_validate,
    parse_key_sequence,
    parse_omegas,
    validate,
)

__all__ = [
    'EssentialData',
    'essential_data',
    'essential_subsequence',
    'exponent_sequence',
    'AlgebraicityResult',
    'BetaExpansion',
    'BetaRow',
    'beta_expansion',
    'beta_row',
    'is_algebraic',
    'semigroup_member_bruteforce',
    'require_algebraic',
    'require_normal_form',
    'require_primitive',
    'require_surface',
    'HatEntry',
    'NormalCase',
    'NormalCondition',
    'NormalFormFailure',
    'NormalFormReport',
    'exponent_set',
    'hat_entry',
    'is_normal_form',
    'normal_form_report',
    'recheck_failure',
    'GcdTower',
    'KeySequence',
    'gcd_tower',
    'is_primitive',
    'iter_key_sequences',
    'maybe_validate',
    'parse_key_sequence',
    'parse_omegas',
    'validate',
]
