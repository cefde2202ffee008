"""
𝔾²ₐ-structures: action families, axiom verification, the recognition lemma
and moduli.
"""
from service.actions.families import (
    ActionFamily,
    FamilyKind,
    Param,
    action_coefficients,
    action_variables,
    chain_rule_residual,
    display_names,
    g_polynomial,
    general_action,
    inject_fault,
    param_text,
    perturbed_family,
    render_action,
    tau_lambda,
)
from service.actions.lemma import (
    LEMMA_VARIABLES,
    LemmaVerdict,
    action_lemma_classify,
    assemble_lemma_map,
)
from service.actions.moduli import (
    ModuliDescription,
    ModuliKind,
    g2a_exists,
    moduli_description,
    moduli_notes,
    require_g2a,
    sign_flip_allowed,
    tau_equivalent,
    tau_for,
    tau_orbit,
)
from service.actions.verification import AxiomCheck, verify_action_axioms

__all__ = [
    'ActionFamily',
    'FamilyKind',
    'Param',
    'action_coefficients',
    'action_variables',
    'chain_rule_residual',
    'display_names',
    'g_polynomial',
    'general_action',
    'inject_fault',
    'param_text',
    'perturbed_family',
    'render_action',
    'tau_lambda',
    'LEMMA_VARIABLES',
    'LemmaVerdict',
    'action_lemma_classify',
    'assemble_lemma_map',
    'ModuliDescription',
    'ModuliKind',
    'g2a_exists',
    'moduli_description',
    'moduli_notes',
    'require_g2a',
    'sign_flip_allowed',
    'tau_equivalent',
    'tau_for',
    'tau_orbit',
    'AxiomCheck',
    'verify_action_axioms',
]
