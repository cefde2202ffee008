"""
Builders turning engine results into report models.

Each builder runs the engine for one command and returns the pydantic
record printed by the CLI. Stage failures that a report can describe are
folded into the record; everything else propagates as a
``CompactificationError``.
"""
from logging import getLogger
from typing import List, Optional, Sequence

from service.actions import (
    ActionFamily,
    AxiomCheck,
    action_coefficients,
    g2a_exists,
    moduli_description,
    moduli_notes,
    render_action,
)
from service.classification import classify_record, kawamata_classify
from service.exceptions import CompactificationError, IsP2, KeySequenceError
from service.key_sequence import (
    KeySequence,
    beta_expansion,
    essential_subsequence,
    is_algebraic,
    is_primitive,
    normal_form_report,
    parse_omegas,
    require_surface,
    validate,
)
from service.reports.models import (
    ActionRecord,
    AutomorphismModel,
    ClaimRowModel,
    CoefficientModel,
    ErrorInfo,
    LocatorModel,
    ModuliModel,
    NewtonPairModel,
    NormalFormFailureModel,
    ResolutionRecord,
    SchematicModel,
    SurfaceReport,
    ThetaEquivalenceRecord,
    ValidationReport,
    VerificationRecord,
    VertexModel,
)
from service.resolution import (
    ClaimReport,
    DualGraphSchematic,
    NewtonPairs,
    WeightedGraph,
    continued_fraction,
    derivable_locators,
    dual_graph_schematic,
    exceptional_determinant,
    line_at_infinity_contracted,
    m_E_value,
    newton_pairs,
)
from service.surface import (
    SurfaceModel,
    ThetaEquivalence,
    aut_description,
    defining_equations,
    k_bar_x,
    m_omega,
    weights,
)
from service.symbolic import DEFAULT_EXPONENT_CAP, format_rational, render_polynomial

logger = getLogger(__name__)

P2_NOTE = "X̄ ≅ ℙ²: automorphism group PGL(3, ℂ); 𝔾²ₐ-structures on ℙ² are classified separately"


def error_info(exc: CompactificationError) -> ErrorInfo:
    return ErrorInfo(tag=exc.tag, message=exc.message, index=exc.details.get("index"))


# ============================================================================
# validate
# ============================================================================

def validation_report(text: str) -> ValidationReport:
    """Flags and witnesses for the text of a sequence; ``ParseError`` propagates."""
    omegas = parse_omegas(text)
    try:
        ks = validate(omegas)
    except KeySequenceError as exc:
        return ValidationReport(input=text, key_sequence=list(omegas), valid=False, error=error_info(exc))

    algebraic = is_algebraic(ks)
    report = ValidationReport(
        input=text,
        key_sequence=list(ks.omegas),
        valid=True,
        primitive=is_primitive(ks),
        algebraic=bool(algebraic),
        algebraic_witness=algebraic.witness,
        beta_expansion=[list(row.digits) for row in beta_expansion(ks).rows],
        essential_subsequence=list(essential_subsequence(ks).omegas),
    )
    normal = normal_form_report(ks)
    report.normal_form = normal.is_normal
    report.normal_form_failures = [
        NormalFormFailureModel(
            condition=failure.condition.value,
            message=failure.message,
            beta=format_rational(failure.beta) if failure.beta is not None else None,
            index=failure.index,
        )
        for failure in normal.failures
    ]
    return report


# ============================================================================
# resolution pieces
# ============================================================================

def newton_pair_models(pairs: NewtonPairs) -> List[NewtonPairModel]:
    return [NewtonPairModel(q=q, p=p) for q, p in pairs.pairs]


def schematic_model(schematic: DualGraphSchematic) -> SchematicModel:
    return SchematicModel(
        spine_deltas=list(schematic.spine_deltas),
        branch_deltas=list(schematic.branch_deltas),
        extra_chain=schematic.extra_chain,
    )


def claim_row_models(report: ClaimReport) -> List[ClaimRowModel]:
    return [
        ClaimRowModel(
            j=row.row.j,
            k=row.row.k,
            index=row.row.index,
            value=format_rational(row.row.value),
            parity=row.parity,
            terminal=row.terminal,
            irrelevant=row.irrelevant,
            checks=dict(row.checks),
        )
        for row in report.rows
    ]


def resolution_record(ks: KeySequence) -> ResolutionRecord:
    pairs = newton_pairs(ks)
    schematic = dual_graph_schematic(pairs)
    return ResolutionRecord(
        source=str(ks),
        newton_pairs=newton_pair_models(pairs),
        schematic=schematic_model(schematic),
        singularity_class=kawamata_classify(schematic).value,
        locators=[
            LocatorModel(locator=str(locator), m_E=m_E_value(ks, locator))
            for locator in derivable_locators(ks)
        ],
    )


def monomial_record(
    p: int, q: int, graph: WeightedGraph, claims: Optional[ClaimReport] = None
) -> ResolutionRecord:
    record = ResolutionRecord(
        source=f"{p}/{q}",
        continued_fraction=list(continued_fraction(p, q).terms),
        vertices=[VertexModel(label=v, weight=graph.weight(v)) for v in graph.vertices],
        edges=[[a, b] for a, b in graph.edges],
        exceptional_determinant=exceptional_determinant(p, q),
    )
    if claims is not None:
        record.claims = claim_row_models(claims)
        record.claims_hold = claims.holds
    return record


# ============================================================================
# analyze
# ============================================================================

def surface_report(ks: KeySequence, exponent_cap: int = DEFAULT_EXPONENT_CAP) -> SurfaceReport:
    """Everything known about X̄_ω; a failed precondition stops at its stage."""
    algebraic = bool(is_algebraic(ks))
    normal = normal_form_report(ks).is_normal
    report = SurfaceReport(
        key_sequence=list(ks.omegas),
        primitive=is_primitive(ks),
        algebraic=algebraic,
        normal_form=normal,
    )
    try:
        require_surface(ks)
    except CompactificationError as exc:
        report.failed_stage = error_info(exc)
        return report

    report.k_bar_x = k_bar_x(ks)
    report.m_omega = m_omega(ks)
    report.weights = list(weights(ks))
    report.g2a_exists = g2a_exists(ks)

    if report.g2a_exists:
        try:
            moduli = moduli_description(ks)
            report.moduli = ModuliModel(
                kind=moduli.kind.value,
                m=moduli.m,
                root_order=moduli.root_order,
                exponent=moduli.exponent,
                representatives=list(moduli.representatives),
            )
        except IsP2:
            report.notes.append(P2_NOTE)

    aut = aut_description(ks)
    report.automorphisms = AutomorphismModel(
        case=aut.case.value,
        f_degree_bound=aut.f_degree_bound,
        f_weighted_degree=aut.f_weighted_degree,
        c_allowed=aut.c_allowed,
        a_constraint=aut.a_constraint.value,
        a_root_order=aut.a_root_order,
        summary=aut.summary,
    )

    pairs = newton_pairs(ks)
    report.newton_pairs = newton_pair_models(pairs)
    report.schematic = schematic_model(dual_graph_schematic(pairs))
    if ks.n >= 1:
        report.line_at_infinity_contracted = line_at_infinity_contracted(pairs)

    report.classification = classify_record(ks)
    model = SurfaceModel(ks, tuple([1] * ks.n), exponent_cap)
    report.equations = [render_polynomial(g) for g in defining_equations(model)]
    report.notes.extend(moduli_notes(ks))
    return report


# ============================================================================
# action / verify-action
# ============================================================================

def action_record(ks: KeySequence, family: ActionFamily, lambda_text: str, lambda_symbol: str = "λ") -> ActionRecord:
    return ActionRecord(
        key_sequence=list(ks.omegas),
        m=family.m,
        lambda_value=lambda_text,
        action=render_action(family, lambda_symbol),
        coefficients=[CoefficientModel(**row) for row in action_coefficients(family, lambda_symbol)],
    )


def _residual_text(residual) -> str:
    return f"({render_polynomial(residual.x)}, {render_polynomial(residual.y)})"


def verification_record(
    label: str, family: ActionFamily, check: AxiomCheck, lemma_agrees: Optional[bool] = None
) -> VerificationRecord:
    return VerificationRecord(
        label=label,
        m=family.m,
        holds=check.holds,
        identity_residual=_residual_text(check.identity_residual),
        composition_residual=_residual_text(check.composition_residual),
        lemma_agrees=lemma_agrees,
    )


# ============================================================================
# theta-equiv
# ============================================================================

def theta_record(
    ks: KeySequence, theta: Sequence, theta_prime: Sequence, result: ThetaEquivalence
) -> ThetaEquivalenceRecord:
    return ThetaEquivalenceRecord(
        key_sequence=list(ks.omegas),
        theta=[format_rational(t) for t in theta],
        theta_prime=[format_rational(t) for t in theta_prime],
        equivalent=result.equivalent,
        matrix=[list(row) for row in result.matrix],
        kernel_basis=[list(v) for v in result.kernel_basis],
        ratios=[format_rational(r) for r in result.ratios],
        failed_relation=list(result.failed_relation),
    )
