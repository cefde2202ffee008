"""
Report models for g2a-surfaces

Every record printed by the CLI with ``--json`` is one of these models.
Rationals are carried as "a/b" strings; field order is output order.
"""
from typing import Dict, List, Optional

from pydantic import BaseModel, Field


# =============================================================================
# Building blocks
# =============================================================================

class ErrorInfo(BaseModel):
    """A failed stage, as printed in reports."""
    tag: str = Field(..., description="Stable error tag, e.g. 'NotNormalForm'")
    message: str = Field(..., description="Human-readable message")
    index: Optional[int] = Field(default=None, description="Offending index, when there is one")


class NormalFormFailureModel(BaseModel):
    condition: str = Field(..., description="N0b, N1b, N1c or N1d")
    message: str
    beta: Optional[str] = Field(default=None, description="Witness β ∈ 𝓔_ω (N1d)")
    index: Optional[int] = Field(default=None, description="Witness index i ∈ Î_β (N1d)")


class NewtonPairModel(BaseModel):
    q: int = Field(..., description="q′_j")
    p: int = Field(..., description="p_j")


class SchematicModel(BaseModel):
    spine_deltas: List[int] = Field(..., description="Δ of the spine chains |q′_1| … |q′_{l+1}|")
    branch_deltas: List[int] = Field(..., description="Δ of the branch chains p_1 … p_l")
    extra_chain: Optional[int] = Field(default=None, description="Δ = p_{l+1} of the disjoint chain")


class ModuliModel(BaseModel):
    kind: str = Field(..., description="Point, TwoPoints or LineModRoots")
    m: int = Field(..., description="m_ω")
    root_order: Optional[int] = Field(default=None, description="d")
    exponent: Optional[int] = Field(default=None, description="ω̄_0")
    representatives: List[str] = Field(default_factory=list)


class AutomorphismModel(BaseModel):
    case: str
    f_degree_bound: Optional[int] = None
    f_weighted_degree: Optional[int] = None
    c_allowed: bool = False
    a_constraint: str
    a_root_order: Optional[int] = None
    summary: str


class VertexModel(BaseModel):
    label: str
    weight: int


class CoefficientModel(BaseModel):
    t1: int
    t2: int
    y: int
    coefficient: str


class ClaimRowModel(BaseModel):
    j: int
    k: int
    index: int = Field(..., description="M_j + k")
    value: str = Field(..., description="p̃/q̃")
    parity: str
    terminal: bool
    irrelevant: bool
    checks: Dict[str, Optional[bool]] = Field(default_factory=dict, description="None when skipped")


class LocatorModel(BaseModel):
    locator: str
    m_E: int


# =============================================================================
# Command records
# =============================================================================

class ValidationReport(BaseModel):
    """Output of ``validate``."""
    input: str = Field(..., description="The text as given")
    key_sequence: Optional[List[int]] = None
    valid: bool
    error: Optional[ErrorInfo] = None
    primitive: Optional[bool] = None
    algebraic: Optional[bool] = None
    algebraic_witness: Optional[int] = Field(default=None, description="First k with β_{k,0} < 0")
    normal_form: Optional[bool] = None
    normal_form_failures: List[NormalFormFailureModel] = Field(default_factory=list)
    beta_expansion: List[List[int]] = Field(default_factory=list, description="Rows (β_{k,0}, …, β_{k,k−1})")
    essential_subsequence: List[int] = Field(default_factory=list)


class ClassificationRecord(BaseModel):
    """Both classification routes plus the del Pezzo verdict."""
    key_sequence: List[int]
    singularity_class: str = Field(..., description="Kawamata class of the resolution schematic")
    explicit_class: str = Field(..., description="Kawamata class of the realised weighted graph")
    matched_row: Optional[str] = Field(default=None, description="Table row id, None on NoMatch")
    template: Optional[str] = None
    parameters: Dict[str, int] = Field(default_factory=dict)
    table_class: str
    routes_agree: bool
    g2a: bool
    table_g2a: Optional[bool] = Field(default=None, description="𝔾²ₐ column of the matched row")
    del_pezzo: bool
    singular_del_pezzo: bool
    ade_types: List[str] = Field(default_factory=list)


class SurfaceReport(BaseModel):
    """Output of ``analyze``: every invariant of X̄_ω."""
    key_sequence: List[int]
    valid: bool = True
    primitive: bool
    algebraic: bool
    normal_form: bool
    k_bar_x: Optional[int] = None
    m_omega: Optional[int] = None
    weights: List[int] = Field(default_factory=list, description="(1, ω_0, …, ω_{n+1})")
    g2a_exists: Optional[bool] = None
    moduli: Optional[ModuliModel] = None
    automorphisms: Optional[AutomorphismModel] = None
    newton_pairs: List[NewtonPairModel] = Field(default_factory=list)
    schematic: Optional[SchematicModel] = None
    line_at_infinity_contracted: Optional[bool] = None
    classification: Optional[ClassificationRecord] = None
    equations: List[str] = Field(default_factory=list, description="G_1 … G_n at θ = (1, …, 1)")
    failed_stage: Optional[ErrorInfo] = None
    notes: List[str] = Field(default_factory=list)


class ActionRecord(BaseModel):
    """Output of ``action``."""
    key_sequence: List[int]
    m: int
    lambda_value: str = Field(..., description="Rational or the symbol name")
    action: str
    coefficients: List[CoefficientModel] = Field(default_factory=list)


class VerificationRecord(BaseModel):
    """One verified action family."""
    label: str
    m: int
    holds: bool
    identity_residual: str
    composition_residual: str
    lemma_agrees: Optional[bool] = None


class ResolutionRecord(BaseModel):
    """Output of ``resolve``."""
    source: str = Field(..., description="Key sequence or monomial p/q")
    newton_pairs: List[NewtonPairModel] = Field(default_factory=list)
    schematic: Optional[SchematicModel] = None
    singularity_class: Optional[str] = None
    continued_fraction: List[int] = Field(default_factory=list)
    vertices: List[VertexModel] = Field(default_factory=list)
    edges: List[List[str]] = Field(default_factory=list)
    exceptional_determinant: Optional[int] = None
    locators: List[LocatorModel] = Field(default_factory=list)
    claims: List[ClaimRowModel] = Field(default_factory=list)
    claims_hold: Optional[bool] = None


class EnumerationRecord(BaseModel):
    """One streamed line of ``enumerate``."""
    key_sequence: List[int]
    k_bar_x: int
    m_omega: int
    g2a: bool
    singularity_class: str
    matched_row: Optional[str] = None
    del_pezzo: bool


class EnumerationSummary(BaseModel):
    max_omega0: int
    max_len: int
    max_entry: int
    filters: List[str] = Field(default_factory=list)
    scanned: int = Field(..., description="Surface sequences examined")
    emitted: int
    counts: Dict[str, int] = Field(default_factory=dict)


class ThetaEquivalenceRecord(BaseModel):
    key_sequence: List[int]
    theta: List[str]
    theta_prime: List[str]
    equivalent: bool
    matrix: List[List[int]] = Field(..., description="Rows (−β_{i,0}) and (μ_i)")
    kernel_basis: List[List[int]] = Field(default_factory=list)
    ratios: List[str] = Field(default_factory=list, description="θ′_i/θ_i")
    failed_relation: List[int] = Field(default_factory=list)
