import pytest

from service.actions import tau_lambda, verify_action_axioms
from service.exceptions import ParseError
from service.reports import SurfaceReport, ValidationReport
from service.reports.builders import (
    action_record,
    monomial_record,
    resolution_record,
    surface_report,
    validation_report,
    verification_record,
)
from service.resolution import continued_fraction, fractional_claim_check, monomial_resolution_graph
from tests.conftest import ks


def test_validation_report_of_a_surface():
    report = validation_report("3,2,5")
    assert report.valid
    assert report.key_sequence == [3, 2, 5]
    assert report.primitive and report.algebraic and report.normal_form
    assert report.algebraic_witness is None
    assert report.normal_form_failures == []
    assert report.essential_subsequence == [3, 2, 5]
    assert len(report.beta_expansion) == 1
    assert ValidationReport.model_validate_json(report.model_dump_json()) == report


def test_validation_report_of_an_invalid_sequence():
    report = validation_report("2,3,7")
    assert not report.valid
    assert report.error.tag == "SmallerPropertyViolated"
    assert report.error.index == 1
    assert report.primitive is None


def test_validation_report_of_a_non_normal_sequence():
    report = validation_report("4,6,11,1")
    assert report.valid
    assert not report.normal_form
    assert report.normal_form_failures


def test_validation_report_needs_integers():
    with pytest.raises(ParseError):
        validation_report("3,x,5")


def test_surface_report():
    report = surface_report(ks(3, 2, 5))
    assert report.failed_stage is None
    assert report.weights == [1, 3, 2, 5]
    assert report.g2a_exists
    assert report.moduli.representatives
    assert report.automorphisms.case == "General"
    assert report.line_at_infinity_contracted is False
    assert report.classification.routes_agree
    assert SurfaceReport.model_validate_json(report.model_dump_json()) == report


def test_surface_report_of_the_plane():
    report = surface_report(ks(1, 1))
    assert report.moduli is None
    assert report.notes
    assert report.automorphisms.case == "P2"


def test_resolution_records():
    record = resolution_record(ks(3, 2, 5))
    assert [(p.q, p.p) for p in record.newton_pairs] == [(2, 3), (-1, 1)]
    assert [loc.m_E for loc in record.locators] == [1, 2, 1, 1]

    claims = fractional_claim_check(5, 3)
    monomial = monomial_record(5, 3, monomial_resolution_graph(5, 3), claims)
    assert monomial.source == "5/3"
    assert monomial.continued_fraction == list(continued_fraction(5, 3).terms)
    assert monomial.exceptional_determinant == 1
    assert monomial.claims_hold
    assert len(monomial.claims) == len(claims.rows)


def test_action_and_verification_records():
    family = tau_lambda(1)
    record = action_record(ks(3, 2, 5), family, "λ")
    assert record.m == 1
    assert record.action == "(x + λ(1/2·t1^2 + t1·y) + t2, y + t1)"
    assert len(record.coefficients) == 3

    check = verification_record("τ_λ", family, verify_action_axioms(family), lemma_agrees=None)
    assert check.holds
    assert check.identity_residual == "(0, 0)"
