"""
Surface commands: validate, analyze, classify, theta-equiv.
"""

from argparse import Namespace, _SubParsersAction
from logging import getLogger

from controller.context import CommandContext
from service.classification import classify_record
from service.key_sequence import parse_key_sequence
from service.render import render_surface_text
from service.reports import ClassificationRecord, ValidationReport
from service.reports.builders import surface_report, theta_record, validation_report
from service.surface import theta_equivalence
from service.utils.utils import parse_rational_list

logger = getLogger(__name__)


def register(subparsers: _SubParsersAction) -> None:
    parser = subparsers.add_parser("validate", help="check the key-sequence properties of a sequence")
    parser.add_argument("sequence", help='comma-separated integers, e.g. "3,2,5"')
    parser.set_defaults(handler=cmd_validate)

    parser = subparsers.add_parser("analyze", help="every invariant of X̄_ω")
    parser.add_argument("sequence")
    parser.set_defaults(handler=cmd_analyze)

    parser = subparsers.add_parser("classify", help="singularity class, table row and del Pezzo verdict")
    parser.add_argument("sequence")
    parser.set_defaults(handler=cmd_classify)

    parser = subparsers.add_parser("theta-equiv", help="decide whether θ and θ′ give isomorphic surfaces")
    parser.add_argument("sequence")
    parser.add_argument("theta", help='n rationals, e.g. "1,-2/3"')
    parser.add_argument("theta_prime")
    parser.set_defaults(handler=cmd_theta_equiv)


def _yes(flag) -> str:
    return "yes" if flag else "no"


# ============================================================================
# validate
# ============================================================================

def validation_text(report: ValidationReport) -> str:
    omegas = "(" + ",".join(str(w) for w in report.key_sequence or []) + ")"
    if not report.valid:
        where = f" at index {report.error.index}" if report.error.index is not None else ""
        return f"{omegas}: not a key sequence ({report.error.tag}{where}): {report.error.message}"
    lines = [
        f"{omegas}: valid key sequence",
        f"  primitive: {_yes(report.primitive)}",
        f"  algebraic: {_yes(report.algebraic)}"
        + (f" (β_{{{report.algebraic_witness},0}} < 0)" if report.algebraic_witness else ""),
        f"  normal form: {_yes(report.normal_form)}",
    ]
    for failure in report.normal_form_failures:
        lines.append(f"    {failure.condition}: {failure.message}")
    lines.append(f"  essential subsequence: ({','.join(str(w) for w in report.essential_subsequence)})")
    return "\n".join(lines)


def cmd_validate(args: Namespace, ctx: CommandContext) -> int:
    report = validation_report(args.sequence)
    ctx.emit(report, validation_text(report))
    return 0 if report.valid else 1


# ============================================================================
# analyze / classify
# ============================================================================

def cmd_analyze(args: Namespace, ctx: CommandContext) -> int:
    report = surface_report(parse_key_sequence(args.sequence), ctx.engine.exponent_cap)
    ctx.emit(report, render_surface_text(report))
    if report.failed_stage:
        logger.info(f"analysis stopped at {report.failed_stage.tag}")
        return 1
    return 0


def classification_text(record: ClassificationRecord) -> str:
    omegas = "(" + ",".join(str(w) for w in record.key_sequence) + ")"
    lines = [f"{omegas}: {record.singularity_class}"]
    if record.matched_row:
        params = ", ".join(f"{k} = {v}" for k, v in record.parameters.items())
        lines.append(f"  row {record.matched_row}: {record.template} ({params})")
    else:
        lines.append("  no table row")
    lines.append(f"  explicit graph: {record.explicit_class}, routes agree: {_yes(record.routes_agree)}")
    lines.append(f"  𝔾²ₐ-structures: {_yes(record.g2a)}")
    ade = f" [{', '.join(record.ade_types)}]" if record.ade_types else ""
    lines.append(f"  del Pezzo with 𝔾²ₐ: {_yes(record.del_pezzo)}{ade}")
    return "\n".join(lines)


def cmd_classify(args: Namespace, ctx: CommandContext) -> int:
    record = classify_record(parse_key_sequence(args.sequence))
    ctx.emit(record, classification_text(record))
    return 0


# ============================================================================
# theta-equiv
# ============================================================================

def cmd_theta_equiv(args: Namespace, ctx: CommandContext) -> int:
    ks = parse_key_sequence(args.sequence)
    theta = parse_rational_list(args.theta)
    theta_prime = parse_rational_list(args.theta_prime)
    record = theta_record(ks, theta, theta_prime, theta_equivalence(ks, theta, theta_prime))
    lines = [
        f"{ks}: θ = ({', '.join(record.theta)}) and θ′ = ({', '.join(record.theta_prime)}) "
        f"are {'equivalent' if record.equivalent else 'not equivalent'}",
        f"  exponent matrix: {record.matrix}",
        f"  kernel basis: {record.kernel_basis}",
    ]
    if record.failed_relation:
        lines.append(f"  failed relation: {record.failed_relation}")
    ctx.emit(record, "\n".join(lines))
    return 0
