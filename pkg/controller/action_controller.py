"""
Action commands: action, verify-action.
"""

from argparse import Namespace, _SubParsersAction
from fractions import Fraction
from logging import getLogger
from typing import List, Optional, Tuple

from controller.context import CommandContext
from service.actions import (
    ActionFamily,
    Param,
    action_lemma_classify,
    general_action,
    inject_fault,
    tau_for,
    tau_lambda,
    verify_action_axioms,
)
from service.exceptions import UsageError
from service.key_sequence import parse_key_sequence
from service.reports import VerificationRecord
from service.reports.builders import action_record, verification_record
from service.symbolic import DEFAULT_EXPONENT_CAP, Polynomial, format_rational, parse_rational

logger = getLogger(__name__)

SYMBOL = "lam"


def register(subparsers: _SubParsersAction) -> None:
    parser = subparsers.add_parser("action", help="render the 𝔾²ₐ-structure τ_λ")
    parser.add_argument("sequence")
    parser.add_argument(
        "--lambda", dest="lam", default=None,
        help="rational value of λ; omit (or pass the λ symbol) for symbolic λ",
    )
    parser.set_defaults(handler=cmd_action)

    parser = subparsers.add_parser("verify-action", help="check the action axioms symbolically")
    parser.add_argument("sequence", nargs="?", default=None)
    parser.add_argument("--max-m", type=int, default=None, help="check τ_λ and the general family for m ≤ M")
    parser.add_argument("--inject-fault", action="store_true", help="perturb g_1 by +t1² before checking")
    parser.set_defaults(handler=cmd_verify_action)


def parse_lambda(text: Optional[str], lambda_symbol: str) -> Tuple[Param, str]:
    """(parameter, display text); the symbol names a symbolic λ."""
    if text is None or text.strip() in (SYMBOL, "λ", lambda_symbol):
        return SYMBOL, lambda_symbol
    value = parse_rational(text)
    return value, format_rational(value)


def cmd_action(args: Namespace, ctx: CommandContext) -> int:
    ks = parse_key_sequence(args.sequence)
    symbol = ctx.output.lambda_symbol
    lam, shown = parse_lambda(args.lam, symbol)
    record = action_record(ks, tau_for(ks, lam, ctx.engine.exponent_cap), shown, symbol)
    ctx.emit(record, f"τ_{shown} on {ks} (m = {record.m}): {record.action}")
    return 0


# ============================================================================
# verify-action
# ============================================================================

def lemma_agrees(family: ActionFamily) -> Optional[bool]:
    """Run the recognition lemma on a family without symbolic parameters."""
    if family.is_symbolic():
        return None
    V = family.variables
    x, y = Polynomial.variable("x", V), Polynomial.variable("y", V)
    rest = family.map.x - x
    one = Polynomial.constant(1, V)
    b_i = [rest.coefficient("y", i) for i in range(rest.degree("y") + 1)]
    verdict = action_lemma_classify(one, one, family.map.y - y, b_i)
    return verdict.agrees_with_axioms


def _check(label: str, family: ActionFamily, fault: bool) -> VerificationRecord:
    if fault:
        family = inject_fault(family)
        label += " (fault injected)"
    check = verify_action_axioms(family)
    record = verification_record(label, family, check, lemma_agrees(family))
    logger.debug(f"{label}: {'holds' if record.holds else 'fails'}")
    return record


def verification_records(
    sequence: Optional[str],
    max_m: Optional[int],
    fault: bool,
    exponent_cap: int = DEFAULT_EXPONENT_CAP,
) -> List[VerificationRecord]:
    if sequence is None and max_m is None:
        raise UsageError("verify-action needs a sequence or --max-m")
    if max_m is not None and max_m < 0:
        raise UsageError(f"--max-m must be ≥ 0, got {max_m}")
    records = []
    if sequence is not None:
        ks = parse_key_sequence(sequence)
        records.append(_check(f"τ_λ on {ks}", tau_for(ks, SYMBOL, exponent_cap), fault))
        records.append(_check(f"τ_1 on {ks}", tau_for(ks, Fraction(1), exponent_cap), fault))
    if max_m is not None:
        for m in range(max_m + 1):
            records.append(_check(f"τ_λ, m = {m}", tau_lambda(m, SYMBOL, exponent_cap), fault))
            records.append(_check(f"general family, m = {m}", general_action(m, exponent_cap=exponent_cap), fault))
            records.append(_check(f"τ_1, m = {m}", tau_lambda(m, Fraction(1), exponent_cap), fault))
    return records


def cmd_verify_action(args: Namespace, ctx: CommandContext) -> int:
    records = verification_records(args.sequence, args.max_m, args.inject_fault, ctx.engine.exponent_cap)
    for record in records:
        if ctx.json_output:
            print(ctx.dump(record, compact=True))
            continue
        line = f"{record.label}: {'pass' if record.holds else 'FAIL'}"
        if not record.holds:
            line += f"\n  identity residual: {record.identity_residual}"
            line += f"\n  composition residual: {record.composition_residual}"
        if record.lemma_agrees is False:
            line += "\n  recognition lemma disagrees"
        print(line)
    return 0 if all(r.holds and r.lemma_agrees is not False for r in records) else 1
