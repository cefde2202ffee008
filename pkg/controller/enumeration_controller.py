"""
enumerate: stream records for every surface key sequence within bounds.
"""

from argparse import Namespace, _SubParsersAction
from logging import getLogger
from typing import Optional

from controller.context import CommandContext
from service.enumeration import EnumerationRequest, Enumerator, check_bounds, parse_filters
from service.logging import RunLogger, new_run_id
from service.reports import EnumerationRecord, EnumerationSummary

logger = getLogger(__name__)


def register(subparsers: _SubParsersAction) -> None:
    parser = subparsers.add_parser("enumerate", help="sweep surface key sequences within bounds")
    parser.add_argument("--max-omega0", type=int, required=True)
    parser.add_argument("--max-len", type=int, default=None, help="default from the enumeration config")
    parser.add_argument("--max-entry", type=int, default=None, help="default ω_0² per ω_0")
    parser.add_argument(
        "--filter", dest="filters", action="append", default=[],
        choices=["g2a", "del-pezzo", "lt", "lc"], help="repeatable; records must pass every filter",
    )
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--log-dir", default=None, help="write a run log there")
    parser.set_defaults(handler=cmd_enumerate)


def record_text(record: EnumerationRecord) -> str:
    omegas = "(" + ",".join(str(w) for w in record.key_sequence) + ")"
    flags = []
    if record.g2a:
        flags.append("g2a")
    if record.del_pezzo:
        flags.append("del-pezzo")
    row = record.matched_row or "-"
    return (
        f"{omegas}  k_X̄ = {record.k_bar_x}  m_ω = {record.m_omega}  "
        f"{record.singularity_class}  {row}  {' '.join(flags)}".rstrip()
    )


def summary_text(summary: EnumerationSummary) -> str:
    counts = ", ".join(f"{k}: {v}" for k, v in summary.counts.items())
    return f"{summary.emitted} of {summary.scanned} sequence(s) emitted ({counts})"


def _workers(args: Namespace, ctx: CommandContext) -> int:
    if args.workers is not None:
        return args.workers
    if ctx.settings.workers is not None:
        return ctx.settings.workers
    return ctx.enumeration.workers


def cmd_enumerate(args: Namespace, ctx: CommandContext) -> int:
    config = ctx.enumeration
    request = check_bounds(
        EnumerationRequest(
            max_omega0=args.max_omega0,
            max_len=args.max_len if args.max_len is not None else config.default_max_len,
            max_entry=args.max_entry,
            filters=parse_filters(args.filters),
            workers=_workers(args, ctx),
        ),
        config,
    )

    log_dir = args.log_dir or ctx.settings.log_dir
    run_logger: Optional[RunLogger] = None
    if log_dir:
        run_logger = RunLogger(
            new_run_id(),
            log_dir,
            parameters={
                "max_omega0": request.max_omega0,
                "max_len": request.max_len,
                "max_entry": request.max_entry,
                "filters": [f.value for f in request.filters],
                "workers": request.workers,
            },
        )
        logger.info(f"Run log: {run_logger.log_file}")

    enumerator = Enumerator(request, run_logger)
    try:
        for record in enumerator:
            print(ctx.dump(record, compact=True) if ctx.json_output else record_text(record))
    finally:
        if run_logger:
            run_logger.close()

    summary = enumerator.summary
    print(ctx.dump(summary, compact=True) if ctx.json_output else summary_text(summary))
    return 0
