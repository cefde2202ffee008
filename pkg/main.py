"""
g2a-surfaces command line.

    python main.py validate 3,2,5
    python main.py analyze 3,2,5 --json
    python main.py enumerate --max-omega0 6 --max-len 3 --filter del-pezzo

Exit codes: 0 success, 1 invalid input or failed precondition, 2 internal
invariant violation.
"""
import sys
from argparse import ArgumentParser
from logging import basicConfig, getLevelName, getLogger
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

from controller import action_controller, config_controller, enumeration_controller
from controller import resolution_controller, surface_controller
from controller.context import CommandContext
from service.config import get_runtime_settings, init_config_manager
from service.exceptions import CompactificationError, UsageError

logger = getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class CommandParser(ArgumentParser):
    """Reports usage errors as UsageError (exit 1) instead of exiting with 2."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> ArgumentParser:
    parser = CommandParser(prog="g2a", description="Normal primitive compactifications of ℂ² and their 𝔾²ₐ-structures")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR (default from G2A_LOG_LEVEL)")
    parser.add_argument("--config-dir", default=None, help="directory of the JSON configs (default in memory)")

    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CommandParser)
    surface_controller.register(subparsers)
    action_controller.register(subparsers)
    resolution_controller.register(subparsers)
    enumeration_controller.register(subparsers)
    config_controller.register(subparsers)
    return parser


def load_environment() -> None:
    env_path = Path(__file__).parent / ".env"
    if env_path.exists():
        load_dotenv(env_path)


def configure_logging(level_name: str) -> None:
    level = getLevelName(level_name.upper())
    if not isinstance(level, int):
        raise UsageError(f"unknown log level {level_name!r}")
    # logs go to stderr; stdout carries reports only
    basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    getLogger().setLevel(level)


def main(argv: Optional[List[str]] = None) -> int:
    load_environment()
    try:
        args = build_parser().parse_args(argv)
        settings = get_runtime_settings()
        configure_logging(args.log_level or settings.log_level)

        config_dir = args.config_dir or settings.config_dir
        manager = init_config_manager(Path(config_dir) if config_dir else None)

        ctx = CommandContext(json_output=args.json, config_manager=manager, settings=settings)
        logger.debug(f"Running {args.command}")
        return args.handler(args, ctx)
    except CompactificationError as e:
        print(f"error[{e.tag}]: {e.message}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logger.exception("Unexpected failure")
        print(f"error[internal]: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
