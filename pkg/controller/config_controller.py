"""
Configuration commands:
- config show [NAME]          - print every config, or one
- config set NAME KEY=VALUE…  - validate, save and print the updated config
"""

import json
from argparse import Namespace, _SubParsersAction
from logging import getLogger
from typing import Any, Dict, List

from controller.context import CommandContext
from service.exceptions import ParseError

logger = getLogger(__name__)


def register(subparsers: _SubParsersAction) -> None:
    parser = subparsers.add_parser("config", help="inspect and update the JSON configs")
    actions = parser.add_subparsers(dest="config_action", required=True)

    show = actions.add_parser("show", help="print configs with their validation status")
    show.add_argument("name", nargs="?", default=None)
    show.set_defaults(handler=cmd_config_show)

    update = actions.add_parser("set", help="update fields of one config")
    update.add_argument("name")
    update.add_argument("assignments", nargs="+", metavar="KEY=VALUE")
    update.set_defaults(handler=cmd_config_set)


def parse_assignments(config_class, assignments: List[str]) -> Dict[str, Any]:
    updates = {}
    for item in assignments:
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise ParseError(f"expected KEY=VALUE, got {item!r}")
        key = key.strip()
        updates[key] = config_class.parse_value(key, value.strip())
    return updates


def _config_text(entry: Dict[str, Any]) -> str:
    lines = [f"[{entry['name']}] {entry['display_name']} ({entry['category']}): {entry['description']}"]
    for key, value in entry["values"].items():
        lines.append(f"  {key} = {value}")
    for error in entry.get("errors", []):
        lines.append(f"  ! {error}")
    return "\n".join(lines)


def _print(entries: List[Dict[str, Any]], ctx: CommandContext) -> None:
    if ctx.json_output:
        indent = ctx.output.json_indent or None
        print(json.dumps(entries, ensure_ascii=False, indent=indent))
    else:
        print("\n".join(_config_text(entry) for entry in entries))


def cmd_config_show(args: Namespace, ctx: CommandContext) -> int:
    manager = ctx.config_manager
    entries = manager.get_all_configs()
    if args.name is not None:
        manager.get_config(args.name)  # UsageError for unknown names
        entries = [e for e in entries if e["name"] == args.name]
    _print(entries, ctx)
    return 0


def cmd_config_set(args: Namespace, ctx: CommandContext) -> int:
    manager = ctx.config_manager
    config_class = type(manager.get_config(args.name))
    updated = manager.update_config(args.name, parse_assignments(config_class, args.assignments))
    logger.info(f"Updated config {args.name}")
    _print([{
        "name": args.name,
        "display_name": config_class.get_display_name(),
        "description": config_class.get_description(),
        "category": config_class.get_category(),
        "values": updated.to_dict(),
        "errors": updated.validate(),
    }], ctx)
    return 0
