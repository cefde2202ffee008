"""
Output Configuration.

Formatting of CLI reports.
"""

from dataclasses import dataclass
from typing import List

from service.config.base import BaseConfig, ConfigField, FieldType, register_config


@register_config
@dataclass
class OutputConfig(BaseConfig):
    """Formatting of CLI reports."""

    json_indent: int = 2
    lambda_symbol: str = "λ"
    dot_rankdir: str = "LR"

    @classmethod
    def get_config_name(cls) -> str:
        return "output"

    @classmethod
    def get_display_name(cls) -> str:
        return "Output"

    @classmethod
    def get_description(cls) -> str:
        return "JSON indentation, the symbol printed for a symbolic λ, and DOT layout direction."

    @classmethod
    def get_category(cls) -> str:
        return "output"

    @classmethod
    def get_fields_metadata(cls) -> List[ConfigField]:
        return [
            ConfigField(
                name="json_indent",
                field_type=FieldType.NUMBER,
                label="JSON Indent",
                default=2,
                min_value=0,
                max_value=8,
            ),
            ConfigField(
                name="lambda_symbol",
                field_type=FieldType.STRING,
                label="λ Symbol",
                description="Printed in place of a symbolic λ",
                default="λ",
                required=True,
            ),
            ConfigField(
                name="dot_rankdir",
                field_type=FieldType.SELECT,
                label="DOT Direction",
                default="LR",
                options=["LR", "TB"],
            ),
        ]
