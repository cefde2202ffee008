"""
Engine Configuration.

Limits of the exact arithmetic layer.
"""

from dataclasses import dataclass
from typing import List

from service.config.base import BaseConfig, ConfigField, FieldType, register_config
from service.symbolic.polynomial import DEFAULT_EXPONENT_CAP


@register_config
@dataclass
class EngineConfig(BaseConfig):
    """Limits of the exact arithmetic layer."""

    exponent_cap: int = DEFAULT_EXPONENT_CAP

    @classmethod
    def get_config_name(cls) -> str:
        return "engine"

    @classmethod
    def get_display_name(cls) -> str:
        return "Engine"

    @classmethod
    def get_description(cls) -> str:
        return "Exact arithmetic limits. Products whose exponents exceed the cap raise ExponentOverflowError."

    @classmethod
    def get_category(cls) -> str:
        return "engine"

    @classmethod
    def get_fields_metadata(cls) -> List[ConfigField]:
        return [
            ConfigField(
                name="exponent_cap",
                field_type=FieldType.NUMBER,
                label="Exponent Cap",
                description="Largest exponent any polynomial may carry",
                default=DEFAULT_EXPONENT_CAP,
                min_value=1,
                max_value=2 ** 30,
            ),
        ]
