"""
Enumeration Configuration.

Bounds and parallelism of the ``enumerate`` command.
"""

from dataclasses import dataclass
from typing import List

from service.config.base import BaseConfig, ConfigField, FieldType, register_config


@register_config
@dataclass
class EnumerationConfig(BaseConfig):
    """Bounds and parallelism of key-sequence enumeration."""

    max_omega0_guard: int = 200
    default_max_len: int = 3
    max_entry_guard: int = 10_000
    workers: int = 4

    @classmethod
    def get_config_name(cls) -> str:
        return "enumeration"

    @classmethod
    def get_display_name(cls) -> str:
        return "Enumeration"

    @classmethod
    def get_description(cls) -> str:
        return "Guards on enumeration bounds (exceeding them raises BoundExceeded) and the worker count."

    @classmethod
    def get_category(cls) -> str:
        return "engine"

    @classmethod
    def get_fields_metadata(cls) -> List[ConfigField]:
        return [
            ConfigField(
                name="max_omega0_guard",
                field_type=FieldType.NUMBER,
                label="Largest ω_0",
                description="Upper limit accepted for --max-omega0",
                default=200,
                min_value=1,
                group="bounds",
            ),
            ConfigField(
                name="default_max_len",
                field_type=FieldType.NUMBER,
                label="Default Length",
                description="Sequence length used when --max-len is not given",
                default=3,
                min_value=2,
                max_value=8,
                group="bounds",
            ),
            ConfigField(
                name="max_entry_guard",
                field_type=FieldType.NUMBER,
                label="Largest |ω_k|",
                description="Upper limit accepted for --max-entry",
                default=10_000,
                min_value=1,
                group="bounds",
            ),
            ConfigField(
                name="workers",
                field_type=FieldType.NUMBER,
                label="Workers",
                description="Threads classifying sequences in parallel",
                default=4,
                min_value=1,
                max_value=64,
                group="parallelism",
            ),
        ]
