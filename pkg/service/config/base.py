"""
Config base class and registry.

A config is a dataclass with typed defaults plus a list of ``ConfigField``
descriptors. The descriptors drive three things: which JSON keys are read,
how ``config set KEY=VALUE`` text is converted, and what ``validate`` checks.

Public API
~~~~~~~~~~
- BaseConfig, ConfigField, FieldType
- register_config (class decorator), get_registered_configs
"""

from abc import ABC, abstractmethod
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Type, TypeVar

from service.exceptions import ParseError


class FieldType(str, Enum):
    STRING = "string"
    NUMBER = "number"     # integers only
    BOOLEAN = "boolean"
    SELECT = "select"     # one of ``options``


@dataclass
class ConfigField:
    """Descriptor of one config field."""
    name: str
    field_type: FieldType
    label: str
    description: str = ""
    required: bool = False
    default: Any = None
    options: List[str] = field(default_factory=list)
    min_value: Optional[int] = None
    max_value: Optional[int] = None
    group: str = "general"


_config_registry: Dict[str, Type['BaseConfig']] = {}


def register_config(cls: Type['BaseConfig']) -> Type['BaseConfig']:
    _config_registry[cls.get_config_name()] = cls
    return cls


def get_registered_configs() -> Dict[str, Type['BaseConfig']]:
    return dict(_config_registry)


T = TypeVar('T', bound='BaseConfig')

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def _blank(value: Any) -> bool:
    return value is None or (isinstance(value, str) and not value.strip())


class BaseConfig(ABC):
    """
    Base of every engine config.

    Subclasses are ``@dataclass`` classes decorated with ``@register_config``
    and live in ``sub_config/<category>/<name>_config.py`` so discovery picks
    them up::

        @register_config
        @dataclass
        class EngineConfig(BaseConfig):
            exponent_cap: int = DEFAULT_EXPONENT_CAP
    """

    @classmethod
    @abstractmethod
    def get_config_name(cls) -> str:
        """Registry key and JSON file stem."""

    @classmethod
    @abstractmethod
    def get_display_name(cls) -> str:
        ...

    @classmethod
    @abstractmethod
    def get_description(cls) -> str:
        ...

    @classmethod
    @abstractmethod
    def get_fields_metadata(cls) -> List[ConfigField]:
        ...

    @classmethod
    def get_category(cls) -> str:
        return "general"

    @classmethod
    def get_field(cls, name: str) -> Optional[ConfigField]:
        return next((meta for meta in cls.get_fields_metadata() if meta.name == name), None)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls: Type[T], data: Dict[str, Any]) -> T:
        """Unknown keys are dropped; missing keys take the dataclass defaults."""
        known = {meta.name for meta in cls.get_fields_metadata()}
        return cls(**{k: v for k, v in data.items() if k in known})

    @classmethod
    def get_default_instance(cls: Type[T]) -> T:
        return cls()

    @classmethod
    def parse_value(cls, name: str, text: str) -> Any:
        """Convert ``config set`` text to the field's type."""
        meta = cls.get_field(name)
        if meta is None:
            raise ParseError(f"{cls.get_config_name()} has no field {name!r}")
        if meta.field_type == FieldType.NUMBER:
            try:
                return int(text)
            except ValueError:
                raise ParseError(f"{meta.label} must be an integer, got {text!r}")
        if meta.field_type == FieldType.BOOLEAN:
            lowered = text.strip().lower()
            if lowered in _TRUE:
                return True
            if lowered in _FALSE:
                return False
            raise ParseError(f"{meta.label} must be a boolean, got {text!r}")
        return text

    def validate(self) -> List[str]:
        """Error messages; empty when the config is usable."""
        errors = []
        for meta in self.get_fields_metadata():
            value = getattr(self, meta.name, None)
            if _blank(value):
                if meta.required:
                    errors.append(f"{meta.label} is required")
                continue

            if meta.field_type == FieldType.NUMBER:
                if isinstance(value, bool) or not isinstance(value, int):
                    errors.append(f"{meta.label} must be an integer")
                    continue
                if meta.min_value is not None and value < meta.min_value:
                    errors.append(f"{meta.label} must be at least {meta.min_value}")
                if meta.max_value is not None and value > meta.max_value:
                    errors.append(f"{meta.label} must be at most {meta.max_value}")
            elif meta.field_type == FieldType.SELECT and value not in meta.options:
                errors.append(f"{meta.label} must be one of {', '.join(meta.options)}")
        return errors

    def is_valid(self) -> bool:
        return not self.validate()
