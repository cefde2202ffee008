"""
Configuration Manager for g2a-surfaces.

Handles:
- Loading/saving configs from JSON files in a config directory
- Built-in defaults when no directory is configured (nothing is written)
- Config validation
- Thread-safe config access
"""

import json
from logging import getLogger
from pathlib import Path
from threading import RLock
from typing import Any, Dict, List, Optional, Type, TypeVar

from service.config.base import BaseConfig, get_registered_configs
from service.exceptions import UsageError

logger = getLogger(__name__)

T = TypeVar('T', bound=BaseConfig)

# Global config manager instance
_config_manager: Optional['ConfigManager'] = None


class ConfigManager:
    """
    Manages configuration loading, saving, and access.

    With a config directory, configs are JSON files ``<name>.json`` created
    with defaults on first use. Without one, configs live in memory only.
    """

    def __init__(self, config_dir: Optional[Path] = None):
        self.config_dir = Path(config_dir) if config_dir is not None else None
        if self.config_dir is not None:
            self.config_dir.mkdir(parents=True, exist_ok=True)

        self._configs: Dict[str, BaseConfig] = {}
        self._lock = RLock()

        logger.debug(f"ConfigManager initialized with config dir: {self.config_dir or '(in memory)'}")

    @property
    def persistent(self) -> bool:
        return self.config_dir is not None

    def _get_config_path(self, config_name: str) -> Optional[Path]:
        if self.config_dir is None:
            return None
        return self.config_dir / f"{config_name}.json"

    def get_registered_config_classes(self) -> Dict[str, Type[BaseConfig]]:
        return get_registered_configs()

    def _config_class(self, config_name: str) -> Type[BaseConfig]:
        classes = self.get_registered_config_classes()
        if config_name not in classes:
            raise UsageError(f"unknown config {config_name!r}; known: {', '.join(sorted(classes))}")
        return classes[config_name]

    def load_config(self, config_class: Type[T]) -> T:
        """
        Load a configuration, creating the default file on first use.

        A file that fails to parse is logged and replaced by defaults in
        memory; the file itself is left untouched.
        """
        config_name = config_class.get_config_name()
        config_path = self._get_config_path(config_name)

        with self._lock:
            if config_name in self._configs:
                return self._configs[config_name]

            if config_path is not None and config_path.exists():
                try:
                    with open(config_path, 'r', encoding='utf-8') as f:
                        data = json.load(f)
                    config = config_class.from_dict(data)
                    logger.debug(f"Loaded config: {config_name}")
                except (OSError, ValueError, TypeError) as e:
                    logger.error(f"Failed to load config {config_name}: {e}")
                    config = config_class.get_default_instance()
            else:
                config = config_class.get_default_instance()
                if config_path is not None:
                    self.save_config(config)
                    logger.info(f"Created default config: {config_name}")

            errors = config.validate()
            if errors:
                logger.warning(f"Config {config_name} is invalid, using defaults: {errors}")
                config = config_class.get_default_instance()

            self._configs[config_name] = config
            return config

    def save_config(self, config: BaseConfig) -> bool:
        config_name = config.get_config_name()
        config_path = self._get_config_path(config_name)

        with self._lock:
            self._configs[config_name] = config
            if config_path is None:
                return True
            try:
                with open(config_path, 'w', encoding='utf-8') as f:
                    json.dump(config.to_dict(), f, indent=2, ensure_ascii=False)
            except OSError as e:
                logger.error(f"Failed to save config {config_name}: {e}")
                return False

        logger.info(f"Saved config: {config_name}")
        return True

    def update_config(self, config_name: str, updates: Dict[str, Any]) -> BaseConfig:
        """
        Apply a partial update and persist it.

        Raises UsageError when the result fails validation; nothing is saved then.
        """
        config_class = self._config_class(config_name)
        config = self.load_config(config_class)

        current_data = config.to_dict()
        current_data.update(updates)
        updated_config = config_class.from_dict(current_data)

        errors = updated_config.validate()
        if errors:
            logger.warning(f"Config validation errors for {config_name}: {errors}")
            raise UsageError(f"invalid {config_name} config: {'; '.join(errors)}")

        self.save_config(updated_config)
        return updated_config

    def get_config(self, config_name: str) -> BaseConfig:
        return self.load_config(self._config_class(config_name))

    def get_all_configs(self) -> List[Dict[str, Any]]:
        """Every registered config with its values, sorted by name."""
        result = []
        for config_name, config_class in sorted(self.get_registered_config_classes().items()):
            config = self.load_config(config_class)
            result.append({
                "name": config_name,
                "display_name": config_class.get_display_name(),
                "description": config_class.get_description(),
                "category": config_class.get_category(),
                "values": config.to_dict(),
                "errors": config.validate(),
            })
        return result


def init_config_manager(config_dir: Optional[Path] = None) -> ConfigManager:
    """Initialize the global config manager with a config directory"""
    global _config_manager
    _config_manager = ConfigManager(config_dir)
    return _config_manager
