"""
Config management for g2a-surfaces.

This module provides:
- BaseConfig: Abstract base class for all configurations
- ConfigManager: Loads, saves and validates configs
- RuntimeSettings: environment-level settings (``G2A_*``)
- Sub-config auto-discovery: configs are organized under sub_config/<category>/

Usage::

    manager = init_config_manager(tmp_dir)
    engine = manager.load_config(EngineConfig)
"""

from service.config.base import BaseConfig, ConfigField, FieldType, register_config
from service.config.manager import ConfigManager, init_config_manager
from service.config.settings import RuntimeSettings, get_runtime_settings

# Importing the package registers every @register_config class below it.
import service.config.sub_config  # noqa: F401

from service.config.sub_config.engine.engine_config import EngineConfig
from service.config.sub_config.engine.enumeration_config import EnumerationConfig
from service.config.sub_config.output.output_config import OutputConfig

__all__ = [
    'BaseConfig',
    'ConfigField',
    'FieldType',
    'register_config',
    'ConfigManager',
    'init_config_manager',
    'RuntimeSettings',
    'get_runtime_settings',
    'EngineConfig',
    'EnumerationConfig',
    'OutputConfig',
]
