"""
Process-level runtime settings read from the environment (prefix ``G2A_``).

These sit above the JSON configs: ``G2A_CONFIG_DIR`` chooses where the
configs live, ``G2A_WORKERS`` overrides the enumeration worker count.
"""

from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class RuntimeSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="G2A_", extra="ignore")

    config_dir: Optional[Path] = Field(default=None, description="Directory of the JSON configs")
    log_level: str = Field(default="INFO", description="Root log level")
    log_dir: Optional[Path] = Field(default=None, description="Directory for enumeration run logs")
    workers: Optional[int] = Field(default=None, ge=1, le=64, description="Overrides EnumerationConfig.workers")


@lru_cache(maxsize=1)
def get_runtime_settings() -> RuntimeSettings:
    return RuntimeSettings()
