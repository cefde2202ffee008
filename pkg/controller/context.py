"""
Shared state of one command-line invocation.
"""

from dataclasses import dataclass
from logging import getLogger
from typing import Optional

from pydantic import BaseModel

from service.config import ConfigManager, EngineConfig, EnumerationConfig, OutputConfig, RuntimeSettings

logger = getLogger(__name__)


@dataclass
class CommandContext:
    json_output: bool
    config_manager: ConfigManager
    settings: RuntimeSettings

    @property
    def output(self) -> OutputConfig:
        return self.config_manager.load_config(OutputConfig)

    @property
    def engine(self) -> EngineConfig:
        return self.config_manager.load_config(EngineConfig)

    @property
    def enumeration(self) -> EnumerationConfig:
        return self.config_manager.load_config(EnumerationConfig)

    def dump(self, model: BaseModel, compact: bool = False) -> str:
        indent = None if compact or self.output.json_indent == 0 else self.output.json_indent
        return model.model_dump_json(indent=indent)

    def emit(self, model: BaseModel, text: Optional[str] = None) -> None:
        """Print the model as JSON under --json, otherwise the text form."""
        if self.json_output or text is None:
            print(self.dump(model))
        else:
            print(text, end="" if text.endswith("\n") else "\n")
