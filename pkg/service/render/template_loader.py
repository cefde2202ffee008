"""
Template Loader: jinja2 templates under ``templates/``.

Public API
~~~~~~~~~~
* ``TemplateLoader(templates_dir=None)``
* ``loader.render(template_name, /, **context) -> str``
* ``loader.list_available() -> list[str]``
* ``get_template_loader() -> TemplateLoader`` (process-wide instance)
"""

from __future__ import annotations

from logging import getLogger
from pathlib import Path
from typing import Any, Dict, List, Optional

from jinja2 import Environment, FileSystemLoader, StrictUndefined, Template, TemplateNotFound

from service.exceptions import UsageError

logger = getLogger(__name__)

# Project root → templates/ directory
_DEFAULT_TEMPLATES_DIR = Path(__file__).parent.parent.parent / "templates"


def _yesno(value: Any) -> str:
    return "yes" if value else "no"


class TemplateLoader:
    """Loads and renders the report templates.

    Usage::

        loader = TemplateLoader()
        text = loader.render("surface.txt.j2", report=report)
    """

    def __init__(self, templates_dir: Optional[Path] = None) -> None:
        self._dir = templates_dir or _DEFAULT_TEMPLATES_DIR
        self._env = Environment(
            loader=FileSystemLoader(str(self._dir)),
            undefined=StrictUndefined,
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
            autoescape=False,
        )
        self._env.filters["yesno"] = _yesno
        self._cache: Dict[str, Template] = {}

    @property
    def templates_dir(self) -> Path:
        return self._dir

    def load(self, name: str) -> Template:
        if name in self._cache:
            return self._cache[name]
        try:
            template = self._env.get_template(name)
        except TemplateNotFound:
            raise UsageError(f"template '{name}' not found in {self._dir}")
        self._cache[name] = template
        logger.debug(f"TemplateLoader: loaded {name}")
        return template

    def render(self, template_name: str, /, **context: Any) -> str:
        # positional-only: templates may take a `name` variable
        return self.load(template_name).render(**context)

    def list_available(self) -> List[str]:
        """Template names present on disk."""
        if not self._dir.is_dir():
            return []
        return sorted(path.name for path in self._dir.glob("*.j2"))


_loader: Optional[TemplateLoader] = None


def get_template_loader() -> TemplateLoader:
    global _loader
    if _loader is None:
        _loader = TemplateLoader()
    return _loader
