"""
Config discovery.

Every ``<category>/<name>_config.py`` below this package is imported once,
which runs its ``@register_config`` decorator. The folder name is the
category shown by ``config show``.
"""

import importlib
import pkgutil
from logging import getLogger
from pathlib import Path
from typing import List

logger = getLogger(__name__)


def discover_configs() -> List[str]:
    """Import every config module; returns their dotted names in import order."""
    package_dir = Path(__file__).parent
    imported = []
    for category_dir in sorted(package_dir.iterdir()):
        if not category_dir.is_dir() or category_dir.name.startswith(('_', '.')):
            continue
        category_package = f"{__name__}.{category_dir.name}"
        for module_info in sorted(pkgutil.iter_modules([str(category_dir)]), key=lambda m: m.name):
            if not module_info.name.endswith('_config'):
                continue
            module_name = f"{category_package}.{module_info.name}"
            try:
                importlib.import_module(module_name)
            except ImportError as e:
                logger.warning(f"Failed to import config module {module_name}: {e}")
                continue
            imported.append(module_name)
    return imported


DISCOVERED = discover_configs()
