""".. include:: ../README.md"""

from .grid import GridDiagram
from .pipeline import HomologyJob
from .types import Configuration, PlugIn

__all__ = ["GridDiagram", "HomologyJob", "Configuration", "PlugIn"]

__version__ = "0.1.0a0"
