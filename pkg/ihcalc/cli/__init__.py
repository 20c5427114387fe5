"""
CLI Package
"""
from .main import main, run
from .commands import execute

__all__ = ["main", "run", "execute"]
