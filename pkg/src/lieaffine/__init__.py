"""Affinely closed homogeneous spaces from matrix generators."""
from .exactlin import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
