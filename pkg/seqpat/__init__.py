"""Distances between sequence patterns"""

__version__ = "1.0.0"
