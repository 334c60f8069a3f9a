"""Minimum d-transversals and d-deletion blockers of alpha on co-comparability graphs."""

__version__ = "0.1.0"
