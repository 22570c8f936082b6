"""Exact q-series engine and verification suite for rank-refined 7-core counts."""

from .series import Mismatch, TruncSeries

__all__ = ["Mismatch", "TruncSeries"]

__version__ = "0.1.0"
