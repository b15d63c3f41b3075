"""Exact arithmetic for floored binomial-sum sequences and their recurrences."""

__version__ = "0.1.0"
