"""Package-wide error types.

Malformed values raise plain ``ValueError``; the classes below mark the
two failure modes the command line distinguishes from bad input.
"""

from __future__ import annotations


class CapacityError(Exception):
    """A requested computation exceeds the configured enumeration caps."""


class PrecisionError(ValueError):
    """A stored series/digit prefix is too short for the requested operation."""
