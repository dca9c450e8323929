"""Exception types shared across the package.

The split matters for the CLI exit-code contract: configuration and
argument problems map to exit 1, problems with the data being analyzed
map to exit 2.
"""

from __future__ import annotations


class QtfError(Exception):
    """Base class for all package errors."""


class DomainError(QtfError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class DataError(QtfError, ValueError):
    """Input data is unusable (undecodable, empty, or malformed)."""
