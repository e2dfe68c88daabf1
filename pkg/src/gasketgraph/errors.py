"""Exception hierarchy for gasketgraph.

Every error carries the process exit code the CLI reports for it.
"""

from __future__ import annotations

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE_LIMIT = 3


class GasketError(Exception):
    """Base class for all gasketgraph errors."""

    exit_code: int = EXIT_USAGE


class SizeLimitError(GasketError):
    """A level or graph exceeds a configured size ceiling."""

    exit_code = EXIT_RESOURCE_LIMIT


class SearchBudgetError(GasketError):
    """An exhaustive search would exceed its configured budget."""

    exit_code = EXIT_RESOURCE_LIMIT


class NoSubcopyError(GasketError):
    """S1 has no sub-copies."""


class CornerError(GasketError, ValueError):
    """A corner label is unknown or two corners coincide."""


class LengthRangeError(GasketError, ValueError):
    """A requested path or cycle length is outside the admissible range."""


class DomainError(GasketError, ValueError):
    """An argument is outside the domain where a closed form holds."""


class IllegalMoveError(GasketError):
    """A pebbling move violates the move rule."""


class CertificateError(GasketError):
    """A constructed certificate failed independent validation."""

    exit_code = EXIT_VERIFICATION_FAILED


class ConfigError(GasketError):
    """Settings could not be read or an override is malformed."""


class ParseError(GasketError):
    """Serialized input could not be decoded."""
