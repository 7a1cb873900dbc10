"""Exception taxonomy for the toolkit.

ValidationError covers semantic problems in otherwise well-formed data
(bad values, broken references, unusable configuration). ParseError
covers input that could not be decoded at all. The CLI maps
ValidationError to exit code 1 and ParseError / OSError to exit code 2.
"""

from __future__ import annotations


class IngrevalError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(IngrevalError):
    """A value or document violates a documented invariant."""


class EmptyNameError(ValidationError):
    """Canonicalization produced an empty string (input was whitespace)."""


class ReferentialIntegrityError(ValidationError):
    """Annotations reference image ids that do not exist.

    Carries the offending ids so callers can report all of them at once.
    """

    def __init__(self, message: str, offenders: tuple = ()):  # noqa: ANN001
        super().__init__(message)
        self.offenders = tuple(offenders)


class MixedGranularityError(ValidationError):
    """A document declared word granularity but contains line-like items."""


class ConfigError(ValidationError):
    """Configuration is missing required pieces or contains unknown keys."""


class ParseError(IngrevalError):
    """Input bytes could not be parsed; records where decoding failed."""

    def __init__(self, message: str, *, path: str | None = None,
                 offset: int | None = None):
        detail = message
        if path is not None:
            detail = f"{path}: {detail}"
        if offset is not None:
            detail = f"{detail} (byte offset {offset})"
        super().__init__(detail)
        self.path = path
        self.offset = offset
