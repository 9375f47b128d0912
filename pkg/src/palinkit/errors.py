"""Exception taxonomy shared across the package."""

from __future__ import annotations

from typing import Any


class PalinkitError(Exception):
    """Base class for all errors raised by this package."""


class AlphabetError(PalinkitError, ValueError):
    """A symbol or label does not belong to the alphabet in use."""


class WordRangeError(PalinkitError, IndexError):
    """1-based factor indices fall outside the word."""


class PreconditionError(PalinkitError, ValueError):
    """An operation was called on inputs that violate its contract."""


class ResourceLimitError(PalinkitError, RuntimeError):
    """An enumeration or scan exceeds the configured desk-scale caps."""


class FalsificationError(PalinkitError):
    """A verified mathematical invariant failed on concrete inputs.

    Raising this is a reportable event: the payload carries the inputs so a
    counterexample can be serialized instead of silently swallowed.
    """

    def __init__(self, message: str, payload: dict[str, Any] | None = None):
        super().__init__(message)
        self.payload = payload or {}
