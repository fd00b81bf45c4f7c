"""Exception types shared across the package.

Two rejection flavors are distinguished so front ends can map them to
different failure channels (HTTP 400 vs 422, for instance): a document
that is structurally wrong raises :class:`SchemaError`, while a
well-formed document carrying impossible values raises
:class:`ValidationError`.  Both carry an optional ``path`` locating the
offending element.
"""

from __future__ import annotations


class InputError(ValueError):
    """Base class for rejected inputs."""

    def __init__(self, message: str, *, path: str | None = None):
        super().__init__(message)
        self.path = path

    def __str__(self) -> str:
        base = super().__str__()
        if self.path:
            return f"{self.path}: {base}"
        return base


class SchemaError(InputError):
    """Document shape is wrong: missing/unknown keys, wrong types."""


class ValidationError(InputError):
    """Document parses but the values violate an invariant."""
