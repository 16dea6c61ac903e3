from __future__ import annotations


class ClawtopError(RuntimeError):
    """Base class for every error raised by clawtop."""

    exit_code = 1


class InputError(ClawtopError, ValueError):
    """Invalid vertex, parameter, precondition or unparsable input."""

    exit_code = 2


class GenerationError(ClawtopError):
    exit_code = 2


class ResourceCapError(ClawtopError):
    """A vertex or face cap was exceeded."""

    exit_code = 3


class CollapseError(ClawtopError):
    """A collapse step removed a face that was not free."""


class VerificationError(ClawtopError):
    """An internal consistency check failed (for example a nonzero boundary square)."""
