"""Exceptions shared across the package."""


class KregularError(Exception):
    """Base class for package errors."""


class SchemaError(KregularError, ValueError):
    """A JSON document does not match the expected schema."""


class ValidationFailure(KregularError, ValueError):
    """A loaded structure failed an exact invariant check."""

    def __init__(self, check: str, detail: str = ""):
        self.check = check
        self.detail = detail
        msg = check if not detail else f"{check}: {detail}"
        super().__init__(msg)


class CatalogError(KregularError, ValueError):
    """Unknown catalog family or size out of range."""


class GramSizeError(KregularError, ValueError):
    """A full-mode Gram matrix would exceed the configured size limit."""


class DegreeBoundError(KregularError, ValueError):
    """A word-pair degree exceeds the invariant degree bound."""
