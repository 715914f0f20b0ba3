"""Exception hierarchy shared by every ncwell subpackage."""


class NCWellError(Exception):
    """Base class for all errors raised by ncwell."""

    #: short operation name reported by the CLI
    operation: str = ""

    def __init__(self, message: str, operation: str = ""):
        super().__init__(message)
        if operation:
            self.operation = operation


class CoefficientZeroDivision(NCWellError, ZeroDivisionError):
    """Division by a coefficient that is identically zero."""


class AlgebraMismatchError(NCWellError, ValueError):
    """Operands live in different algebras, or a map got the wrong source."""


class StructuralError(NCWellError):
    """A derivation produced a term class outside the expected buckets."""


class IdentityCheckError(NCWellError, AssertionError):
    """An exact identity that must hold by construction did not."""


class DomainError(NCWellError, ValueError):
    """Numeric input outside the physical domain of a formula."""


class ConfigError(NCWellError, ValueError):
    """Invalid run configuration."""
