"""Exception types shared across the package."""


class SoftPQError(Exception):
    """Base class for all package errors."""


class ShapeError(SoftPQError, ValueError):
    """Operands have incompatible dimensions."""


class ConfigError(SoftPQError, ValueError):
    """A configuration value is out of its legal range."""


class DegenerateInputError(SoftPQError, ValueError):
    """An input is degenerate for the requested operation (e.g. zero norm)."""


class NumericError(SoftPQError, ArithmeticError):
    """A computation produced or encountered a non-finite value."""


class FormatError(SoftPQError, ValueError):
    """A file does not match its declared binary or CSV format."""

    def __init__(self, message: str, path: str | None = None, offset: int | None = None):
        self.path = path
        self.offset = offset
        detail = message
        if path is not None:
            detail += f" (file: {path}"
            if offset is not None:
                detail += f", byte offset {offset}"
            detail += ")"
        elif offset is not None:
            detail += f" (byte offset {offset})"
        super().__init__(detail)


class CorruptCodeError(SoftPQError, ValueError):
    """A packed code is inconsistent with the codebooks decoding it."""


class EvaluationError(SoftPQError, ValueError):
    """Evaluation preconditions are violated (e.g. unlabeled query)."""
