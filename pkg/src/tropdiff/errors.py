"""Exception types shared across the package."""


class TropdiffError(Exception):
    """Base class for all errors raised by this package."""


class ArityError(TropdiffError, ValueError):
    """Mixed lattice arities, bad coordinates, or variable indices out of range."""


class FieldError(TropdiffError, ValueError):
    """Incompatible coefficient fields, or sqrt(d) used without a quadratic field."""


class PrecisionError(TropdiffError, ValueError):
    """A query needs coefficients beyond the known precision of a truncated series."""


class ParseError(TropdiffError, ValueError):
    """Syntax or validation error in DSL input, annotated with a position."""

    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.message = message
        self.text = text
        self.pos = pos
        if pos is not None:
            super().__init__(f"{message} (at position {pos})")
        else:
            super().__init__(message)


class CandidateCapError(TropdiffError, RuntimeError):
    """Enumeration refused: the candidate count exceeds the configured cap."""

    def __init__(self, estimate: int, cap: int):
        self.estimate = estimate
        self.cap = cap
        super().__init__(
            f"enumeration would visit an estimated {estimate} candidate tuples, "
            f"exceeding the cap of {cap}"
        )
