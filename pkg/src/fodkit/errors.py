"""Exception hierarchy shared by every fodkit module."""


class FodError(Exception):
    """Base class for all fodkit errors."""


class ParseError(FodError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class DomainError(FodError):
    """Evaluation left the real domain of the expression or operator."""


class PoleError(DomainError):
    """Evaluation hit a pole (unbounded value)."""


class ConvergenceError(FodError):
    """A limit or quadrature estimate failed to settle within tolerance."""
