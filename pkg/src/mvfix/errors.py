"""Exception types shared across the package."""

__all__ = [
    "MvfixError",
    "InvariantError",
    "DomainError",
    "ParseError",
    "EvalError",
    "QuadratureError",
    "ConfigError",
    "InsufficientTraceError",
]


class MvfixError(Exception):
    """Base class for every error raised by this package."""


class InvariantError(MvfixError):
    """A constructed value violates a structural invariant."""


class DomainError(MvfixError):
    """An argument lies outside the mathematical domain of an operation."""


class ParseError(MvfixError):
    """Expression source could not be parsed.

    `position` is the 0-based character offset where parsing failed.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class EvalError(MvfixError):
    """Expression evaluation failed; `subexpr` is the offending subexpression."""

    def __init__(self, message: str, subexpr: str):
        super().__init__(f"{message} in '{subexpr}'")
        self.subexpr = subexpr


class QuadratureError(MvfixError):
    """Adaptive quadrature exhausted its depth budget before reaching tolerance."""


class ConfigError(MvfixError):
    """A problem configuration failed schema validation."""


class InsufficientTraceError(MvfixError):
    """An iteration trace is too short to validate."""
