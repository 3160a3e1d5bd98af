"""Exception hierarchy for hyperwave.

Every error raised by the library derives from `HyperwaveError`, and most
also derive from the matching builtin so callers can catch `ValueError` or
`ArithmeticError` without importing this module.
"""


class HyperwaveError(Exception):
    """Base class for all hyperwave errors."""


class DomainError(HyperwaveError, ValueError):
    """An index or argument lies outside the admissible range."""


class GammaPoleError(DomainError):
    """Gamma function evaluated at a non-positive integer."""


class ParameterPoleError(DomainError):
    """Connection coefficients of the 1-z continuation are singular."""


class ConvergenceError(HyperwaveError, ArithmeticError):
    """A series or quadrature did not meet its tail bound."""


class NonFiniteError(HyperwaveError, ArithmeticError):
    """A computation produced NaN or infinity."""


class UnknownRelationError(HyperwaveError, KeyError):
    """The requested relation id is not in the verification catalog."""

    def __str__(self) -> str:
        # KeyError repr-quotes its argument; keep the plain message.
        return str(self.args[0]) if self.args else ""


class ConfigurationError(HyperwaveError):
    """Invalid numerical options or configuration file contents."""
