"""Exception hierarchy shared by every module.

Each error maps onto one CLI exit code: validation problems exit 2,
numeric breakdowns exit 4.
"""


class NoncentralError(Exception):
    """Base class for all package errors."""

    exit_code = 2


class ParameterDomainError(NoncentralError, ValueError):
    """A parameter lies outside the domain of the requested object."""


class ImaginaryParameterError(ParameterDomainError):
    """A basis parameter would be the square root of a negative number."""


class QuantumNumberError(ParameterDomainError):
    """Quantum numbers violate the admissibility constraints of their regime."""


class NoBoundStatesError(ParameterDomainError):
    """Bound states were requested where none exist."""


class BelowBarrierError(NoBoundStatesError):
    """The barrier threshold condition fails for a given (n, m)."""

    def __init__(self, n, m, message=None):
        self.n = n
        self.m = m
        super().__init__(message or f"no bound state below the barrier for (n={n}, m={m})")


class RegimeError(ParameterDomainError):
    """An operation was called with parameters from the wrong solution regime."""


class StructuralError(NoncentralError, ArithmeticError):
    """A recursion chain is structurally unusable (e.g. a vanishing b_n)."""

    exit_code = 4

    def __init__(self, message, index=None):
        self.index = index
        super().__init__(message)


class PoleProximityError(StructuralError):
    """A continued-fraction level hit a vanishing denominator."""
