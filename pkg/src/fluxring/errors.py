"""Exceptions shared across the package."""


class ParameterDomainError(ValueError):
    """A parameter lies outside the domain an operation is defined on."""


class ConvergenceError(RuntimeError):
    """The eigensolver exhausted its iteration budget."""
