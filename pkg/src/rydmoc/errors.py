"""Exception types shared across the package."""


class InvalidArgumentError(ValueError):
    """An argument violates a documented precondition."""


class SingularSystemError(ArithmeticError):
    """The steady-state linear system has no dissipation and cannot be solved."""


class ConfigError(ValueError):
    """A configuration file is malformed or violates the schema."""
