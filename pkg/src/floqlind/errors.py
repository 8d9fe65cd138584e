"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Operands have incompatible or invalid shapes."""


class ContractViolationError(ValueError):
    """An input violates a documented precondition (Hermiticity, positivity)."""


class NumericalError(RuntimeError):
    """A computation produced non-finite values or drifted past tolerance."""


class NoGapError(RuntimeError):
    """Every period-map eigenvalue is stationary, so no spectral gap exists."""


class DegenerateSteadyStateError(RuntimeError):
    """Two or more period-map eigenvalues sit within tolerance of 1."""


class ConfigError(ValueError):
    """A configuration document or flag set failed validation."""
