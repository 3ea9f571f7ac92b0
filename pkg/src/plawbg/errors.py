"""Exception hierarchy."""


class PlawError(Exception):
    """Base class for all errors raised by this package."""


class StructuralInputError(PlawError, ValueError):
    """An incidence matrix violates its structural invariants."""


class EmptyDistributionError(PlawError, ValueError):
    """No vertex has a nonzero degree."""


class EstimatorPreconditionError(PlawError, ValueError):
    """The exponent estimator cannot be applied to this distribution."""


class DegenerateDistributionError(EstimatorPreconditionError):
    """The distribution is too narrow for a power-law model (d_max = 1, alpha <= 0)."""


class CoverageError(PlawError, ValueError):
    """An observed degree lies below the first model bin."""


class ParameterError(PlawError, ValueError):
    """Invalid generator or fit parameter."""
