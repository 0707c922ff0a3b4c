"""Exception types shared across the package."""


class RotlatError(Exception):
    """Base class for all package errors."""


class UnsupportedConductor(RotlatError, ValueError):
    """Conductor is not 2^r (4 <= r <= 9) or an odd prime in [7, 31]."""


class ParamsMismatch(RotlatError, ValueError):
    """Operands belong to different fields."""


class ZeroElement(RotlatError, ValueError):
    """Operation requires a nonzero field element."""


class SingularBasis(RotlatError, ValueError):
    """Basis matrix is not full rank."""


class ZeroGenerator(RotlatError, ValueError):
    """Principal-module comparison against the zero element."""


class NotTotallyPositive(RotlatError, ValueError):
    """Twist element has a non-positive real embedding."""


class NonIntegralGram(RotlatError, ValueError):
    """Scaled trace form is not integer valued; the lattice is not integral."""


class BadParam(RotlatError, ValueError):
    """Family parameter out of range (r < 4, composite p, ...)."""


class UncertifiedMinimum(RotlatError, RuntimeError):
    """No |N(y)| = 1 witness in the search box and the module is not known
    to be principal, so the product-distance minimum cannot be certified."""
