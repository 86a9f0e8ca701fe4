"""Exception and warning classes raised by specalc."""


class SpecalcError(Exception):
    """Base class for all input-validation errors."""


class AmbientMismatch(SpecalcError, ValueError):
    pass


class NotASubspace(SpecalcError, ValueError):
    pass


class CyclicQuiver(SpecalcError, ValueError):
    pass


class NonIntegralDim(SpecalcError, ValueError):
    pass


class BasisMismatch(SpecalcError, ValueError):
    pass


class NonAdmissible(SpecalcError, ValueError):
    """A relation is not contained in the square of the radical."""


# alias used by the homological layer
NotAdmissible = NonAdmissible


class MissingExtData(SpecalcError, ValueError):
    pass


class InconsistentInput(SpecalcError, ValueError):
    pass


class RelationSyntaxError(SpecalcError, ValueError):
    pass


class DimensionCapExceeded(SpecalcError, ValueError):
    """Raised when a path basis would exceed ``SPECALC_MAX_DIM``."""


class BoundViolation(UserWarning):
    """Ext data produce a value above the faithful-module bound."""
