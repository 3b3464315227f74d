"""Exception types shared across the package."""


class ColorCodeError(Exception):
    """Base class for all domain errors."""


class SizeConstraintViolation(ColorCodeError):
    """Requested lattice dimensions violate the construction's size rules."""


class InvalidLattice(ColorCodeError):
    """A lattice failed structural validation where a valid one is required."""


class DimensionMismatch(ColorCodeError):
    """Two operators (or an operator and a lattice) disagree on qubit count."""


class ColorMismatch(ColorCodeError):
    """A face passed to a string constructor does not have the expected color."""


class NoPath(ColorCodeError):
    """No same-color path exists between the requested faces."""


class NotEnclosable(ColorCodeError):
    """No closed loop of the requested color encircles the region."""


class GeometryUnrealizable(ColorCodeError):
    """The lattice is too small for the requested string geometry."""


class UnrealizableSignature(ColorCodeError):
    """A detector signature does not belong to any of the 16 sectors."""


class TooLarge(ColorCodeError):
    """Dense-oracle request exceeds the qubit cap."""
