"""Exception hierarchy for group data, labels and ring arithmetic."""


class GreenRingError(Exception):
    """Base class for every error raised by this package."""


class DatumError(GreenRingError, ValueError):
    """A group datum that cannot define a non-nilpotent rank one Hopf algebra."""


class MalformedTuple(DatumError):
    pass


class DegenerateOrder(DatumError):
    """chi(g) = 1, so the algebra collapses to the group algebra."""


class NilpotentType(DatumError):
    """g^n = 1: the datum is of nilpotent type."""


class CharacterOrderMismatch(DatumError):
    """chi^n != 1 while g^n != 1: not a group datum at all."""


class InvalidParameters(DatumError):
    pass


class LabelError(GreenRingError, ValueError):
    """A label string or label object that does not name a basis element."""


class DatumMismatch(GreenRingError, ValueError):
    """Operands belong to rings built over different data."""


class NonPositiveIndex(GreenRingError, ValueError):
    pass


class IndexOutOfRange(GreenRingError, ValueError):
    pass


class EmptyStableBasis(GreenRingError, ValueError):
    pass


class RelationViolation(GreenRingError, ArithmeticError):
    """A realized module fails one of the defining relations of H."""


class DimensionMismatch(GreenRingError, ArithmeticError):
    pass
