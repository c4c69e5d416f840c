"""Exception hierarchy shared by the library and the command line."""


class DimensionError(ValueError):
    """Operands live in algebras with different numbers of generators, or
    the number of generators is outside the allowed range."""


class ParseError(ValueError):
    """Malformed JSON form of a multivector, polynomial or sequence."""


class PreconditionError(ValueError):
    """An operation was called on an input outside its domain."""


class DependsOnX0Error(PreconditionError):
    """A polynomial in x_1..x_m was required but x_0 occurs."""


class NotHomogeneousError(PreconditionError):
    """A homogeneous polynomial of a given degree was required."""


class NotMonogenicError(PreconditionError):
    """The input is not annihilated by the relevant operator.

    The nonzero image is kept on ``residual`` so callers can report it.
    """

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual
