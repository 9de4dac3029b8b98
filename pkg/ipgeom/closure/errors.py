"""Exceptions raised by ipgeom.closure"""


class ClosureError(ValueError):
    "Class so programs can log user errors without backtrace"

    def __init__(self, message):
        super(ClosureError, self).__init__(message)


class ZeroDenominatorError(ClosureError):
    """A rational was requested with denominator zero"""

    def __init__(self, numerator):
        super(ZeroDenominatorError, self).__init__(
            f"rational {numerator}/0 has a zero denominator"
        )


class DimensionError(ClosureError):
    """Operands live in spaces of different dimension"""

    def __init__(self, expected, received, what="operand"):
        self.expected = expected
        self.received = received
        super(DimensionError, self).__init__(
            f"{what} has dimension {received}, expected {expected}"
        )


class ZeroVectorError(ClosureError):
    """A normal or direction vector is zero"""


class LatticeSubspaceError(ClosureError):
    """A subspace is not a lattice subspace, or a point is outside of it"""


class InfeasibleError(ClosureError):
    """An operation that needs a nonempty polyhedron received an empty one"""


class HypothesisError(ClosureError):
    """The hypotheses of a construction do not hold for the given input

    The message names the violated condition.
    """

    def __init__(self, condition, detail=""):
        self.condition = condition
        message = f"hypothesis violated: {condition}"
        if detail:
            message += f" ({detail})"
        super(HypothesisError, self).__init__(message)


class InputError(ClosureError):
    """A document could not be parsed; ``field`` is the offending path"""

    def __init__(self, field, message):
        self.field = field
        super(InputError, self).__init__(f"{field}: {message}")


class ConfigError(ClosureError):
    """Bad configuration key or value"""


class ClosureInternalError(Exception):
    """Exception for broken internal invariants.

    Note that this error is not a ClosureError and is not converted into a
    user-facing exit code by the command line interface.
    """
