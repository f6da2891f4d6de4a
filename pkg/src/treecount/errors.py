"""Exception hierarchy shared by every treecount module."""


class TreeCountError(Exception):
    """Base class for all library errors."""


class GraphError(TreeCountError, ValueError):
    pass


class IndexOutOfRange(GraphError, IndexError):
    pass


class DuplicateEdge(GraphError):
    pass


class EmptySide(GraphError):
    pass


class EmptyPartition(GraphError):
    pass


class Disconnected(GraphError):
    """Raised by operations that require a connected graph."""


class InfeasibleSpec(GraphError):
    pass


class ConnectivityRetriesExhausted(TreeCountError, RuntimeError):
    pass


class NonSymmetric(TreeCountError, ValueError):
    pass


class NonIntegerInterpolation(TreeCountError, ArithmeticError):
    """Interpolated determinant polynomial came out non-integral (internal bug)."""


class TooLarge(TreeCountError, ValueError):
    pass


class TooSmall(TreeCountError, ValueError):
    pass


class InvalidTheta(TreeCountError, ValueError):
    pass


class InfeasibleK(TreeCountError, ValueError):
    pass


class ThetaGeqA(TreeCountError, ValueError):
    pass


class NotPSD(TreeCountError, ValueError):
    pass


class NotSingular(TreeCountError, ValueError):
    pass


class BoundNotApplicable(TreeCountError, ValueError):
    """A bound formula is undefined for this input (e.g. a zero denominator)."""
