"""Exception hierarchy shared across the package."""


class RescurvError(Exception):
    """Base class for all errors raised by rescurv."""


class GraphError(RescurvError, ValueError):
    """Invalid graph input. ``line`` is the 1-based source line, if known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyInput(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class MalformedLine(GraphError):
    pass


class LinAlgFault(RescurvError, ArithmeticError):
    """Base class for failures of the dense kernels."""


class NotPositiveDefinite(LinAlgFault):
    pass


class SingularMatrix(LinAlgFault):
    pass


class NoConvergence(LinAlgFault):
    pass


class NotSymmetric(LinAlgFault, ValueError):
    pass


class ZeroTotalCurvature(RescurvError, ZeroDivisionError):
    pass


class BadParams(RescurvError, ValueError):
    pass


class NoClosedForm(RescurvError, LookupError):
    pass


class SameVertex(RescurvError, ValueError):
    pass


class BadMeasure(RescurvError, ValueError):
    pass


class NegativeCurvature(RescurvError, ValueError):
    pass


class TooLarge(RescurvError, ValueError):
    pass
