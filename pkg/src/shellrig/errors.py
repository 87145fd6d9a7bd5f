"""Shared exception types."""


class ShellrigError(Exception):
    """Base class for all package errors."""


class DegenerateChartError(ShellrigError):
    """Immersion failure: tangent vectors linearly dependent at a point."""


class WrongGeometryError(ShellrigError):
    """Operation invoked on a point whose curvature class does not match."""


class DegenerateInputError(ShellrigError):
    """Input violates a precondition (zero vector, flat point, ...)."""


class ThicknessError(ShellrigError):
    """Shell too thick: a volume-element factor 1 + t*lambda is nonpositive."""


class NodeBudgetError(ShellrigError):
    """Requested quadrature grid exceeds the configured node cap."""

    def __init__(self, required, cap):
        super().__init__(f"grid requires {required} nodes, cap is {cap}")
        self.required = required
        self.cap = cap


class InsufficientDataError(ShellrigError):
    """Too few valid sweep points to fit an exponent."""


class DomainExitError(ShellrigError):
    """A flow left the chart domain before reaching the requested extent."""

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved
