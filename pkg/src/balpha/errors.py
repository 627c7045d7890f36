"""Exception types raised across the package."""


class GraphFormatError(ValueError):
    """Malformed graph6 record, edge-list file or generator spec."""


class BudgetExceededError(ValueError):
    """An exponential-time routine was asked for a graph above its size budget."""


class IsolatedVertexError(ValueError):
    """The operation is only defined for graphs without isolated vertices."""


class ConvergenceError(RuntimeError):
    """An iterative eigensolver hit its sweep cap."""
