"""Exception types shared across the package."""


class IntercolError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(IntercolError, ValueError):
    """An argument violates a stated precondition (bad family size, bad label, ...)."""


class ConnectivityError(IntercolError, ValueError):
    """An operation that requires a connected graph received a disconnected one."""


class UnknownVertexError(IntercolError, KeyError):
    """A vertex label does not belong to the graph."""


class ContractError(IntercolError, ValueError):
    """A value fails an invariant it was required to satisfy (e.g. an invalid
    coloring passed where a verified interval coloring is expected)."""


class ConstructionError(IntercolError, RuntimeError):
    """A coloring construction failed an internal re-verification step."""


class NotColorable(IntercolError):
    """Exhaustive search proved that no interval coloring exists."""


class Undecided(IntercolError):
    """The search budget ran out before the question was settled."""
