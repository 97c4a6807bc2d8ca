"""Exception hierarchy shared by every module."""


class WodError(Exception):
    """Base class for all errors raised by wodkit."""


class GraphError(WodError, ValueError):
    pass


class ZeroOrder(GraphError):
    pass


class EndpointOutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class AllIsolated(GraphError):
    pass


class ZeroCopies(GraphError):
    pass


class MemberOutOfRange(GraphError):
    pass


class ParseError(GraphError):
    pass


class TooLarge(WodError):
    """An exact search would exceed its enumeration guard."""


class ParameterOutOfRange(WodError, ValueError):
    pass


class NotBipartite(WodError, ValueError):
    pass


class EdgeWithinSide(WodError, ValueError):
    pass


class BudgetExceeded(WodError):
    """A size-bounded search expanded more nodes than allowed."""
