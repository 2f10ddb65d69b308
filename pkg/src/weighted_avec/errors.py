"""Exception hierarchy. Every error is a ``ValueError`` so callers can catch broadly."""


class GraphError(ValueError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class OrderTooSmall(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NotATree(GraphError):
    pass


class IsATree(GraphError):
    pass


class EdgeNotInGraph(GraphError):
    pass


class ArgumentOutOfRange(GraphError):
    pass


class WeightError(GraphError):
    pass


class NegativeWeight(WeightError):
    pass


class NotNormalized(WeightError):
    pass


class DomainMismatch(WeightError):
    pass


class TooManyEdges(GraphError):
    pass


class CaseUnsupported(GraphError):
    pass


class ComplementDisconnected(GraphError):
    pass


class ParseError(GraphError):
    pass


class ScopeTooLarge(GraphError):
    pass
