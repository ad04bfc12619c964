"""Exception hierarchy shared by every module."""


class GraphError(ValueError):
    """Base class for invalid-graph and invalid-operation errors."""


class NotCubic(GraphError):
    pass


class NotSimple(GraphError):
    pass


class Disconnected(GraphError):
    pass


class OddOrder(GraphError):
    pass


class EdgeNotPresent(GraphError):
    pass


class IdenticalEdges(GraphError):
    pass


class SimplicityViolation(GraphError):
    """An operation would create a loop or a parallel edge."""


class PreconditionViolated(GraphError):
    pass


class SeedNotC5C(GraphError):
    """A cyclically 5-connected pipeline was seeded with an unsuitable graph."""
