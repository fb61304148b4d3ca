"""Exception hierarchy shared by every edgeswap module."""


class EdgeSwapError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class InvalidInput(EdgeSwapError, ValueError):
    """A graph or argument violates an operation's precondition."""


class InvalidGraph(InvalidInput):
    pass


class InvalidDegreeSequence(InvalidInput):
    pass


class InvalidTriangleSequence(InvalidInput):
    pass


class NonSimpleGraph(InvalidInput):
    """Triangle statistics were requested for a graph with loops or multiedges."""


class IndexOutOfRange(InvalidInput, IndexError):
    pass


class BadArity(InvalidInput):
    pass


class NoDisjointEdge(EdgeSwapError):
    """Every edge touches the looped vertex, so the last loop cannot be removed."""


class CriterionUnsatisfied(EdgeSwapError):
    pass


class SampleOutsideCensus(EdgeSwapError):
    pass


class FilterInapplicable(EdgeSwapError):
    pass


class CensusTooLarge(EdgeSwapError):
    pass


class ClassMismatch(EdgeSwapError):
    pass
