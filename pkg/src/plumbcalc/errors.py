"""Exception hierarchy.

Every domain failure derives from :class:`PlumbingError`; the CLI maps those
to exit code 1.
"""


class PlumbingError(Exception):
    """Base class for domain errors."""


class InvalidGraph(PlumbingError):
    pass


class DisconnectedGraph(InvalidGraph):
    pass


class LoopEdge(InvalidGraph):
    pass


class DanglingEdge(InvalidGraph):
    pass


class DuplicateVertexId(InvalidGraph):
    pass


class InvalidParams(PlumbingError):
    pass


class NotALensGraph(PlumbingError):
    pass


class NotNegativeDefinite(PlumbingError):
    pass


class NotTautClass(PlumbingError):
    pass


class NotMinimal(PlumbingError):
    pass


class NoSuchSite(PlumbingError):
    pass


class NotBlowDownable(PlumbingError):
    pass


class LastVertex(NotBlowDownable):
    pass


class InvalidCuspWord(PlumbingError):
    pass


class AllTwos(InvalidCuspWord):
    pass


class UnrepresentableCusp(InvalidCuspWord):
    """The cusp would need a one-vertex cycle, i.e. a loop edge."""


class Unsupported(PlumbingError):
    pass


class InternalConsistencyError(AssertionError):
    """Two independent computations disagree. Always a bug, never bad input."""


class ReducednessViolated(InternalConsistencyError):
    pass


class MalformedString(InternalConsistencyError):
    pass
