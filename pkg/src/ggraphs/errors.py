"""Exception types shared across the package."""


class GGraphError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(GGraphError, ValueError):
    """A constructor argument is outside its documented domain."""


class SizeLimitError(GGraphError):
    """A documented size bound (table size, radius, dimension) was exceeded."""


class ClosureOverflowError(SizeLimitError):
    """Permutation/subgroup closure grew past the supported group order."""


class NotAGeneratingSetError(GGraphError, ValueError):
    """The given elements do not generate the whole group."""


class TooLargeError(SizeLimitError):
    """Graph exceeds the size bound of the generic isomorphism machinery."""


class InvalidPartitionError(GGraphError, ValueError):
    """Supplied vertex partition is malformed or has an intra-class edge."""


class InvalidInputError(GGraphError, ValueError):
    """Input graph violates a precondition (e.g. not bipartite)."""


class InvalidMatrixError(GGraphError, ValueError):
    """Matrix input is not symmetric or otherwise malformed."""


class InvalidPairError(GGraphError, ValueError):
    """Two arguments that must describe the same object do not match."""
