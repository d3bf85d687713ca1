"""Exception types shared across the package."""


class ConvexProjError(Exception):
    """Base class for all package errors."""


class InvalidInputError(ConvexProjError):
    """Raised on malformed numerical input (zero matrix, bad shapes, ...)."""


class KernelHitError(ConvexProjError):
    """A point was applied to a singular map whose kernel contains it."""


class NoLimitError(ConvexProjError):
    """A matrix sequence has no convergent normalized tail."""


class NotInteriorError(ConvexProjError):
    """An operation required an interior point of the domain."""


class NotOnBoundaryError(ConvexProjError):
    """An operation required a boundary point of the domain."""


class DomainNotPreservedError(ConvexProjError):
    """A map failed the sampled check that it preserves the domain."""


class UncertifiedError(ConvexProjError):
    """A separation / certification step failed to certify its output."""


class GraphConstructionError(ConvexProjError):
    """The boundary could not be written as a graph in the adapted chart."""


class NoRealLogarithmError(ConvexProjError):
    """A matrix has no usable real logarithm."""


class OverlappingSupportsError(ConvexProjError):
    """Convex sum requested for summands whose projective supports meet."""


class InconsistentFamilyError(ConvexProjError):
    """A one-parameter family fails the relation it was asked to satisfy."""
