"""Exception hierarchy.

Every error raised for a well-formed but semantically invalid request derives
from :class:`MeasureError`; the command line maps that family to exit code 2.
"""


class MeasureError(ValueError):
    """Base class for semantic errors (bad combination of valid inputs)."""


class SpaceMismatchError(MeasureError):
    """Operands live on different measurable spaces or grids."""


class EmptyFamilyError(MeasureError):
    """A decomposition was requested against an empty family of sets."""


class PreconditionError(MeasureError):
    """An operation's precondition does not hold for the given arguments."""


class SizeLimitError(MeasureError):
    """An exhaustive enumeration would exceed its documented size cap."""


class SpectralAxiomError(MeasureError):
    """Projections supplied for a spectral measure violate an axiom."""


class NotIdempotentError(SpectralAxiomError):
    pass


class NotHermitianError(SpectralAxiomError):
    pass


class NotOrthogonalError(SpectralAxiomError):
    """Projections attached to distinct outcomes do not multiply to zero."""


class IncompleteError(SpectralAxiomError):
    """Projections do not sum to the identity."""


class NonNormalError(MeasureError):
    pass


class EigensolverError(MeasureError):
    pass


class ShapeMismatchError(MeasureError):
    """Vector or matrix dimensions do not match the Hilbert space."""
