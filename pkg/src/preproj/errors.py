"""Exception types raised by the library."""


class PreprojError(Exception):
    """Base class for all library errors."""


class NonDynkinError(PreprojError, ValueError):
    """The underlying graph is not a simply laced Dynkin diagram."""


class MalformedSpecError(PreprojError, ValueError):
    """A quiver description could not be read."""


class DegreeBoundExceeded(PreprojError, RuntimeError):
    """The graded construction of the algebra did not terminate in time."""


class SocleNotSimple(PreprojError, RuntimeError):
    """An indecomposable projective was found to have a non-simple socle."""


class RelationViolated(PreprojError, RuntimeError):
    """Action matrices fail the preprojective relation."""


class NotSupportTauTilting(PreprojError, RuntimeError):
    """A pair failed one of the support tau-tilting conditions."""


class ApproximationNotMinimal(PreprojError, RuntimeError):
    """A left approximation could not be certified as minimal."""


class GMismatch(PreprojError, RuntimeError):
    """The two g-matrix computations disagree."""
