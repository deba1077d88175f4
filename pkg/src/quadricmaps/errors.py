"""Exception hierarchy. The CLI maps these onto exit codes."""


class QuadricMapsError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(QuadricMapsError, ValueError):
    """Bad user-supplied data (degrees, invariants, preset names, files)."""


class InvalidDegree(InvalidInput):
    pass


class InvalidInvariants(InvalidInput):
    pass


class UnknownPreset(InvalidInput):
    pass


class ParityError(InvalidInput):
    pass


class DegenerateInput(InvalidInput):
    pass


class NotAWitness(QuadricMapsError):
    """Supplied polynomials do not satisfy sum(phi_i^2) = F * G."""


class ContractViolation(QuadricMapsError):
    """A precondition of an internal operation was not met."""
