"""Exception hierarchy shared by all realgrass modules."""


class RealgrassError(Exception):
    """Base class for all domain errors raised by this library."""


class NotInvolution(RealgrassError):
    """A matrix expected to square to the identity does not."""


class RankMismatch(RealgrassError):
    """Ambient rank and sublattice rank are incompatible."""


class NonFiniteType(RealgrassError):
    """Reflection closure of a root system exceeded the finite-type bound."""


class NotFiniteType(RealgrassError):
    """A Cartan matrix is not of finite type."""


class BoundExceeded(RealgrassError):
    """An enumeration exceeded its configured bound."""


class NotDominant(RealgrassError):
    """A coweight argument was required to be dominant but is not."""


class NotWeylInvariant(RealgrassError):
    """A weight map is not constant on Weyl orbits."""


class UnknownLabel(RealgrassError):
    """No catalog entry with the requested label."""


class CatalogInvalid(RealgrassError):
    """A catalog record failed validation; signals a data bug."""


class InvariantViolation(RealgrassError):
    """A constructed involution failed the real-form invariant suite."""


class InternalInconsistency(RealgrassError):
    """A postcondition cross-check failed; signals a pipeline bug."""


class Mismatch(RealgrassError):
    """A classification report row disagrees with its stored expectation."""


class NotInImageLattice(RealgrassError):
    """A vector expected in the projected torus lattice is not in it."""
