"""Exception types shared across the package."""


class RamqError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(RamqError, ValueError):
    """A parameter lies outside the admissible range of an operation."""


class NonConvergence(RamqError):
    """The simultaneous root iteration failed to reach its residual target."""


class RealAxisPole(DomainError):
    """A denominator root lies on (or too close to) the real axis."""


class DegreeGapError(DomainError):
    """deg(den) - deg(num) is below the minimum required by the operation."""


class ParityError(DomainError):
    """The rational function is neither even nor odd."""


class BaseMismatch(RamqError):
    """Binary jet arithmetic on jets with different base points or orders."""


class DivisionByZeroJet(RamqError):
    """Jet reciprocal or logarithm of a jet with (near-)zero constant term."""


class BranchCut(RamqError):
    """The base value of a jet logarithm sits on the branch cut ray."""


class PoleOrderMismatch(RamqError):
    """The stated pole multiplicity disagrees with the local denominator jet."""


class RadiusTooLarge(RamqError):
    """A contour circle would come too close to another pole or the real axis."""
