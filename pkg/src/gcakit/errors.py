"""Exception types raised by the geometric core and the model loaders."""


class GcakitError(Exception):
    """Base class for all package errors."""


class GeometryError(GcakitError):
    """A geometric construction degenerated (coincident points, zero vectors...)."""


class DegenerateLine(GeometryError):
    """Join of two projectively coincident points."""


class DegeneratePlane(GeometryError):
    """Plane through three collinear points."""


class CoincidentPlanes(GeometryError):
    """Meet of two projectively identical planes."""


class ZeroDirection(GeometryError):
    """A direction vector with (numerically) zero length."""


class DegenerateMoment(GeometryError):
    """A constraint moment whose torque axis has (numerically) zero length."""


class ZeroLegLength(GeometryError):
    """A leg of zero length (platform anchor coincides with base anchor)."""


class ZeroRodLength(GeometryError):
    """A rod whose two spherical-joint centers coincide."""


class UAxisParallelToLeg(GeometryError):
    """Fixed U-joint axis parallel to the leg; the second axis is undefined."""


class InvariantViolation(GcakitError):
    """A model description violates one of its structural invariants."""


class ParallelogramViolation(InvariantViolation):
    """A parallelogram leg whose two rods are not equal and parallel."""


class NotDeltaConfiguration(InvariantViolation):
    """Leg I is not a parallelogram, so the Delta reduction does not apply."""


class ParseError(GcakitError):
    """A model file that cannot be parsed into a description.

    Carries optional ``path`` and ``field`` attributes naming the offender.
    """

    def __init__(self, message, path=None, field=None):
        super().__init__(message)
        self.path = path
        self.field = field


class OracleDisagreement(GcakitError):
    """A closed-form value and its determinant oracle disagree; internal error."""
