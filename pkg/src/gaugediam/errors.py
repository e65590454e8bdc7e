"""Typed errors shared across the package."""


class GeometryError(Exception):
    """Base class for all gaugediam errors."""


class EmptyInput(GeometryError):
    """No points supplied where at least one is required."""


class Degenerate(GeometryError):
    """A full-dimensional polygon was required but a point/segment was given."""


class GaugeDegenerate(Degenerate):
    """The gauge is not full-dimensional or lacks 0 in its interior."""


class BodyDegenerate(Degenerate):
    """The body is not full-dimensional where required."""


class OriginNotInterior(GeometryError):
    """0 must lie strictly inside the polygon for this operation."""


class OriginOutside(GeometryError):
    """0 must lie inside (boundary allowed) the polygon for this operation."""


class ZeroDirection(GeometryError):
    """Direction vectors must be nonzero."""


class SingularMatrix(GeometryError):
    """Linear maps must be non-singular."""


class ParamOutOfRange(GeometryError):
    """Family parameter outside its documented domain."""


class DegenerateSample(GeometryError):
    """Random hull sampling failed to produce a full-dimensional body."""


class EmptyIntersection(GeometryError):
    """A halfplane intersection expected to be nonempty came out empty."""


class PointBody(GeometryError):
    """Diagram points are undefined for single-point bodies."""


class NumericalBreakdown(GeometryError):
    """LP constraint conditioning beyond recovery; caller may perturb."""


class ConsistencyError(GeometryError):
    """Two independent computation routes disagreed beyond tolerance."""
