"""Exception types shared across the package.

Every error raised on purpose derives from GeometryError so callers can
distinguish domain failures from plain bugs.  NonDivisible is special: in the
shipped coefficient pipelines it is unreachable, so seeing it escape means an
internal invariant was violated (the CLI maps it to its own exit code).
"""


class GeometryError(Exception):
    """Base class for all deliberate failures in this package."""


class NonDivisible(GeometryError):
    """A characteristic power was asked to divide more often than it appears.

    Signals that the requested quantity does not exist in the given space.
    """


class PoleError(GeometryError):
    """Generalized tangent evaluated where the generalized cosine vanishes."""


class InconsistentPair(GeometryError):
    """A (cosine-like, sine-like) pair does not satisfy its defining identity."""


class DomainError(GeometryError):
    """A measure inversion was attempted outside the invertible range."""


class OnAbsolute(GeometryError):
    """The raw vector has zero self-product and admits no unit representative."""


class NegativeNorm(GeometryError):
    """The raw vector has negative self-product; no real unit scaling exists."""

    def __init__(self, message, value=None):
        super().__init__(message)
        self.value = value


class DimensionMismatch(GeometryError):
    """Operands live in different spaces or have incompatible shapes."""


class DegenerateTriangle(GeometryError):
    """Triangle vertices are proportional or a side has no real, nonzero length."""


class NoSolution(GeometryError):
    """A triangle solver inversion left the governing function's range."""


class SingularBasis(GeometryError):
    """Simplex vertices are linearly dependent (or otherwise unusable as a basis)."""
