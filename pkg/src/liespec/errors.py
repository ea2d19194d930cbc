"""Exception hierarchy shared by the whole toolkit."""

from __future__ import annotations


class ToolkitError(Exception):
    """Base class for every error raised by this package."""


class ShapeError(ToolkitError):
    """Matrix dimensions do not match the requested operation."""


class NotSquareError(ToolkitError):
    """Operation requires a square matrix."""


class AmbientMismatchError(ToolkitError):
    """Subspaces live in different ambient dimensions."""


class DimensionMismatchError(ToolkitError):
    """Vector length does not match the algebra or module dimension."""


class AlgebraMismatchError(ToolkitError):
    """Representations are defined over different Lie algebras."""


class SideMismatchError(ToolkitError):
    """Unsupported left/right module-side combination."""


class JacobiError(ToolkitError):
    """Structure constants violate the Jacobi identity.

    Carries the violating basis triple as ``triple`` (names) and ``indices``.
    """

    def __init__(self, indices, names):
        self.indices = tuple(indices)
        self.triple = tuple(names)
        super().__init__(f"Jacobi identity fails on triple {self.triple}")


class NotACharacterError(ToolkitError):
    """Values do not vanish on the derived subalgebra."""


class NotSolvableError(ToolkitError):
    """Operation requires a solvable Lie algebra."""


class NotNilpotentError(ToolkitError):
    """Operation requires a nilpotent Lie algebra."""


class NotSemisimpleError(ToolkitError):
    """Operation requires a semisimple Lie algebra."""


class NonSplitError(ToolkitError):
    """A characteristic polynomial has no full set of rational roots.

    Raised instead of approximating; exact weight data would be silently
    wrong otherwise.
    """


class UnsupportedAlgebraError(ToolkitError):
    """Algebra is neither solvable nor semisimple where that is required."""


class DifferentialSquareError(ToolkitError):
    """d∘d is nonzero; the coefficient module is not a valid module."""


class NotACocycleError(ToolkitError):
    """Extension data fails Jacobi; carries the violating triple."""

    def __init__(self, triple):
        self.triple = tuple(triple)
        super().__init__(f"cocycle condition fails on triple {self.triple}")


class BaseMismatchError(ToolkitError):
    """Module is not defined over the base of the extension."""


class NotASubalgebraError(ToolkitError):
    """Subspace is not closed under the bracket."""


class RankTooLargeError(ToolkitError):
    """Root-system rank exceeds the supported desk scale."""


class UnknownNameError(ToolkitError):
    """No catalog entry with the requested name."""


class BadParamsError(ToolkitError):
    """Catalog parameters are missing, extra, or out of range."""


class SchemaError(ToolkitError):
    """Input JSON does not match the documented schema."""
