"""Exception hierarchy shared across the package.

Everything user-facing derives from AlgebraError so the CLI can map any
input problem (bad file, bad arguments, parametric table where constants
are required, inadmissible parameters) to exit code 2. Mathematical
failures are never exceptions; they travel as Verdict values.
"""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(AlgebraError):
    """Malformed .alg or change document. Carries a 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class ParametricError(AlgebraError):
    """A constants-only operation was handed parametric data."""


class MissingParameterError(AlgebraError):
    """An evaluation assignment omits a parameter that occurs in the data."""


class DimensionMismatchError(AlgebraError):
    """Vectors, matrices or tables of incompatible dimensions were mixed."""


class NotAnIdealError(AlgebraError):
    """A subspace handed to quotient construction fails ideal closure."""


class AdmissibilityError(AlgebraError):
    """Constructor arguments violate the family's admissibility condition."""


class BasisChangeError(AlgebraError):
    """A change-of-basis matrix is singular or has a non-constant determinant."""
