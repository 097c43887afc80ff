"""Exception types shared across the package.

Everything derives from SqmatError so callers can catch the whole family at
once.  The split into many small classes mirrors how the operations fail:
algebraic obstructions (zero divisors, mismatched causal characters), input
contract violations (shapes, real inputs where a non-real one is required)
and numerical breakdowns (singular systems, failed residual checks).
"""


class SqmatError(Exception):
    """Base class for all errors raised by this package."""


class ShapeMismatchError(SqmatError):
    """Operands do not conform (wrong dimensions for the operation)."""


class NotSquareError(SqmatError):
    """A square matrix was required."""


class NullDivisorError(SqmatError):
    """The element is a zero divisor (vanishing quadratic form), so it
    cannot be inverted."""


class MixedCharacterError(SqmatError):
    """Two scalars were required to share a causal character (both timelike
    or both spacelike) and do not."""


class RealInputError(SqmatError):
    """The operation is undefined for real scalars (zero vector part)."""


class ZeroNormError(SqmatError):
    """The scalar has zero norm, so the construction degenerates."""


class DegenerateDenominatorError(SqmatError):
    """An intermediate denominator has zero norm."""


class FormulaInapplicableError(SqmatError):
    """The closed-form construction does not produce a verified answer for
    this input.  Raised after a failed post-verification, never silently."""


class SingularError(SqmatError):
    """A linear system's coefficient matrix is singular at the pivot
    threshold."""


class NotStructuredError(SqmatError):
    """A real matrix does not carry the block structure of a represented
    split quaternion matrix."""


class NoConvergenceError(SqmatError):
    """The eigenvalue iteration failed to converge."""


class EmptyNullSpaceError(SqmatError):
    """No null space vector was found where one was expected."""


class ZeroVectorError(SqmatError):
    """A nonzero vector was required."""


class NonComplexLambdaError(SqmatError):
    """The value must lie in the complex slice (no j or k part)."""


class InternalResidualError(SqmatError):
    """A computed answer failed its residual verification; indicates a bug
    or an ill-conditioned instance rather than bad user input."""
