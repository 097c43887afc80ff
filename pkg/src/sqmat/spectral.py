"""Right coneigenvalues and coneigenvectors of split quaternion matrices.

A right coneigenpair of a square A consists of a nonzero column x and a
scalar lam with

    A @ j_conjugate(x) = x * lam.

`coneigenvalues` returns the ordinary spectrum of the 4n-by-4n real
representation, the candidate set for complex coneigenvalues, and
`coneigenvectors` attempts to recover x for a given complex lam as the
null space of

    rep(A) - right_scalar_rep(lam, n),

a plain real matrix even when lam has an imaginary part.  Recovery does
not succeed at every candidate.  The map x -> A j_conjugate(x) is
antilinear with respect to right multiplication by i, so whenever (x, lam)
is a coneigenpair, (x e^{i t}, lam e^{-2i t}) is one too: complex
coneigenvalues come in full circles of constant modulus.  Those circles
pass through the real eigenvalues of the representation, and at a real
eigenvalue the shifted system above is an ordinary singular eigensystem,
so recovery there always succeeds.  The genuinely complex eigenvalue
quadruples {lam, -lam, conj(lam), -conj(lam)} of the representation are
instead an artifact of flattening the antilinear action to a real matrix;
generically no coneigenvector exists at them and `coneigenvectors` raises
EmptyNullSpaceError, which callers should treat as an answer rather than
a malfunction.  Everything that does come out is residual-checked; cross
checks against the complex adjoint picture and against the shifted
ordinary eigenproblem are provided as separate predicates.

Coneigenvalues are never isolated points: scaling a coneigenvector by a
real beta keeps lam, but scaling by a non-real invertible beta drags lam
through its twisted conjugacy class.  `transform_coneigenpair` implements
that motion.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import densemat, numkernel, realrep, scalar
from .densemat import SQMatrix
from .errors import (
    EmptyNullSpaceError,
    InternalResidualError,
    NonComplexLambdaError,
    NotSquareError,
    ShapeMismatchError,
    ZeroVectorError,
)
from .numkernel import Spectrum
from .scalar import SplitQuaternion

__all__ = [
    "Coneigenpair",
    "coneigenvalues",
    "coneigenvectors",
    "verify_coneigenpair",
    "transform_coneigenpair",
    "eigen_shift_check",
    "adjoint_coneigen_check",
    "spectrum_match_distance",
]


@dataclass(frozen=True)
class Coneigenpair:
    """A value lam, a column vector, and the verified residual of the pair."""

    lam: SplitQuaternion
    vector: SQMatrix
    residual: float


def _require_square(A: SQMatrix):
    if A.rows != A.cols:
        raise NotSquareError("coneigenvalues need a square matrix")


def _as_complex_scalar(lam) -> SplitQuaternion:
    if isinstance(lam, SplitQuaternion):
        return lam
    lam = complex(lam)
    return SplitQuaternion(lam.real, lam.imag, 0.0, 0.0)


def _pair_residual(A: SQMatrix, x: SQMatrix, lam: SplitQuaternion) -> float:
    lhs = densemat.matmul(A, densemat.j_conjugate(x))
    rhs = densemat.matmul(x, SQMatrix.scalar_diag(lam, 1))
    return densemat.frobenius_norm(lhs - rhs)


def coneigenvalues(A: SQMatrix) -> Spectrum:
    """Spectrum of the real representation of A, with multiplicity: the
    candidate set for complex coneigenvalues.  Real members always admit
    coneigenvectors; nonreal members generically admit none (the module
    docstring explains why)."""
    _require_square(A)
    return numkernel.eigenvalues(realrep.real_rep(A))


def coneigenvectors(A: SQMatrix, lam, cutoff: float | None = None):
    """Coneigenvectors of A for the complex value lam.

    Returns a list of n-by-1 columns spanning the recovered coneigenspace,
    each of unit coefficient norm with a deterministic sign.  The null
    space cutoff defaults to 1e-8 * (1 + ||rep(A)||_F), which keeps every
    returned vector's residual well under the verification tolerances used
    elsewhere.  Raises EmptyNullSpaceError when nothing survives; that is
    the expected outcome at nonreal candidates off the coneigenvalue
    circles, not a malfunction.
    """
    _require_square(A)
    lam = _as_complex_scalar(lam)
    if lam.q2 != 0.0 or lam.q3 != 0.0:
        raise NonComplexLambdaError("value %r has a j or k part" % (lam,))
    n = A.rows
    rep = realrep.real_rep(A)
    if cutoff is None:
        cutoff = 1e-8 * (1.0 + float(np.linalg.norm(rep)))
    system = rep - realrep.right_scalar_rep(lam, n)
    basis = numkernel.null_space(system, cutoff)
    vectors = []
    for idx in range(basis.shape[1]):
        col = basis[:, idx]
        anchor = int(np.argmax(np.abs(col)))
        if col[anchor] < 0:
            col = -col
        vectors.append(realrep.unstack(col))
    if not vectors:
        raise EmptyNullSpaceError(
            "no null space at cutoff %g for value %r" % (cutoff, lam))
    return vectors


def verify_coneigenpair(A: SQMatrix, x: SQMatrix, lam,
                        tol: float) -> bool:
    """Residual test of A @ j_conjugate(x) = x * lam, Frobenius norm."""
    _require_square(A)
    if x.cols != 1 or x.rows != A.rows:
        raise ShapeMismatchError("expected an %d-by-1 column, got %r"
                                 % (A.rows, (x.shape,)))
    if densemat.frobenius_norm(x) == 0.0:
        raise ZeroVectorError("the zero column is never a coneigenvector")
    lam = _as_complex_scalar(lam)
    return _pair_residual(A, x, lam) <= tol


def transform_coneigenpair(A: SQMatrix, pair: Coneigenpair,
                           beta: SplitQuaternion) -> Coneigenpair:
    """Move a coneigenpair along the scaling x -> x * j_conjugate(beta).

    The new vector is x * j_conjugate(beta) and the new value is
    j_conjugate(beta)^-1 * lam * beta, so non-real beta genuinely moves the
    value inside its twisted conjugacy class.  beta must be invertible
    (NullDivisorError otherwise).  The transported pair is residual-checked
    before it is returned.
    """
    jbeta = scalar.j_conjugate(beta)
    scalar.inverse(beta)  # raises NullDivisorError for zero divisors
    new_vec = densemat.matmul(pair.vector, SQMatrix.scalar_diag(jbeta, 1))
    new_lam = scalar.mul(scalar.mul(scalar.inverse(jbeta), pair.lam), beta)
    residual = _pair_residual(A, new_vec, new_lam)
    tol = 1e-9 * (1.0 + densemat.frobenius_norm(A)) * (
        1.0 + densemat.frobenius_norm(new_vec))
    if residual > tol:
        raise InternalResidualError(
            "transported pair misses by %g (tolerance %g)" % (residual, tol))
    return Coneigenpair(lam=new_lam, vector=new_vec, residual=residual)


def eigen_shift_check(A: SQMatrix, x: SQMatrix, lam, tol: float) -> bool:
    """Cross-check a coneigenpair against two ordinary eigenproblems.

    For a valid pair, (A @ jI) x = x (lam j) and (jI @ A) jx = jx (j lam)
    where jx is the j-conjugate of x.  Both are verified in Frobenius norm.
    """
    _require_square(A)
    lam = _as_complex_scalar(lam)
    n = A.rows
    j = SplitQuaternion(0, 0, 1, 0)
    jI = SQMatrix.scalar_diag(j, n)

    lhs1 = densemat.matmul(densemat.matmul(A, jI), x)
    rhs1 = densemat.matmul(x, SQMatrix.scalar_diag(scalar.mul(lam, j), 1))
    first = densemat.frobenius_norm(lhs1 - rhs1) <= tol

    xt = densemat.j_conjugate(x)
    lhs2 = densemat.matmul(densemat.matmul(jI, A), xt)
    rhs2 = densemat.matmul(xt, SQMatrix.scalar_diag(scalar.mul(j, lam), 1))
    second = densemat.frobenius_norm(lhs2 - rhs2) <= tol
    return first and second


def adjoint_coneigen_check(A: SQMatrix, x: SQMatrix, lam,
                           tol: float) -> bool:
    """Cross-check a coneigenpair in the complex adjoint picture.

    Writing x = x1 + x2*j with complex columns, the vector y = (x1; conj(x2))
    satisfies complex_adjoint(A) @ conj(y) = lam * y when (x, lam) is a
    coneigenpair with complex lam.  Raises NonComplexLambdaError when lam
    has a j or k part.
    """
    _require_square(A)
    lam = _as_complex_scalar(lam)
    if lam.q2 != 0.0 or lam.q3 != 0.0:
        raise NonComplexLambdaError("value %r has a j or k part" % (lam,))
    lam_c = complex(lam.q0, lam.q1)
    x1, x2 = densemat.complex_decompose(x)
    y = np.vstack([x1, x2.conj()])
    chi = densemat.complex_adjoint(A)
    return bool(np.linalg.norm(chi @ y.conj() - lam_c * y) <= tol)


def spectrum_match_distance(s1: Spectrum, s2: Spectrum) -> float:
    """Largest pairing distance of a greedy nearest-neighbor matching of two
    equally sized eigenvalue multisets.  Greedy is adequate at the small
    sizes used here; it returns 0 only for identical multisets."""
    if s1.count != s2.count:
        raise ValueError("spectra have different sizes")
    left = np.sort_complex(s1.values)
    remaining = list(np.sort_complex(s2.values))
    worst = 0.0
    for v in left:
        gaps = [abs(v - w) for w in remaining]
        pick = int(np.argmin(gaps))
        worst = max(worst, gaps[pick])
        remaining.pop(pick)
    return worst
