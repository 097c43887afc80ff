"""Real block representation of split quaternion matrices.

An m-by-n split quaternion matrix A = A0 + A1*i + A2*j + A3*k is represented
by the 4m-by-4n real matrix

    rep(A) = [[ A0,  A1,  A2, -A3],
              [ A1, -A0,  A3,  A2],
              [ A2, -A3,  A0,  A1],
              [ A3,  A2,  A1, -A0]]

chosen so that it linearizes multiplication twisted by the j-conjugation:

    rep(A) @ stack(X) = stack(A @ j_conjugate(X)),

where stack(X) piles the four coefficient planes of X vertically.  Because
of the twist, rep is not a ring homomorphism; the correction factors are
carried by a family of signed block permutation matrices returned by
`structure_matrices`:

    P: stack(j_conjugate(X)) = P @ stack(X), P^-1 rep(A) P = rep of A~
    Q: stacked right multiplication by i;  Q^-1 rep(A) Q = -rep(A)
    R: stacked right multiplication by -j; R^-1 rep(A) R = rep(A)
    S: stacked right multiplication by k;  S^-1 rep(A) S = -rep(A)
    E: bridges the conjugate transpose and the plain transpose,
       rep(conj_transpose(A)) = E rep(A)^T E (square A only)

All five are orthogonal and involutive up to sign, so inverses are plain
transposes.  `right_scalar_rep` generalizes Q, R, S: it is the matrix of
stacked right multiplication by an arbitrary scalar.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import scalar
from .densemat import SQMatrix
from .errors import NotStructuredError, ShapeMismatchError
from .scalar import SplitQuaternion

__all__ = [
    "StructureSet",
    "real_rep",
    "real_rep_extract",
    "stack",
    "unstack",
    "structure_matrices",
    "right_scalar_rep",
]

# Block (u, v) of rep(A) is _REP_SIGN[u][v] * A_{_REP_COMP[u][v]}.
_REP_COMP = np.array([[0, 1, 2, 3],
                      [1, 0, 3, 2],
                      [2, 3, 0, 1],
                      [3, 2, 1, 0]])
_REP_SIGN = np.array([[1.0, 1.0, 1.0, -1.0],
                      [1.0, -1.0, 1.0, 1.0],
                      [1.0, -1.0, 1.0, 1.0],
                      [1.0, 1.0, 1.0, -1.0]])

_P_TABLE = np.diag([1.0, -1.0, 1.0, -1.0])
_Q_TABLE = np.array([[0.0, -1.0, 0.0, 0.0],
                     [1.0, 0.0, 0.0, 0.0],
                     [0.0, 0.0, 0.0, 1.0],
                     [0.0, 0.0, -1.0, 0.0]])
_R_TABLE = np.array([[0.0, 0.0, -1.0, 0.0],
                     [0.0, 0.0, 0.0, -1.0],
                     [-1.0, 0.0, 0.0, 0.0],
                     [0.0, -1.0, 0.0, 0.0]])
_S_TABLE = np.array([[0.0, 0.0, 0.0, 1.0],
                     [0.0, 0.0, -1.0, 0.0],
                     [0.0, -1.0, 0.0, 0.0],
                     [1.0, 0.0, 0.0, 0.0]])
_E_TABLE = np.diag([1.0, -1.0, -1.0, 1.0])


@dataclass(frozen=True)
class StructureSet:
    """The five 4m-by-4m signed block permutations for one block size m."""

    P: np.ndarray
    Q: np.ndarray
    R: np.ndarray
    S: np.ndarray
    E: np.ndarray


def real_rep(A: SQMatrix) -> np.ndarray:
    """The 4m-by-4n real representation of A."""
    m, n = A.shape
    out = np.empty((4 * m, 4 * n))
    for u in range(4):
        for v in range(4):
            out[u * m:(u + 1) * m, v * n:(v + 1) * n] = (
                _REP_SIGN[u, v] * A.component(_REP_COMP[u, v]))
    return out


def stack(A: SQMatrix) -> np.ndarray:
    """4m-by-n pile of the coefficient planes (A0; A1; A2; A3)."""
    return np.concatenate([A.component(s) for s in range(4)], axis=0)


def unstack(V) -> SQMatrix:
    """Inverse of `stack`."""
    V = np.asarray(V, dtype=float)
    if V.ndim == 1:
        V = V[:, None]
    if V.ndim != 2 or V.shape[0] % 4:
        raise ShapeMismatchError(
            "stacked coordinates need 4m rows, got shape %r" % (V.shape,))
    m = V.shape[0] // 4
    return SQMatrix.from_components(V[:m], V[m:2 * m], V[2 * m:3 * m],
                                    V[3 * m:])


def structure_matrices(m: int) -> StructureSet:
    """Structure matrices for block size m, generated from the 4x4 sign
    tables by a Kronecker product with the identity."""
    if m < 1:
        raise ValueError("block size must be positive")
    eye = np.eye(m)
    return StructureSet(P=np.kron(_P_TABLE, eye),
                        Q=np.kron(_Q_TABLE, eye),
                        R=np.kron(_R_TABLE, eye),
                        S=np.kron(_S_TABLE, eye),
                        E=np.kron(_E_TABLE, eye))


def right_scalar_rep(q: SplitQuaternion, m: int) -> np.ndarray:
    """Matrix of stacked right scalar multiplication:
    right_scalar_rep(q, m) @ stack(X) = stack(X * q) for m-row X."""
    if m < 1:
        raise ValueError("block size must be positive")
    return np.kron(scalar.right_rep(q), np.eye(m))


def real_rep_extract(M, rtol: float = 1e-9) -> SQMatrix:
    """Read A back out of rep(A).

    The four coefficient planes sit in the first block column.  The matrix
    is then rebuilt and compared against the input; a relative mismatch
    above rtol raises NotStructuredError, so arbitrary real matrices are
    rejected rather than silently truncated.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] % 4 or M.shape[1] % 4:
        raise NotStructuredError(
            "a represented matrix has 4m x 4n shape, got %r" % (M.shape,))
    m = M.shape[0] // 4
    n = M.shape[1] // 4
    A = SQMatrix.from_components(M[0:m, 0:n], M[m:2 * m, 0:n],
                                 M[2 * m:3 * m, 0:n], M[3 * m:4 * m, 0:n])
    scale = np.abs(M).max()
    err = np.abs(real_rep(A) - M).max()
    if err > rtol * (1.0 + scale):
        raise NotStructuredError(
            "block structure violated by %g at scale %g" % (err, scale))
    return A
