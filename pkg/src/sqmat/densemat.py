"""Dense matrices over the split quaternions.

An SQMatrix stores its entries as an (m, n, 4) float array, one coefficient
plane per basis element 1, i, j, k.  Multiplication contracts against the
algebra's structure tensor, so the whole product is a single einsum.

Two features of the ring leak into the matrix level and are worth keeping in
mind: entrywise conjugation is not multiplicative over products, and the
plain transpose does not reverse products either, so conj_transpose is the
only involutive antihomomorphism available.  The complex adjoint view
(`complex_adjoint`) writes A = A1 + A2*j with complex blocks and represents
A as the 2m-by-2n complex matrix [[A1, A2], [conj(A2), conj(A1)]]; it is
additive and multiplicative, and inverses commute with it.

Inversion goes through the 4n-by-4n real representation of `realrep`, which
turns singularity of A into ordinary singularity of a real matrix.
"""

from __future__ import annotations

import numpy as np

from . import scalar
from .errors import NotSquareError, ShapeMismatchError
from .scalar import MUL_TENSOR, SplitQuaternion

__all__ = [
    "SQMatrix",
    "add",
    "scale",
    "matmul",
    "transpose",
    "conjugate",
    "conj_transpose",
    "j_conjugate",
    "frobenius_norm",
    "allclose",
    "complex_decompose",
    "complex_adjoint",
    "complex_stack",
    "mul_via_adjoint",
    "inverse",
    "consim_transform",
    "verify_consimilar",
]

_CONJ_SIGNS = np.array([1.0, -1.0, -1.0, -1.0])
_JCONJ_SIGNS = np.array([1.0, -1.0, 1.0, -1.0])


class SQMatrix:
    """Immutable m-by-n matrix of split quaternions."""

    __slots__ = ("data",)

    def __init__(self, data):
        arr = np.array(data, dtype=float)
        if arr.ndim != 3 or arr.shape[2] != 4:
            raise ValueError("expected an (m, n, 4) coefficient array, got "
                             "shape %r" % (arr.shape,))
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("matrix dimensions must be positive")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        arr = np.ascontiguousarray(arr)
        arr.flags.writeable = False
        self.data = arr

    # -- construction helpers -------------------------------------------

    @classmethod
    def zeros(cls, m, n):
        return cls(np.zeros((m, n, 4)))

    @classmethod
    def identity(cls, n):
        d = np.zeros((n, n, 4))
        d[np.arange(n), np.arange(n), 0] = 1.0
        return cls(d)

    @classmethod
    def scalar_diag(cls, q: SplitQuaternion, n: int):
        """n-by-n matrix with q on the diagonal (q*I)."""
        d = np.zeros((n, n, 4))
        d[np.arange(n), np.arange(n)] = scalar.coords(q)
        return cls(d)

    @classmethod
    def from_rows(cls, rows):
        """Build from nested lists whose items are SplitQuaternion values or
        4-item coefficient sequences."""
        m = len(rows)
        n = len(rows[0]) if m else 0
        d = np.zeros((m, n, 4))
        for i, r in enumerate(rows):
            if len(r) != n:
                raise ValueError("ragged rows")
            for j, item in enumerate(r):
                if isinstance(item, SplitQuaternion):
                    d[i, j] = item.coeffs
                elif isinstance(item, (int, float)):
                    d[i, j, 0] = item
                else:
                    d[i, j] = np.asarray(item, dtype=float)
        return cls(d)

    @classmethod
    def from_components(cls, a0, a1, a2, a3):
        return cls(np.stack([np.asarray(a0, dtype=float),
                             np.asarray(a1, dtype=float),
                             np.asarray(a2, dtype=float),
                             np.asarray(a3, dtype=float)], axis=-1))

    @classmethod
    def from_complex_parts(cls, c1, c2):
        """Inverse of complex_decompose: A = C1 + C2*j."""
        c1 = np.asarray(c1, dtype=complex)
        c2 = np.asarray(c2, dtype=complex)
        return cls.from_components(c1.real, c1.imag, c2.real, c2.imag)

    @classmethod
    def from_real(cls, r):
        r = np.asarray(r, dtype=float)
        return cls.from_components(r, np.zeros_like(r), np.zeros_like(r),
                                   np.zeros_like(r))

    # -- basic shape and access -----------------------------------------

    @property
    def rows(self):
        return self.data.shape[0]

    @property
    def cols(self):
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape[:2]

    def component(self, s: int) -> np.ndarray:
        """Coefficient plane s (0..3) as an (m, n) array."""
        return self.data[:, :, s]

    def entry(self, i: int, j: int) -> SplitQuaternion:
        return scalar.from_coords(self.data[i, j])

    def __eq__(self, other):
        if not isinstance(other, SQMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(
            np.array_equal(self.data, other.data))

    __hash__ = None

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1.0, other))

    def __neg__(self):
        return scale(-1.0, self)

    def __matmul__(self, other):
        return matmul(self, other)

    def __repr__(self):
        return "SQMatrix(%dx%d)" % self.shape


def _same_shape(A: SQMatrix, B: SQMatrix):
    if A.shape != B.shape:
        raise ShapeMismatchError("shapes %r and %r differ"
                                 % (A.shape, B.shape))


def add(A: SQMatrix, B: SQMatrix) -> SQMatrix:
    _same_shape(A, B)
    return SQMatrix(A.data + B.data)


def scale(c: float, A: SQMatrix) -> SQMatrix:
    """Real scalar multiple."""
    return SQMatrix(float(c) * A.data)


def matmul(A: SQMatrix, B: SQMatrix) -> SQMatrix:
    if A.cols != B.rows:
        raise ShapeMismatchError(
            "cannot multiply %dx%d by %dx%d" % (A.shape + B.shape))
    return SQMatrix(np.einsum("ija,jkb,abc->ikc", A.data, B.data, MUL_TENSOR))


def transpose(A: SQMatrix) -> SQMatrix:
    return SQMatrix(A.data.transpose(1, 0, 2))


def conjugate(A: SQMatrix) -> SQMatrix:
    """Entrywise conjugation.  Not multiplicative over matrix products."""
    return SQMatrix(A.data * _CONJ_SIGNS)


def conj_transpose(A: SQMatrix) -> SQMatrix:
    return SQMatrix(A.data.transpose(1, 0, 2) * _CONJ_SIGNS)


def j_conjugate(A: SQMatrix) -> SQMatrix:
    """Entrywise j*q*j.  Multiplicative over products and an involution."""
    return SQMatrix(A.data * _JCONJ_SIGNS)


def frobenius_norm(A: SQMatrix) -> float:
    """Euclidean norm of the full coefficient array (all four planes)."""
    return float(np.linalg.norm(A.data))


def allclose(A: SQMatrix, B: SQMatrix, tol: float) -> bool:
    _same_shape(A, B)
    return frobenius_norm(A - B) <= tol


def complex_decompose(A: SQMatrix):
    """Complex blocks (A1, A2) with A = A1 + A2*j, using k = i*j."""
    d = A.data
    return (d[:, :, 0] + 1j * d[:, :, 1], d[:, :, 2] + 1j * d[:, :, 3])


def complex_adjoint(A: SQMatrix) -> np.ndarray:
    """2m-by-2n complex matrix [[A1, A2], [conj(A2), conj(A1)]].

    Additive and multiplicative in A, and compatible with inversion; a
    one-line counterexample shows it does not commute with the conjugate
    transpose, so no identity of that shape is used anywhere.
    """
    a1, a2 = complex_decompose(A)
    return np.block([[a1, a2], [a2.conj(), a1.conj()]])


def complex_stack(A: SQMatrix) -> np.ndarray:
    """Column identification: the 2m-by-n complex array (A1; A2)."""
    a1, a2 = complex_decompose(A)
    return np.vstack([a1, a2])


def mul_via_adjoint(A: SQMatrix, B: SQMatrix) -> SQMatrix:
    """Product A @ B computed in the complex adjoint picture.

    The row identification (A1^T; A2^T) intertwines right multiplication:
    with T(X) = (X1^T; X2^T) one has T(A @ B) = complex_adjoint(B).T @ T(A).
    The column identification (A1; A2) does not satisfy the analogous law
    for matrices (only for scalars), which is why rows are used here.
    """
    if A.cols != B.rows:
        raise ShapeMismatchError(
            "cannot multiply %dx%d by %dx%d" % (A.shape + B.shape))
    a1, a2 = complex_decompose(A)
    stacked = np.vstack([a1.T, a2.T])
    prod = complex_adjoint(B).T @ stacked
    n = B.cols
    return SQMatrix.from_complex_parts(prod[:n].T, prod[n:].T)


def inverse(A: SQMatrix, rtol: float = 1e-10) -> SQMatrix:
    """Inverse through the real representation.

    rep(A) is inverted with LU (SingularError propagates when A is not
    invertible), the representation of the inverse is recovered as
    P @ rep(A)^-1 @ P with the block sign matrix P, and the entries are read
    back out.  The final structure validation inside `real_rep_extract`
    guards against silent corruption.
    """
    from . import numkernel, realrep

    if A.rows != A.cols:
        raise NotSquareError("only square matrices can be inverted")
    rep = realrep.real_rep(A)
    rep_inv = numkernel.lu_solve(rep, np.eye(rep.shape[0]), rtol=rtol)
    P = realrep.structure_matrices(A.rows).P
    return realrep.real_rep_extract(P @ rep_inv @ P)


def consim_transform(A: SQMatrix, P: SQMatrix) -> SQMatrix:
    """j_conjugate(P) @ A @ P^-1, the twisted change of basis."""
    if A.rows != A.cols:
        raise NotSquareError("consimilarity transforms square matrices")
    if P.rows != P.cols or P.rows != A.rows:
        raise ShapeMismatchError("transform shape %r does not match %r"
                                 % (P.shape, A.shape))
    return matmul(matmul(j_conjugate(P), A), inverse(P))


def verify_consimilar(A: SQMatrix, B: SQMatrix, P: SQMatrix,
                      tol: float) -> bool:
    """Check j_conjugate(P) @ A @ P^-1 = B in Frobenius norm."""
    _same_shape(A, B)
    return frobenius_norm(consim_transform(A, P) - B) <= tol
