"""Dense real and complex linear algebra used by the rest of the package.

Factorizations and eigenvalues are delegated to LAPACK through numpy and
scipy; what this module adds are the contracts the callers rely on:

* `lu_solve` and `complex_lu_solve` refuse to solve once the smallest LU
  pivot falls under a relative threshold, raising SingularError instead of
  returning garbage.
* `solve_general` runs a row echelon elimination with partial pivoting and
  reports one of three outcomes (unique, underdetermined, inconsistent).
  Underdetermined systems get the particular solution with all free
  variables set to zero plus a null space basis built from the free
  columns.  That choice is deterministic and is relied on by callers.
* `vec`/`unvec` fix the column-major vectorization convention used with
  `kron`: vec(M @ Y @ N) = kron(N.T, M) @ vec(Y).
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import NoConvergenceError, SingularError

__all__ = [
    "SolveKind",
    "LinearSolveOutcome",
    "Spectrum",
    "lu_solve",
    "complex_lu_solve",
    "solve_general",
    "null_space",
    "kron",
    "vec",
    "unvec",
    "eigenvalues",
]

PIVOT_RTOL = 1e-10


class SolveKind(enum.Enum):
    UNIQUE = "unique"
    UNDERDETERMINED = "underdetermined"
    INCONSISTENT = "inconsistent"


@dataclass
class LinearSolveOutcome:
    kind: SolveKind
    particular: np.ndarray | None
    null_basis: np.ndarray
    rank: int

    @property
    def nullity(self) -> int:
        return self.null_basis.shape[1]


@dataclass
class Spectrum:
    """Eigenvalue multiset, sorted by real part then imaginary part."""

    values: np.ndarray

    @property
    def count(self) -> int:
        return self.values.shape[0]


def _scale(M):
    M = np.asarray(M)
    return float(np.abs(M).max()) if M.size else 0.0


def _checked_lu(M, rtol):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        lu, piv = scipy.linalg.lu_factor(M, check_finite=True)
    smallest = float(np.abs(np.diag(lu)).min()) if lu.shape[0] else 0.0
    threshold = rtol * max(_scale(M), np.finfo(float).tiny)
    if smallest <= threshold:
        raise SingularError(
            "smallest LU pivot %g under threshold %g" % (smallest, threshold))
    return lu, piv


def lu_solve(M, K, rtol: float = PIVOT_RTOL) -> np.ndarray:
    """Solve M @ X = K for square real M via LU with partial pivoting.

    Raises SingularError when the smallest pivot magnitude drops below
    rtol times the largest entry magnitude of M.
    """
    M = np.asarray(M, dtype=float)
    K = np.asarray(K, dtype=float)
    lu, piv = _checked_lu(M, rtol)
    return scipy.linalg.lu_solve((lu, piv), K)


def complex_lu_solve(M, K, rtol: float = PIVOT_RTOL) -> np.ndarray:
    """Same contract as `lu_solve` for complex systems."""
    M = np.asarray(M, dtype=complex)
    K = np.asarray(K, dtype=complex)
    lu, piv = _checked_lu(M, rtol)
    return scipy.linalg.lu_solve((lu, piv), K)


def solve_general(M, k, rtol: float = PIVOT_RTOL) -> LinearSolveOutcome:
    """Row echelon solve of M @ x = k for any shape and rank.

    Entries below rtol * max|M| never become pivots.  Consistency of the
    eliminated right hand side is judged at rtol * (1 + max|k|).  The
    particular solution sets every free variable to zero; the null basis has
    one column per free variable, with a 1 in that variable's slot.
    """
    A = np.array(M, dtype=float, copy=True)
    if A.ndim != 2:
        raise ValueError("matrix must be 2-d")
    rhs = np.array(k, dtype=float, copy=True).reshape(-1)
    p, q = A.shape
    if rhs.shape[0] != p:
        raise ValueError("rhs length %d does not match %d rows"
                         % (rhs.shape[0], p))
    pivot_threshold = rtol * max(_scale(A), np.finfo(float).tiny)
    rhs_threshold = rtol * (1.0 + _scale(rhs))

    pivot_cols = []
    row = 0
    for col in range(q):
        if row == p:
            break
        sub = np.abs(A[row:, col])
        best = int(np.argmax(sub)) + row
        if np.abs(A[best, col]) <= pivot_threshold:
            continue
        if best != row:
            A[[row, best]] = A[[best, row]]
            rhs[[row, best]] = rhs[[best, row]]
        factors = A[row + 1:, col] / A[row, col]
        A[row + 1:, col:] -= np.outer(factors, A[row, col:])
        A[row + 1:, col] = 0.0
        rhs[row + 1:] -= factors * rhs[row]
        pivot_cols.append(col)
        row += 1
    rank = row

    free_cols = [c for c in range(q) if c not in set(pivot_cols)]
    null_basis = np.zeros((q, len(free_cols)))
    for idx, fc in enumerate(free_cols):
        v = null_basis[:, idx]
        v[fc] = 1.0
        for r in range(rank - 1, -1, -1):
            pc = pivot_cols[r]
            v[pc] = -(A[r, pc + 1:] @ v[pc + 1:]) / A[r, pc]

    consistent = bool(np.all(np.abs(rhs[rank:]) <= rhs_threshold))
    if not consistent:
        return LinearSolveOutcome(SolveKind.INCONSISTENT, None, null_basis,
                                  rank)

    x = np.zeros(q)
    for r in range(rank - 1, -1, -1):
        pc = pivot_cols[r]
        x[pc] = (rhs[r] - A[r, pc + 1:] @ x[pc + 1:]) / A[r, pc]
    kind = SolveKind.UNIQUE if rank == q else SolveKind.UNDERDETERMINED
    return LinearSolveOutcome(kind, x, null_basis, rank)


def null_space(M, cutoff: float) -> np.ndarray:
    """Orthonormal basis (columns) of the null space of M.

    Built from the right singular vectors whose singular values are at most
    `cutoff`; the residual of each returned column is therefore bounded by
    the cutoff itself.
    """
    M = np.asarray(M, dtype=float)
    _, s, vh = np.linalg.svd(M)
    n = M.shape[1]
    keep = [idx for idx in range(n)
            if idx >= s.shape[0] or s[idx] <= cutoff]
    return vh[keep].T.copy() if keep else np.zeros((n, 0))


def kron(M, N) -> np.ndarray:
    """Kronecker product, the companion of `vec`:
    vec(M @ Y @ N) = kron(N.T, M) @ vec(Y)."""
    return np.kron(np.asarray(M), np.asarray(N))


def vec(M) -> np.ndarray:
    """Column-major vectorization."""
    return np.asarray(M).flatten(order="F")


def unvec(v, rows: int, cols: int) -> np.ndarray:
    v = np.asarray(v)
    if v.size != rows * cols:
        raise ValueError("cannot fold %d entries into %dx%d"
                         % (v.size, rows, cols))
    return v.reshape((rows, cols), order="F")


def eigenvalues(M) -> Spectrum:
    """All eigenvalues of a square real matrix, sorted by (real, imag).

    Raises NoConvergenceError when the QR iteration underneath gives up.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("eigenvalues need a square matrix")
    try:
        values = np.linalg.eigvals(M)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(str(exc)) from exc
    return Spectrum(np.sort_complex(values))
