"""Solver for the twisted Stein equation X - A @ j_conjugate(X) @ B = C.

The unknown X is m-by-n over the split quaternions, with square A (m-by-m)
and B (n-by-n).  The real representation turns the equation into an
ordinary real Stein equation

    Y - rep(A) @ Y @ rep(B) = rep(C)

whose solutions are not automatically of represented form.  The pipeline is

    build_real_equation -> solve_real_stein -> project_solution
        -> extract_solution

where the projection averages Y with three sign-twisted transports of
itself (every one of them is again a solution) and always lands on a
represented matrix; extraction reads X back out.  `solve` composes the
pipeline, classifies uniqueness from the real system, residual-checks the
answer against the original equation, and for underdetermined systems
additionally canonicalizes the reported particular solution (see
`solve` for the exact rule).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import densemat, numkernel, realrep
from .densemat import SQMatrix
from .errors import (
    InternalResidualError,
    NotSquareError,
    ShapeMismatchError,
)
from .numkernel import LinearSolveOutcome, SolveKind

__all__ = [
    "SteinProblem",
    "SteinSolution",
    "Uniqueness",
    "MAX_ENTRIES",
    "build_real_equation",
    "solve_real_stein",
    "project_solution",
    "extract_solution",
    "residual",
    "solve",
]

# The dense kronecker system has (4m * 4n)^2 coefficients; 64 entries for X
# keeps it at a 256 x 256 solve, comfortably exact territory.
MAX_ENTRIES = 64


class Uniqueness(enum.Enum):
    UNIQUE = "unique"
    NONUNIQUE = "nonunique"
    NO_SOLUTION = "nosolution"


@dataclass(frozen=True)
class SteinProblem:
    """Data (A, B, C) of X - A @ j_conjugate(X) @ B = C, shape checked."""

    A: SQMatrix
    B: SQMatrix
    C: SQMatrix

    def __post_init__(self):
        if self.A.rows != self.A.cols:
            raise NotSquareError("A must be square, got %r"
                                 % (self.A.shape,))
        if self.B.rows != self.B.cols:
            raise NotSquareError("B must be square, got %r"
                                 % (self.B.shape,))
        if self.C.rows != self.A.rows or self.C.cols != self.B.rows:
            raise ShapeMismatchError(
                "C must be %d-by-%d to match A and B, got %r"
                % (self.A.rows, self.B.rows, self.C.shape))

    @property
    def shape(self):
        return self.C.shape


@dataclass(frozen=True)
class SteinSolution:
    X: SQMatrix | None
    uniqueness: Uniqueness
    residual: float | None
    nullity: int


def build_real_equation(prob: SteinProblem):
    """Real representations (M, N, K) of (A, B, C)."""
    return (realrep.real_rep(prob.A), realrep.real_rep(prob.B),
            realrep.real_rep(prob.C))


def solve_real_stein(M, N, K, rtol: float = 1e-10):
    """Solve Y - M @ Y @ N = K as the dense linear system
    (I - kron(N.T, M)) @ vec(Y) = vec(K).

    Returns (Y, outcome); Y is None when the system is inconsistent.  A
    nonsingular system is solved by LU; otherwise the row echelon solver
    provides the free-variables-zero particular solution and the nullity.
    """
    M = np.asarray(M, dtype=float)
    N = np.asarray(N, dtype=float)
    K = np.asarray(K, dtype=float)
    rows, cols = K.shape
    if M.shape != (rows, rows) or N.shape != (cols, cols):
        raise ShapeMismatchError(
            "coefficient shapes %r, %r do not frame %r"
            % (M.shape, N.shape, K.shape))
    G = np.eye(rows * cols) - numkernel.kron(N.T, M)
    rhs = numkernel.vec(K)
    outcome = numkernel.solve_general(G, rhs, rtol=rtol)
    if outcome.kind is SolveKind.INCONSISTENT:
        return None, outcome
    Y = numkernel.unvec(outcome.particular, rows, cols)
    return Y, outcome


def project_solution(Y) -> np.ndarray:
    """Average Y with its three sign-twisted transports.

    If Y solves the real Stein equation then so do -Q^-1 Y Q, R^-1 Y R and
    -S^-1 Y S (the structure matrices anticommute or commute with the
    representations in just the right pattern), and the average of the four
    is always a represented matrix.  Represented inputs are fixed points.
    """
    Y = np.asarray(Y, dtype=float)
    if Y.ndim != 2 or Y.shape[0] % 4 or Y.shape[1] % 4:
        raise ShapeMismatchError("expected a 4m-by-4n array, got %r"
                                 % (Y.shape,))
    sm = realrep.structure_matrices(Y.shape[0] // 4)
    sn = realrep.structure_matrices(Y.shape[1] // 4)
    return 0.25 * (Y
                   - sm.Q.T @ Y @ sn.Q
                   + sm.R.T @ Y @ sn.R
                   - sm.S.T @ Y @ sn.S)


def extract_solution(Yp) -> SQMatrix:
    """Read X out of a represented solution (structure validated)."""
    return realrep.real_rep_extract(Yp)


def residual(prob: SteinProblem, X: SQMatrix) -> float:
    """Frobenius norm of X - A @ j_conjugate(X) @ B - C."""
    AXB = densemat.matmul(densemat.matmul(prob.A, densemat.j_conjugate(X)),
                          prob.B)
    return densemat.frobenius_norm(X - AXB - prob.C)


def _coefficient_system(prob: SteinProblem):
    """The equation linearized directly over the 4mn coefficients of X.

    Variables are ordered like vec(stack(X)): column by column, the four
    planes of each column stacked.  Writing A @ j_conjugate(X) @ B as
    A @ j_conjugate(X @ j_conjugate(B)) shows column j of its stack equals
    sum_l rep(A) @ right_scalar_rep(jB[l, j], m) @ stack(X)[:, l], which
    fills the system blockwise.
    """
    m, n = prob.shape
    repA = realrep.real_rep(prob.A)
    jB = densemat.j_conjugate(prob.B)
    T = np.eye(4 * m * n)
    for j in range(n):
        for l in range(n):
            block = repA @ realrep.right_scalar_rep(jB.entry(l, j), m)
            T[j * 4 * m:(j + 1) * 4 * m, l * 4 * m:(l + 1) * 4 * m] -= block
    return T


def solve(prob: SteinProblem, rtol: float = 1e-10,
          residual_rtol: float = 1e-8) -> SteinSolution:
    """Solve X - A @ j_conjugate(X) @ B = C.

    Classification comes from the real representation route: unique when
    the dense kronecker system is nonsingular, no solution when it is
    inconsistent, nonunique otherwise, with the nullity of the real system
    reported.  The answer is residual-checked against the original equation
    at residual_rtol * (1 + ||C||_F); failure raises InternalResidualError.

    For nonunique problems, projecting an arbitrary particular real
    solution mixes free directions into the reported X, so the particular
    answer is canonicalized: it is re-solved from the equation linearized
    directly over the coefficients of X, with the same elimination rule
    (free variables zero).  The real route is still executed and its
    projected solution is residual-checked too, as a cross check of the
    representation identities.
    """
    m, n = prob.shape
    if m * n > MAX_ENTRIES:
        raise ValueError(
            "dense solver is capped at %d unknown entries, got %d"
            % (MAX_ENTRIES, m * n))
    M, N, K = build_real_equation(prob)
    Y, outcome = solve_real_stein(M, N, K, rtol=rtol)
    nullity = outcome.nullity
    if outcome.kind is SolveKind.INCONSISTENT:
        return SteinSolution(X=None, uniqueness=Uniqueness.NO_SOLUTION,
                             residual=None, nullity=nullity)
    X = extract_solution(project_solution(Y))
    tol = residual_rtol * (1.0 + densemat.frobenius_norm(prob.C))
    err = residual(prob, X)
    if err > tol:
        raise InternalResidualError(
            "projected solution misses by %g (tolerance %g)" % (err, tol))
    if outcome.kind is SolveKind.UNIQUE:
        return SteinSolution(X=X, uniqueness=Uniqueness.UNIQUE,
                             residual=err, nullity=0)

    coeff = numkernel.solve_general(
        _coefficient_system(prob), numkernel.vec(realrep.stack(prob.C)),
        rtol=rtol)
    if coeff.kind is SolveKind.INCONSISTENT or coeff.particular is None:
        raise InternalResidualError(
            "coefficient system inconsistent although the real system "
            "was solvable")
    Xc = realrep.unstack(numkernel.unvec(coeff.particular, 4 * m, n))
    err_c = residual(prob, Xc)
    if err_c > tol:
        raise InternalResidualError(
            "canonical particular solution misses by %g (tolerance %g)"
            % (err_c, tol))
    return SteinSolution(X=Xc, uniqueness=Uniqueness.NONUNIQUE,
                         residual=err_c, nullity=nullity)
