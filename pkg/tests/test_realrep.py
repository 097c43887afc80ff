"""The 4m-by-4n real representation, its structure matrices, and the
identities tying them to the matrix-level conjugation maps."""

import numpy as np
import pytest

from sqmat import densemat as dm
from sqmat import realrep as rr
from sqmat.densemat import SQMatrix
from sqmat.errors import (
    NotStructuredError,
    ShapeMismatchError,
    SingularError,
)
from sqmat.scalar import SplitQuaternion

ONE = SplitQuaternion(1)
I = SplitQuaternion(0, 1, 0, 0)
J = SplitQuaternion(0, 0, 1, 0)
K = SplitQuaternion(0, 0, 0, 1)


def random_matrix(rng, m, n):
    return SQMatrix(rng.standard_normal((m, n, 4)))


def random_invertible(rng, n):
    while True:
        P = random_matrix(rng, n, n)
        try:
            dm.inverse(P)
        except SingularError:
            continue
        return P


def test_rep_of_one():
    got = rr.real_rep(SQMatrix.from_rows([[ONE]]))
    assert np.array_equal(got, np.diag([1.0, -1.0, 1.0, -1.0]))


def test_rep_of_i():
    got = rr.real_rep(SQMatrix.from_rows([[I]]))
    want = np.array([[0.0, 1.0, 0.0, 0.0],
                     [1.0, 0.0, 0.0, 0.0],
                     [0.0, 0.0, 0.0, 1.0],
                     [0.0, 0.0, 1.0, 0.0]])
    assert np.array_equal(got, want)


def test_rep_block_layout():
    rng = np.random.default_rng(3)
    A = random_matrix(rng, 2, 3)
    rep = rr.real_rep(A)
    assert rep.shape == (8, 12)
    comps = [A.component(s) for s in range(4)]
    rows = [[comps[0], comps[1], comps[2], -comps[3]],
            [comps[1], -comps[0], comps[3], comps[2]],
            [comps[2], -comps[3], comps[0], comps[1]],
            [comps[3], comps[2], comps[1], -comps[0]]]
    assert np.array_equal(rep, np.block(rows))


def test_rep_linearizes_twisted_products():
    rng = np.random.default_rng(5)
    A = random_matrix(rng, 2, 3)
    X = random_matrix(rng, 3, 4)
    lhs = rr.real_rep(A) @ rr.stack(X)
    rhs = rr.stack(dm.matmul(A, dm.j_conjugate(X)))
    assert np.abs(lhs - rhs).max() < 1e-12


def test_stack_unstack_round_trip():
    rng = np.random.default_rng(7)
    A = random_matrix(rng, 3, 2)
    st = rr.stack(A)
    assert st.shape == (12, 2)
    assert np.array_equal(st[:3], A.component(0))
    assert rr.unstack(st) == A
    with pytest.raises(ShapeMismatchError):
        rr.unstack(np.zeros((6, 2)))


def test_structure_matrix_oracles():
    s = rr.structure_matrices(1)
    assert np.array_equal(s.P, np.diag([1.0, -1.0, 1.0, -1.0]))
    assert np.array_equal(s.E, np.diag([1.0, -1.0, -1.0, 1.0]))
    want_r = np.array([[0.0, 0.0, -1.0, 0.0],
                       [0.0, 0.0, 0.0, -1.0],
                       [-1.0, 0.0, 0.0, 0.0],
                       [0.0, -1.0, 0.0, 0.0]])
    assert np.array_equal(s.R, want_r)


def test_structure_matrices_are_signed_orthogonal():
    for m in (1, 2, 3):
        s = rr.structure_matrices(m)
        eye = np.eye(4 * m)
        for M in (s.P, s.Q, s.R, s.S, s.E):
            assert np.array_equal(M.T @ M, eye)
        # squares reflect the squares of the mimicked units
        assert np.array_equal(s.P @ s.P, eye)
        assert np.array_equal(s.E @ s.E, eye)
        assert np.array_equal(s.Q @ s.Q, -eye)
        assert np.array_equal(s.R @ s.R, eye)
        assert np.array_equal(s.S @ s.S, eye)


def test_structure_conjugation_identities():
    rng = np.random.default_rng(9)
    for m, n in [(1, 1), (2, 3), (3, 2)]:
        A = random_matrix(rng, m, n)
        rep = rr.real_rep(A)
        sm = rr.structure_matrices(m)
        sn = rr.structure_matrices(n)
        assert np.array_equal(sm.P @ rep @ sn.P,
                              rr.real_rep(dm.j_conjugate(A)))
        assert np.array_equal(sm.Q.T @ rep @ sn.Q, -rep)
        assert np.array_equal(sm.R.T @ rep @ sn.R, rep)
        assert np.array_equal(sm.S.T @ rep @ sn.S, -rep)


def test_rep_is_additive():
    rng = np.random.default_rng(11)
    A = random_matrix(rng, 2, 2)
    B = random_matrix(rng, 2, 2)
    assert np.array_equal(rr.real_rep(A + B),
                          rr.real_rep(A) + rr.real_rep(B))


def test_rep_product_laws():
    rng = np.random.default_rng(13)
    A = random_matrix(rng, 2, 3)
    B = random_matrix(rng, 3, 4)
    repAB = rr.real_rep(dm.matmul(A, B))
    P_n = rr.structure_matrices(3).P
    P_r = rr.structure_matrices(4).P
    first = rr.real_rep(A) @ P_n @ rr.real_rep(B)
    second = rr.real_rep(A) @ rr.real_rep(dm.j_conjugate(B)) @ P_r
    assert np.abs(repAB - first).max() < 1e-12
    assert np.abs(repAB - second).max() < 1e-12


def test_rep_inverse_law():
    rng = np.random.default_rng(15)
    A = random_invertible(rng, 3)
    P = rr.structure_matrices(3).P
    lhs = rr.real_rep(dm.inverse(A))
    rhs = P @ np.linalg.inv(rr.real_rep(A)) @ P
    assert np.abs(lhs - rhs).max() < 1e-8


def test_rep_bridges_conj_transpose_through_e():
    rng = np.random.default_rng(17)
    for n in (1, 2, 3):
        A = random_matrix(rng, n, n)
        E = rr.structure_matrices(n).E
        lhs = rr.real_rep(dm.conj_transpose(A))
        rhs = E @ rr.real_rep(A).T @ E
        assert np.array_equal(lhs, rhs)


def test_e_bridge_needs_the_transpose():
    # entrywise conjugation alone does not satisfy the bridge; the two
    # sides agree only where A is symmetric, so any non-symmetric matrix
    # separates them
    A = SQMatrix.from_rows([[0, I], [0, 0]])
    E = rr.structure_matrices(2).E
    lhs = rr.real_rep(dm.conjugate(A))
    rhs = E @ rr.real_rep(A).T @ E
    assert np.abs(lhs - rhs).max() > 0.5


def test_right_scalar_rep():
    rng = np.random.default_rng(19)
    q = SplitQuaternion(*rng.standard_normal(4))
    X = random_matrix(rng, 3, 2)
    rho = rr.right_scalar_rep(q, 3)
    assert np.array_equal(rr.right_scalar_rep(ONE, 3), np.eye(12))
    lhs = rho @ rr.stack(X)
    rhs = rr.stack(dm.matmul(X, SQMatrix.scalar_diag(q, 2)))
    assert np.abs(lhs - rhs).max() < 1e-12


def test_extract_round_trip():
    rng = np.random.default_rng(21)
    A = random_matrix(rng, 2, 3)
    assert rr.real_rep_extract(rr.real_rep(A)) == A


def test_extract_rejects_unstructured():
    with pytest.raises(NotStructuredError):
        rr.real_rep_extract(np.eye(4))
    rng = np.random.default_rng(23)
    A = random_matrix(rng, 2, 2)
    rep = rr.real_rep(A).copy()
    rep[5, 2] += 1.0
    with pytest.raises(NotStructuredError):
        rr.real_rep_extract(rep)


def test_extract_rejects_bad_shapes():
    # a shape that is not 4m x 4n cannot be a represented matrix at all
    with pytest.raises(NotStructuredError):
        rr.real_rep_extract(np.zeros((6, 8)))
    with pytest.raises(NotStructuredError):
        rr.real_rep_extract(np.zeros(16))
