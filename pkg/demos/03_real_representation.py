"""The 4m-by-4n real representation: how a split quaternion matrix acts
on stacked coordinates, and the sign-pattern identities that make the
representation computable with plain real linear algebra.

Every identity printed here is a pure sign rearrangement, so the gaps
are exactly zero, not merely small."""

import numpy as np

from sqmat import densemat as dm
from sqmat import realrep as rr
from sqmat.densemat import SQMatrix
from sqmat.scalar import SplitQuaternion

rng = np.random.default_rng(5)

print("== the representation of a single unit")
A = SQMatrix.from_rows([[SplitQuaternion(0, 1, 0, 0)]])
print(rr.real_rep(A))

print("\n== it linearizes X -> A @ j_conjugate(X)")
A = SQMatrix(rng.standard_normal((2, 2, 4)))
X = SQMatrix(rng.standard_normal((2, 3, 4)))
lhs = rr.stack(dm.matmul(A, dm.j_conjugate(X)))
rhs = rr.real_rep(A) @ rr.stack(X)
print("  gap:", np.max(np.abs(lhs - rhs)))

print("\n== structure matrices: signed block permutations")
s = rr.structure_matrices(1)
print("  P_1 diagonal:", np.diag(s.P))
print("  E_1 diagonal:", np.diag(s.E))
print("  Q_1 @ Q_1 = -identity:", np.array_equal(s.Q @ s.Q, -np.eye(4)))

print("\n== the four conjugation identities")
rep = rr.real_rep(A)
s2 = rr.structure_matrices(2)
print("  P rep P = rep(jconj(A)):",
      np.array_equal(s2.P @ rep @ s2.P,
                     rr.real_rep(dm.j_conjugate(A))))
print("  Q' rep Q = -rep:", np.array_equal(s2.Q.T @ rep @ s2.Q, -rep))
print("  R' rep R =  rep:", np.array_equal(s2.R.T @ rep @ s2.R, rep))
print("  S' rep S = -rep:", np.array_equal(s2.S.T @ rep @ s2.S, -rep))

print("\n== products and inverses pass through the representation")
B = SQMatrix(rng.standard_normal((2, 2, 4)))
prod_gap = np.max(np.abs(rr.real_rep(dm.matmul(A, B))
                         - rep @ s2.P @ rr.real_rep(B)))
inv_gap = np.max(np.abs(rr.real_rep(dm.inverse(A))
                        - s2.P @ np.linalg.inv(rep) @ s2.P))
print("  product law gap:", prod_gap)
print("  inverse law gap:", inv_gap)

print("\n== the E matrix bridges conjugate transpose and plain transpose")
bridge = np.array_equal(rr.real_rep(dm.conj_transpose(A)),
                        s2.E @ rep.T @ s2.E)
print("  rep(A*) = E rep(A)' E:", bridge)
entrywise = np.max(np.abs(rr.real_rep(dm.conjugate(A))
                          - s2.E @ rep.T @ s2.E))
print("  (with the entrywise conjugate instead, the gap is %.3g:"
      " the transpose is essential)" % entrywise)

print("\n== round trip through the block layout")
back = rr.real_rep_extract(rr.real_rep(X))
print("  extract(rep(X)) == X:", dm.frobenius_norm(back - X) == 0.0)
