"""Matrices over the split quaternions: which conjugations respect
products, and how a 2n-by-2n complex matrix can stand in for an
n-by-n split quaternion one."""

import numpy as np

from sqmat import densemat as dm
from sqmat.densemat import SQMatrix
from sqmat.scalar import SplitQuaternion

I = SplitQuaternion(0, 1, 0, 0)
J = SplitQuaternion(0, 0, 1, 0)
K = SplitQuaternion(0, 0, 0, 1)

print("== entrywise conjugation is NOT multiplicative here")
A = SQMatrix.from_rows([[I]])
B = SQMatrix.from_rows([[J]])
lhs = dm.conjugate(dm.matmul(A, B))
rhs = dm.matmul(dm.conjugate(A), dm.conjugate(B))
print("  conj(i*j)        =", lhs.entry(0, 0))
print("  conj(i)*conj(j)  =", rhs.entry(0, 0))

print("\n== but the j-conjugate q -> jqj is, entrywise and in order")
lhs = dm.j_conjugate(dm.matmul(A, B))
rhs = dm.matmul(dm.j_conjugate(A), dm.j_conjugate(B))
print("  jconj(i*j)         =", lhs.entry(0, 0))
print("  jconj(i)*jconj(j)  =", rhs.entry(0, 0))

print("\n== the conjugate transpose reverses products, as usual")
rng = np.random.default_rng(1)
X = SQMatrix(rng.standard_normal((2, 3, 4)))
Y = SQMatrix(rng.standard_normal((3, 2, 4)))
gap = dm.frobenius_norm(dm.conj_transpose(dm.matmul(X, Y))
                        - dm.matmul(dm.conj_transpose(Y),
                                    dm.conj_transpose(X)))
print("  || (XY)* - Y* X* || =", gap)

print("\n== the complex adjoint doubles the size and keeps the algebra")
M = SQMatrix(rng.standard_normal((2, 2, 4)))
N = SQMatrix(rng.standard_normal((2, 2, 4)))
chi = dm.complex_adjoint
print("  chi(M) shape:", chi(M).shape)
print("  || chi(MN) - chi(M)chi(N) || =",
      np.linalg.norm(chi(dm.matmul(M, N)) - chi(M) @ chi(N)))
print("  || chi(M^-1) - chi(M)^-1 ||  =",
      np.linalg.norm(chi(dm.inverse(M)) - np.linalg.inv(chi(M))))

print("\n== one law the adjoint does not satisfy")
Aj = SQMatrix.from_rows([[J]])
print("  chi(A*) for A=[j]:\n", chi(dm.conj_transpose(Aj)))
print("  chi(A)* for A=[j]:\n", chi(Aj).conj().T)

print("\n== products can be computed through the adjoint alone")
P = SQMatrix(rng.standard_normal((3, 2, 4)))
Q = SQMatrix(rng.standard_normal((2, 4, 4)))
gap = dm.frobenius_norm(dm.matmul(P, Q) - dm.mul_via_adjoint(P, Q))
print("  3x2 times 2x4, direct vs adjoint route:", gap)
