"""Coneigenvalues: A @ j_conjugate(x) = x * lam.

The real representation turns the left side into an ordinary matrix
acting on stacked coordinates, so candidate complex values of lam are
representation eigenvalues.  The catch, demonstrated below: the map is
antilinear for right multiplication by i, so complex coneigenvalues fill
circles |lam| = const, and those circles only pass through the REAL
representation eigenvalues.  Nonreal candidates generically recover
nothing, and the library says so rather than inventing vectors."""

import numpy as np

from sqmat import densemat as dm
from sqmat import spectral
from sqmat.densemat import SQMatrix
from sqmat.errors import EmptyNullSpaceError
from sqmat.scalar import SplitQuaternion

I = SplitQuaternion(0, 1, 0, 0)


def fmt(z):
    return "%.6f%+.6fi" % (z.real, z.imag)


print("== a 1x1 warm-up: A = [i]")
A = SQMatrix.from_rows([[I]])
print("  candidates:", [fmt(v) for v in spectral.coneigenvalues(A).values])
for lam in (1.0, -1.0):
    vecs = spectral.coneigenvectors(A, lam)
    print("  lam=%+g recovers %d vectors, e.g. %s"
          % (lam, len(vecs), vecs[0].entry(0, 0)))

print("\n== a generic 3x3: candidates split into real values and")
print("   nonreal quadruples")
rng = np.random.default_rng(9)
A = SQMatrix(rng.standard_normal((3, 3, 4)))
values = spectral.coneigenvalues(A).values
seen = []
for v in values:
    if any(abs(v - w) < 1e-9 for w in seen):
        continue
    seen.append(v)
    try:
        vecs = spectral.coneigenvectors(A, v)
        x = vecs[0]
        ok = spectral.verify_coneigenpair(A, x, v, tol=1e-7)
        print("  %s -> %d vectors, verified %s" % (fmt(v), len(vecs), ok))
    except EmptyNullSpaceError:
        print("  %s -> no coneigenvector (not on any circle)" % fmt(v))

print("\n== the circle: rotate a real value's phase, vectors persist")
real_value = next(v.real for v in values if abs(v.imag) < 1e-9)
for theta in (0.0, 0.7, 2.1):
    mate = real_value * np.exp(1j * theta)
    vecs = spectral.coneigenvectors(A, mate)
    ok = all(spectral.verify_coneigenpair(A, x, mate, tol=1e-7)
             for x in vecs)
    print("  |lam|=%.4f at phase %.1f: %d vectors, verified %s"
          % (abs(mate), theta, len(vecs), ok))

print("\n== moving a pair with an invertible scalar")
lam = real_value
x = spectral.coneigenvectors(A, lam)[0]
pair = spectral.Coneigenpair(lam=SplitQuaternion(lam), vector=x,
                             residual=0.0)
beta = SplitQuaternion(1, 2, 0, 0)
moved = spectral.transform_coneigenpair(A, pair, beta)
print("  beta = %s drags lam around its circle:" % beta)
print("  %s -> %s, residual %.3g"
      % (pair.lam, moved.lam, moved.residual))

print("\n== two independent cross-checks on a recovered pair")
print("  shifted eigenproblem check:",
      spectral.eigen_shift_check(A, x, lam, tol=1e-8))
print("  complex adjoint check:",
      spectral.adjoint_coneigen_check(A, x, lam, tol=1e-8))
