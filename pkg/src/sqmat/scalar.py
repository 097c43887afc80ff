"""Split quaternion scalars: arithmetic, classification, representations, roots.

The algebra is spanned by 1, i, j, k over the reals with

    i*i = -1,    j*j = k*k = +1,
    i*j = -j*i = k,    j*k = -k*j = -i,    k*i = -i*k = j.

The quadratic form q0^2 + q1^2 - q2^2 - q3^2 plays the role the squared
Euclidean norm plays for Hamilton quaternions, but it can vanish or turn
negative.  Nonzero elements split into three causal classes (timelike,
spacelike, null); null elements are zero divisors and cannot be inverted.

Consimilarity here always means the twisted relation a*x = conj(x)*b, not
ordinary similarity.  `solve_consimilarity` describes the full solution set
of that scalar relation, `canonical_witness` conjugates a timelike scalar
onto its norm, and `sqrt` returns the verified square roots.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateDenominatorError,
    FormulaInapplicableError,
    MixedCharacterError,
    NullDivisorError,
    RealInputError,
    ZeroNormError,
)

__all__ = [
    "SplitQuaternion",
    "CausalCharacter",
    "ConsimKind",
    "ConsimSolutionFamily",
    "MUL_TENSOR",
    "mul",
    "conjugate",
    "j_conjugate",
    "quadratic_form",
    "norm",
    "classify",
    "inverse",
    "coords",
    "from_coords",
    "left_rep",
    "right_rep",
    "solve_consimilarity",
    "canonical_witness",
    "sqrt",
]


class SplitQuaternion:
    """One element q0 + q1*i + q2*j + q3*k with float coefficients."""

    __slots__ = ("q0", "q1", "q2", "q3")

    def __init__(self, q0=0.0, q1=0.0, q2=0.0, q3=0.0):
        coeffs = (float(q0), float(q1), float(q2), float(q3))
        if not all(math.isfinite(c) for c in coeffs):
            raise ValueError("coefficients must be finite, got %r" % (coeffs,))
        self.q0, self.q1, self.q2, self.q3 = coeffs

    @property
    def coeffs(self):
        return (self.q0, self.q1, self.q2, self.q3)

    def is_real(self):
        """True when the vector part is exactly zero."""
        return self.q1 == 0.0 and self.q2 == 0.0 and self.q3 == 0.0

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return SplitQuaternion(self.q0 + other.q0, self.q1 + other.q1,
                               self.q2 + other.q2, self.q3 + other.q3)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return SplitQuaternion(self.q0 - other.q0, self.q1 - other.q1,
                               self.q2 - other.q2, self.q3 - other.q3)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return SplitQuaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(other, self)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "SplitQuaternion(%g, %g, %g, %g)" % self.coeffs


def _coerce(value):
    if isinstance(value, SplitQuaternion):
        return value
    if isinstance(value, (int, float)):
        return SplitQuaternion(value)
    return NotImplemented


class CausalCharacter(enum.Enum):
    TIMELIKE = "timelike"
    SPACELIKE = "spacelike"
    NULL = "null"


class ConsimKind(enum.Enum):
    SLICE = "slice"
    HYPERPLANE = "hyperplane"
    EMPTY = "empty"


@dataclass(frozen=True)
class ConsimSolutionFamily:
    """Solution set of a*x = conj(x)*b.

    kind SLICE: every real multiple of `generator` solves the relation.
    kind HYPERPLANE: the solutions are the x whose coordinates satisfy
    constraint . (x0, x1, x2, x3) = 0; the caller picks a representative
    (not every point of the hyperplane has nonzero norm).
    kind EMPTY: no solution of nonzero norm exists.
    """

    kind: ConsimKind
    generator: SplitQuaternion | None = None
    constraint: tuple[float, float, float, float] | None = None


# e_a * e_b = sum_c MUL_TENSOR[a, b, c] * e_c for the basis (1, i, j, k).
def _build_mul_tensor():
    t = np.zeros((4, 4, 4))
    for b in range(4):
        t[0, b, b] = 1.0
        t[b, 0, b] = 1.0
    t[0, 0, 0] = 1.0
    t[1, 1, 0] = -1.0
    t[2, 2, 0] = 1.0
    t[3, 3, 0] = 1.0
    t[1, 2, 3] = 1.0
    t[2, 1, 3] = -1.0
    t[2, 3, 1] = -1.0
    t[3, 2, 1] = 1.0
    t[3, 1, 2] = 1.0
    t[1, 3, 2] = -1.0
    t.flags.writeable = False
    return t


MUL_TENSOR = _build_mul_tensor()


def mul(q: SplitQuaternion, p: SplitQuaternion) -> SplitQuaternion:
    """Product q*p in the split quaternion algebra."""
    return SplitQuaternion(
        q.q0 * p.q0 - q.q1 * p.q1 + q.q2 * p.q2 + q.q3 * p.q3,
        q.q0 * p.q1 + q.q1 * p.q0 - q.q2 * p.q3 + q.q3 * p.q2,
        q.q0 * p.q2 + q.q2 * p.q0 - q.q1 * p.q3 + q.q3 * p.q1,
        q.q0 * p.q3 + q.q3 * p.q0 + q.q1 * p.q2 - q.q2 * p.q1,
    )


def conjugate(q: SplitQuaternion) -> SplitQuaternion:
    """Negate the whole vector part."""
    return SplitQuaternion(q.q0, -q.q1, -q.q2, -q.q3)


def j_conjugate(q: SplitQuaternion) -> SplitQuaternion:
    """The map q -> j*q*j, which negates the i and k coefficients."""
    return SplitQuaternion(q.q0, -q.q1, q.q2, -q.q3)


def quadratic_form(q: SplitQuaternion) -> float:
    """q0^2 + q1^2 - q2^2 - q3^2, the scalar part of q*conj(q)."""
    return q.q0 * q.q0 + q.q1 * q.q1 - q.q2 * q.q2 - q.q3 * q.q3


def norm(q: SplitQuaternion) -> float:
    """sqrt of the absolute quadratic form.  Zero exactly on null elements."""
    return math.sqrt(abs(quadratic_form(q)))


def classify(q: SplitQuaternion, null_tol: float = 0.0) -> CausalCharacter:
    """Causal character of q.

    The default compares the quadratic form against exact zero.  A positive
    `null_tol` widens the null class to |form| <= null_tol for callers that
    work with rounded data.
    """
    form = quadratic_form(q)
    if abs(form) <= null_tol:
        return CausalCharacter.NULL
    return CausalCharacter.TIMELIKE if form > 0 else CausalCharacter.SPACELIKE


def _invert_threshold(q: SplitQuaternion) -> float:
    biggest = max(abs(c) for c in q.coeffs)
    return 1e-12 * (1.0 + biggest) ** 2


def inverse(q: SplitQuaternion) -> SplitQuaternion:
    """Multiplicative inverse conj(q) / quadratic_form(q).

    Raises NullDivisorError when the quadratic form is zero at a scale-aware
    threshold: a quadratic form below 1e-12 * (1 + max_coeff)^2 means q is a
    zero divisor up to roundoff.
    """
    form = quadratic_form(q)
    if abs(form) <= _invert_threshold(q):
        raise NullDivisorError(
            "quadratic form %g is zero at threshold; %r is not invertible"
            % (form, q))
    return SplitQuaternion(q.q0 / form, -q.q1 / form, -q.q2 / form,
                           -q.q3 / form)


def coords(q: SplitQuaternion) -> np.ndarray:
    """Coefficients of q as a length-4 float vector."""
    return np.array(q.coeffs)


def from_coords(v) -> SplitQuaternion:
    v = np.asarray(v, dtype=float)
    if v.shape != (4,):
        raise ValueError("expected 4 coordinates, got shape %r" % (v.shape,))
    return SplitQuaternion(v[0], v[1], v[2], v[3])


def left_rep(q: SplitQuaternion) -> np.ndarray:
    """4x4 real matrix of left multiplication: left_rep(q) @ coords(x) equals
    coords(q*x)."""
    q0, q1, q2, q3 = q.coeffs
    return np.array([
        [q0, -q1, q2, q3],
        [q1, q0, q3, -q2],
        [q2, q3, q0, -q1],
        [q3, -q2, q1, q0],
    ])


def right_rep(q: SplitQuaternion) -> np.ndarray:
    """4x4 real matrix of right multiplication: right_rep(q) @ coords(x)
    equals coords(x*q)."""
    q0, q1, q2, q3 = q.coeffs
    return np.array([
        [q0, -q1, q2, q3],
        [q1, q0, -q3, q2],
        [q2, -q3, q0, q1],
        [q3, q2, -q1, q0],
    ])


def solve_consimilarity(a: SplitQuaternion,
                        b: SplitQuaternion) -> ConsimSolutionFamily:
    """Describe all x with a*x = conj(x)*b for same-character a and b.

    Both inputs must be timelike or both spacelike (MixedCharacterError
    otherwise, null inputs included).  When the norms differ there is no
    solution of nonzero norm.  Otherwise the set is a real line spanned by
    conjugate(a) + b, except in the degenerate case a + conj(b) = 0 where it
    grows to the hyperplane a0*x0 - a1*x1 + a2*x2 + a3*x3 = 0.

    Norm agreement and the degeneracy test use scale-aware thresholds
    (1e-9 and 1e-12 relative) so that transported pairs built in floating
    point are recognized.
    """
    ca = classify(a)
    cb = classify(b)
    if ca is CausalCharacter.NULL or cb is CausalCharacter.NULL or ca is not cb:
        raise MixedCharacterError(
            "need both timelike or both spacelike, got %s and %s"
            % (ca.value, cb.value))
    na = norm(a)
    nb = norm(b)
    if abs(na - nb) > 1e-9 * (1.0 + na + nb):
        return ConsimSolutionFamily(ConsimKind.EMPTY)
    degenerate = a + conjugate(b)
    scale = max(abs(c) for c in a.coeffs + b.coeffs)
    if max(abs(c) for c in degenerate.coeffs) <= 1e-12 * (1.0 + scale):
        return ConsimSolutionFamily(
            ConsimKind.HYPERPLANE,
            constraint=(a.q0, -a.q1, a.q2, a.q3))
    return ConsimSolutionFamily(ConsimKind.SLICE,
                                generator=conjugate(a) + b)


def canonical_witness(a: SplitQuaternion) -> SplitQuaternion:
    """Return p with conj(p) * norm(a) * p^-1 = a.

    Defined for non-real a of nonzero norm; p = norm(a) + conj(a).  The
    identity a*p = conj(p)*norm(a) needs the quadratic form to equal
    +norm(a)^2, so spacelike inputs fail the post-verification and raise
    FormulaInapplicableError instead of returning a bogus witness.
    """
    if a.is_real():
        raise RealInputError("witness construction undefined for real %r" % a)
    n = norm(a)
    if quadratic_form(a) == 0.0 or n <= 0.0:
        raise ZeroNormError("witness construction needs nonzero norm")
    p = SplitQuaternion(n, 0, 0, 0) + conjugate(a)
    if abs(quadratic_form(p)) <= _invert_threshold(p):
        raise NullDivisorError(
            "witness %r is a zero divisor and cannot be inverted" % p)
    check = mul(mul(conjugate(p), SplitQuaternion(n)), inverse(p))
    err = max(abs(c) for c in (check - a).coeffs)
    if err > 1e-10 * (1.0 + n):
        raise FormulaInapplicableError(
            "witness verification failed (error %g); the construction only "
            "covers timelike inputs" % err)
    return p


def sqrt(a: SplitQuaternion) -> tuple[SplitQuaternion, SplitQuaternion]:
    """Both square roots of a non-real a, when the closed form applies.

    The candidate is x = (n^(3/2) + n^(1/2) * a) / norm(n + a) with
    n = norm(a).  The construction is guaranteed for timelike a with
    n + a0 > 0; it is always post-verified by squaring, and
    FormulaInapplicableError is raised when x*x differs from a (for
    timelike a with a0 < -n no square root exists at all).
    """
    if a.is_real():
        raise RealInputError("scalar square roots of reals are ambiguous; "
                             "only non-real inputs are handled")
    n = norm(a)
    if quadratic_form(a) == 0.0 or n <= 0.0:
        raise ZeroNormError("square root construction needs nonzero norm")
    p = SplitQuaternion(n, 0, 0, 0) + a
    np_ = norm(p)
    if abs(quadratic_form(p)) <= _invert_threshold(p):
        raise DegenerateDenominatorError(
            "norm(norm(a) + a) vanishes for %r" % a)
    lam0 = n ** 1.5 / np_
    lam1 = math.sqrt(n) / np_
    root = SplitQuaternion(lam0) + SplitQuaternion(lam1) * a
    err = max(abs(c) for c in (mul(root, root) - a).coeffs)
    if err > 1e-9 * (1.0 + n):
        raise FormulaInapplicableError(
            "square of the closed-form candidate misses a by %g; "
            "no verified root for %r" % (err, a))
    return root, -root
