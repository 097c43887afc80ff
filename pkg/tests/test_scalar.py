"""Scalar algebra: multiplication table, classification, representations,
consimilarity families, witnesses, and square roots.

Algebraic identities are property-tested on integer coefficients, where
float arithmetic is exact and the assertions can demand equality.
"""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sqmat import scalar
from sqmat.errors import (
    DegenerateDenominatorError,
    FormulaInapplicableError,
    MixedCharacterError,
    NullDivisorError,
    RealInputError,
    ZeroNormError,
)
from sqmat.scalar import (
    MUL_TENSOR,
    CausalCharacter,
    ConsimKind,
    SplitQuaternion,
    canonical_witness,
    classify,
    conjugate,
    coords,
    from_coords,
    inverse,
    j_conjugate,
    left_rep,
    mul,
    norm,
    quadratic_form,
    right_rep,
    solve_consimilarity,
    sqrt,
)

ONE = SplitQuaternion(1)
I = SplitQuaternion(0, 1, 0, 0)
J = SplitQuaternion(0, 0, 1, 0)
K = SplitQuaternion(0, 0, 0, 1)

coeff = st.integers(min_value=-9, max_value=9)
quaternions = st.builds(SplitQuaternion, coeff, coeff, coeff, coeff)


def test_unit_multiplication_table():
    assert mul(I, I) == SplitQuaternion(-1)
    assert mul(J, J) == ONE
    assert mul(K, K) == ONE
    assert mul(I, J) == K
    assert mul(J, I) == -K
    assert mul(J, K) == -I
    assert mul(K, J) == I
    assert mul(K, I) == J
    assert mul(I, K) == -J


def test_product_of_mixed_units():
    a = ONE + I
    b = ONE + J
    assert mul(a, b) == SplitQuaternion(1, 1, 1, 1)


@given(quaternions)
def test_one_is_neutral(q):
    assert mul(ONE, q) == q
    assert mul(q, ONE) == q


@given(quaternions, quaternions, quaternions)
def test_mul_is_associative(q, p, r):
    assert mul(mul(q, p), r) == mul(q, mul(p, r))


@given(quaternions, quaternions, quaternions)
def test_mul_distributes_over_addition(q, p, r):
    assert mul(q, p + r) == mul(q, p) + mul(q, r)
    assert mul(q + p, r) == mul(q, r) + mul(p, r)


@given(quaternions, quaternions)
def test_mul_matches_structure_tensor(q, p):
    by_tensor = np.einsum("a,b,abc->c", coords(q), coords(p), MUL_TENSOR)
    assert from_coords(by_tensor) == mul(q, p)


def test_rejects_non_finite_coefficients():
    with pytest.raises(ValueError):
        SplitQuaternion(float("nan"))
    with pytest.raises(ValueError):
        SplitQuaternion(0, float("inf"), 0, 0)


@given(quaternions)
def test_conjugate_is_an_involution(q):
    assert conjugate(conjugate(q)) == q


@given(quaternions, quaternions)
def test_conjugate_reverses_products(q, p):
    assert conjugate(mul(q, p)) == mul(conjugate(p), conjugate(q))


@given(quaternions)
def test_j_conjugate_is_sandwich_by_j(q):
    assert j_conjugate(q) == mul(mul(J, q), J)


@given(quaternions, quaternions)
def test_j_conjugate_preserves_products(q, p):
    assert j_conjugate(mul(q, p)) == mul(j_conjugate(q), j_conjugate(p))


@given(quaternions)
def test_quadratic_form_is_scalar_of_q_qbar(q):
    prod = mul(q, conjugate(q))
    assert prod.q1 == prod.q2 == prod.q3 == 0
    assert prod.q0 == quadratic_form(q)


@given(quaternions, quaternions)
def test_quadratic_form_is_multiplicative(q, p):
    assert quadratic_form(mul(q, p)) == quadratic_form(q) * quadratic_form(p)


def test_classify_examples():
    assert classify(SplitQuaternion(2, 0, 1, 0)) is CausalCharacter.TIMELIKE
    assert classify(SplitQuaternion(0, 0, 2, 1)) is CausalCharacter.SPACELIKE
    assert classify(ONE + J) is CausalCharacter.NULL
    assert classify(I + K) is CausalCharacter.NULL


def test_classify_null_band():
    nearly = SplitQuaternion(1.0, 0.0, 1.0 + 1e-13, 0.0)
    assert classify(nearly) is CausalCharacter.SPACELIKE
    assert classify(nearly, null_tol=1e-9) is CausalCharacter.NULL


def test_norm_examples():
    assert norm(SplitQuaternion(0, 2, 0, 0)) == 2.0
    assert norm(SplitQuaternion(0, 0, 3, 0)) == 3.0
    assert norm(ONE + J) == 0.0


@given(quaternions, quaternions)
def test_norm_is_multiplicative(q, p):
    assert norm(mul(q, p)) == pytest.approx(norm(q) * norm(p), abs=1e-9)


def test_inverse_round_trip():
    rng = np.random.default_rng(11)
    seen = 0
    while seen < 50:
        q = from_coords(rng.standard_normal(4))
        if abs(quadratic_form(q)) < 1e-3:
            continue
        seen += 1
        for prod in (mul(q, inverse(q)), mul(inverse(q), q)):
            assert max(abs(c) for c in (prod - ONE).coeffs) < 1e-12


def test_inverse_rejects_zero_divisors():
    for q in (ONE + J, ONE + K, I + J, SplitQuaternion(2, 0, 0, 2),
              SplitQuaternion()):
        with pytest.raises(NullDivisorError):
            inverse(q)


def test_left_rep_of_one_is_identity():
    assert np.array_equal(left_rep(ONE), np.eye(4))
    assert np.array_equal(right_rep(ONE), np.eye(4))


@given(quaternions, quaternions)
def test_reps_act_by_multiplication(q, x):
    assert np.array_equal(left_rep(q) @ coords(x), coords(mul(q, x)))
    assert np.array_equal(right_rep(q) @ coords(x), coords(mul(x, q)))


@given(quaternions, quaternions)
def test_reps_are_multiplicative_and_commute(q, p):
    assert np.array_equal(left_rep(mul(q, p)), left_rep(q) @ left_rep(p))
    # right multiplications compose in reverse order
    assert np.array_equal(right_rep(mul(q, p)), right_rep(p) @ right_rep(q))
    assert np.array_equal(left_rep(q) @ right_rep(p),
                          right_rep(p) @ left_rep(q))


def test_right_rep_composition_order_matters():
    # x -> x*j then x -> (x*j)*k is x -> x*(jk), so the matrices must be
    # applied with the inner factor first; the same-order product lands on
    # the wrong sign for this pair
    kj = mul(K, J)
    assert np.array_equal(right_rep(kj), right_rep(J) @ right_rep(K))
    assert not np.array_equal(right_rep(kj), right_rep(K) @ right_rep(J))


# -- consimilarity a*x = conj(x)*b ----------------------------------------

def _consim_residual(a, b, x):
    return max(abs(c) for c in (mul(a, x) - mul(conjugate(x), b)).coeffs)


def test_consim_slice_example():
    family = solve_consimilarity(I, -I)
    assert family.kind is ConsimKind.SLICE
    assert family.generator == SplitQuaternion(0, -2, 0, 0)
    assert _consim_residual(I, -I, family.generator) == 0.0


def test_consim_hyperplane_example():
    family = solve_consimilarity(I, I)
    assert family.kind is ConsimKind.HYPERPLANE
    assert family.constraint == (0.0, -1.0, 0.0, 0.0)
    # any x without an i component solves i*x = conj(x)*i
    for x in (ONE, J, K, SplitQuaternion(2, 0, -1, 3)):
        assert _consim_residual(I, I, x) == 0.0


def test_consim_norm_mismatch_is_empty():
    family = solve_consimilarity(I, SplitQuaternion(0, 2, 0, 0))
    assert family.kind is ConsimKind.EMPTY
    assert family.generator is None


def test_consim_rejects_mixed_or_null_characters():
    with pytest.raises(MixedCharacterError):
        solve_consimilarity(I, J)
    with pytest.raises(MixedCharacterError):
        solve_consimilarity(ONE + J, ONE + J)


def test_consim_generator_solves_transported_pairs():
    rng = np.random.default_rng(23)
    seen = 0
    while seen < 100:
        a = from_coords(rng.standard_normal(4))
        p = from_coords(rng.standard_normal(4))
        if abs(quadratic_form(a)) < 1e-2 or abs(quadratic_form(p)) < 1e-2:
            continue
        b = mul(mul(inverse(conjugate(p)), a), p)
        family = solve_consimilarity(a, b)
        if family.kind is ConsimKind.HYPERPLANE:
            continue
        assert family.kind is ConsimKind.SLICE
        assert _consim_residual(a, b, family.generator) \
            < 1e-9 * (1 + norm(a)) * (1 + norm(family.generator))
        seen += 1


def test_consim_hyperplane_points_solve_the_relation():
    # the degenerate pairing b = -conj(a) admits a whole hyperplane
    rng = np.random.default_rng(29)
    for _ in range(50):
        a = from_coords(rng.standard_normal(4))
        if abs(quadratic_form(a)) < 1e-2 or abs(a.q1) < 1e-2:
            continue
        b = -conjugate(a)
        family = solve_consimilarity(a, b)
        assert family.kind is ConsimKind.HYPERPLANE
        c0, c1, c2, c3 = family.constraint
        x0, x2, x3 = rng.standard_normal(3)
        x = SplitQuaternion(x0, (c0 * x0 + c2 * x2 + c3 * x3) / -c1, x2, x3)
        assert abs(np.dot(family.constraint, coords(x))) < 1e-12
        assert _consim_residual(a, b, x) < 1e-10 * (1 + norm(a))


# -- canonical witness -----------------------------------------------------

def test_witness_example():
    p = canonical_witness(SplitQuaternion(0, 2, 0, 0))
    assert p == SplitQuaternion(2, -2, 0, 0)


def test_witness_conjugates_norm_onto_a():
    rng = np.random.default_rng(31)
    seen = 0
    while seen < 100:
        a = from_coords(rng.standard_normal(4))
        if quadratic_form(a) < 1e-2:
            continue
        seen += 1
        p = canonical_witness(a)
        back = mul(mul(conjugate(p), SplitQuaternion(norm(a))), inverse(p))
        assert max(abs(c) for c in (back - a).coeffs) < 1e-10 * (1 + norm(a))


def test_witness_accepts_timelike_with_negative_scalar_part():
    a = SplitQuaternion(-2, 0, 1, 0)
    p = canonical_witness(a)
    back = mul(mul(conjugate(p), SplitQuaternion(norm(a))), inverse(p))
    assert max(abs(c) for c in (back - a).coeffs) < 1e-10


def test_witness_domain_errors():
    with pytest.raises(RealInputError):
        canonical_witness(SplitQuaternion(3))
    with pytest.raises(ZeroNormError):
        canonical_witness(ONE + J)
    # spacelike with zero scalar part: the witness itself is a zero divisor
    with pytest.raises(NullDivisorError):
        canonical_witness(SplitQuaternion(0, 0, 2, 0))
    # timelike with scalar part exactly -norm: same degeneracy
    with pytest.raises(NullDivisorError):
        canonical_witness(SplitQuaternion(-1, 1, 0, 1))
    # spacelike with nonzero scalar part: invertible witness, wrong identity
    with pytest.raises(FormulaInapplicableError):
        canonical_witness(SplitQuaternion(1, 0, 2, 0))


# -- square roots ----------------------------------------------------------

def test_sqrt_example_is_exact():
    plus, minus = sqrt(SplitQuaternion(0, 2, 0, 0))
    assert max(abs(c) for c in (plus - (ONE + I)).coeffs) < 1e-12
    assert max(abs(c) for c in (minus + (ONE + I)).coeffs) < 1e-12


def test_sqrt_verifies_on_guaranteed_domain():
    rng = np.random.default_rng(37)
    seen = 0
    while seen < 100:
        a = from_coords(rng.standard_normal(4))
        if quadratic_form(a) < 1e-2 or norm(a) + a.q0 < 1e-2:
            continue
        seen += 1
        for root in sqrt(a):
            err = max(abs(c) for c in (mul(root, root) - a).coeffs)
            assert err < 1e-9 * (1 + norm(a))


def test_sqrt_rootless_timelike_raises():
    # timelike but scalar part below -norm: x*x = a forces x0^2 < 0
    with pytest.raises(FormulaInapplicableError):
        sqrt(SplitQuaternion(-2, 0, 1, 0))


def test_sqrt_degenerate_denominator():
    # norm(a) + a is a zero divisor exactly when a0 = -norm(a)
    with pytest.raises(DegenerateDenominatorError):
        sqrt(SplitQuaternion(-1, 1, 0, 1))


def test_sqrt_domain_errors():
    with pytest.raises(RealInputError):
        sqrt(SplitQuaternion(4))
    with pytest.raises(ZeroNormError):
        sqrt(ONE + J)


def test_sqrt_never_succeeds_on_spacelike():
    # the squared quadratic form is a square, so x*x is never spacelike
    rng = np.random.default_rng(41)
    seen = 0
    while seen < 100:
        a = from_coords(rng.standard_normal(4))
        if quadratic_form(a) > -1e-2 or abs(a.q0) < 1e-3:
            continue
        seen += 1
        with pytest.raises(FormulaInapplicableError):
            sqrt(a)


# -- container behavior ----------------------------------------------------

def test_operator_sugar_and_coercion():
    q = SplitQuaternion(1, 2, 3, 4)
    assert q + 1 == SplitQuaternion(2, 2, 3, 4)
    assert 1 + q == SplitQuaternion(2, 2, 3, 4)
    assert q - q == SplitQuaternion()
    assert 2 * q == SplitQuaternion(2, 4, 6, 8)
    assert q * 2 == SplitQuaternion(2, 4, 6, 8)
    assert -q == SplitQuaternion(-1, -2, -3, -4)
    assert q != object()
    assert hash(q) == hash(SplitQuaternion(1, 2, 3, 4))


def test_is_real_flag():
    assert SplitQuaternion(5).is_real()
    assert not SplitQuaternion(5, 0, 1e-300, 0).is_real()


def test_from_coords_validates_shape():
    with pytest.raises(ValueError):
        from_coords([1.0, 2.0, 3.0])
