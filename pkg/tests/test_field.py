"""Exact finite-field arithmetic and dense linear algebra."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from jordanbundles.field import (
    Field,
    enumerate_elements,
    ext_field_build,
    identity,
    in_span,
    inverse,
    is_zero_matrix,
    kernel_basis,
    mat_mul,
    mat_pow,
    mat_vec,
    prime_field,
    rank,
    row_reduce,
    solve,
    span_basis,
    transpose,
    zeros,
)

FIELDS = [
    prime_field(2), prime_field(3), prime_field(5), prime_field(7),
    ext_field_build(2, 2), ext_field_build(2, 3), ext_field_build(2, 4),
    ext_field_build(3, 2), ext_field_build(3, 3), ext_field_build(5, 2),
]

# Frozen moduli: lexicographically smallest monic irreducible, coefficients
# listed from the constant term upward including the leading 1.
# [DERIVED] frozen from an independent sieve over all monic polynomials.
FROZEN_MODULI = {
    (2, 2): (1, 1, 1),          # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),       # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),    # x^4 + x + 1
    (3, 2): (1, 0, 1),          # x^2 + 1
    (3, 3): (1, 2, 0, 1),       # x^3 + 2x + 1
    (5, 2): (2, 0, 1),          # x^2 + 2
    (7, 2): (1, 0, 1),          # x^2 + 1
}


@pytest.mark.parametrize("key", sorted(FROZEN_MODULI))
def test_frozen_moduli(key):
    p, e = key
    fld = ext_field_build(p, e)
    assert fld.modulus == FROZEN_MODULI[key]


@pytest.mark.parametrize("fld", FIELDS, ids=lambda f: "F%d" % f.q)
def test_field_axioms_exhaustive_small(fld):
    if fld.q > 9:
        pytest.skip("exhaustive check reserved for tiny fields")
    elems = list(enumerate_elements(fld))
    assert len(elems) == fld.q
    for a in elems:
        assert fld.add(a, 0) == a
        assert fld.mul(a, 1) == a
        assert fld.add(a, fld.neg(a)) == 0
        if a != 0:
            assert fld.mul(a, fld.inv(a)) == 1
        for b in elems:
            assert fld.add(a, b) == fld.add(b, a)
            assert fld.mul(a, b) == fld.mul(b, a)
            for c in elems:
                assert fld.mul(a, fld.add(b, c)) == fld.add(
                    fld.mul(a, b), fld.mul(a, c))


@given(data=st.data())
@settings(max_examples=150, deadline=None)
def test_field_axioms_random(data):
    fld = data.draw(st.sampled_from(FIELDS))
    a = data.draw(st.integers(0, fld.q - 1))
    b = data.draw(st.integers(0, fld.q - 1))
    c = data.draw(st.integers(0, fld.q - 1))
    assert fld.add(fld.add(a, b), c) == fld.add(a, fld.add(b, c))
    assert fld.mul(fld.mul(a, b), c) == fld.mul(a, fld.mul(b, c))
    assert fld.mul(a, fld.add(b, c)) == fld.add(fld.mul(a, b), fld.mul(a, c))
    assert fld.sub(a, b) == fld.add(a, fld.neg(b))
    if b != 0:
        assert fld.mul(fld.div(a, b), b) == a


@pytest.mark.parametrize("fld", FIELDS, ids=lambda f: "F%d" % f.q)
def test_pow_edge_cases(fld):
    assert fld.pow(0, 0) == 1
    assert fld.pow(0, 1) == 0
    assert fld.pow(0, 5) == 0
    for a in list(enumerate_elements(fld))[:9]:
        if a != 0:
            # Lagrange: the multiplicative group has order q-1.
            assert fld.pow(a, fld.q - 1) == 1
        assert fld.pow(a, fld.q) == a  # Frobenius fixed point of x^q


def test_frobenius_additivity():
    fld = ext_field_build(3, 2)
    for a in enumerate_elements(fld):
        for b in enumerate_elements(fld):
            assert fld.pow(fld.add(a, b), 3) == fld.add(
                fld.pow(a, 3), fld.pow(b, 3))


def _random_matrix(fld, rows, cols, rng):
    return [[rng.randrange(fld.q) for _ in range(cols)] for _ in range(rows)]


@given(data=st.data())
@settings(max_examples=80, deadline=None)
def test_rank_nullity(data):
    fld = data.draw(st.sampled_from(FIELDS))
    rows = data.draw(st.integers(1, 6))
    cols = data.draw(st.integers(1, 6))
    seed = data.draw(st.integers(0, 10**6))
    rng = random.Random(seed)
    a = _random_matrix(fld, rows, cols, rng)
    r = rank(fld, a)
    ker = kernel_basis(fld, a)
    assert r + len(ker) == cols
    for v in ker:
        assert all(x == 0 for x in mat_vec(fld, a, v))


@given(data=st.data())
@settings(max_examples=60, deadline=None)
def test_row_reduce_idempotent_and_canonical(data):
    fld = data.draw(st.sampled_from(FIELDS))
    rows = data.draw(st.integers(1, 5))
    cols = data.draw(st.integers(1, 5))
    seed = data.draw(st.integers(0, 10**6))
    rng = random.Random(seed)
    a = _random_matrix(fld, rows, cols, rng)
    red, piv = row_reduce(fld, a)
    red2, piv2 = row_reduce(fld, red)
    assert red == red2 and piv == piv2
    for k, j in enumerate(piv):
        assert red[k][j] == 1
        assert all(red[i][j] == 0 for i in range(len(red)) if i != k)
    # Canonical form is a basis invariant: shuffling rows changes nothing.
    shuffled = list(a)
    rng.shuffle(shuffled)
    if rank(fld, shuffled) == rank(fld, a):
        red3, _ = row_reduce(fld, shuffled)
        assert [r for r in red if any(r)] == [r for r in red3 if any(r)]


@given(data=st.data())
@settings(max_examples=60, deadline=None)
def test_solve_and_inverse(data):
    fld = data.draw(st.sampled_from(FIELDS))
    n = data.draw(st.integers(1, 5))
    seed = data.draw(st.integers(0, 10**6))
    rng = random.Random(seed)
    a = _random_matrix(fld, n, n, rng)
    v = [rng.randrange(fld.q) for _ in range(n)]
    b = mat_vec(fld, a, v)
    x = solve(fld, a, b)
    assert x is not None
    assert mat_vec(fld, a, x) == b
    if rank(fld, a) == n:
        ai = inverse(fld, a)
        assert mat_mul(fld, a, ai) == identity(fld, n)


def test_span_membership():
    fld = prime_field(5)
    vecs = [[1, 2, 0], [0, 1, 1]]
    basis = span_basis(fld, vecs)
    assert len(basis) == 2
    assert in_span(fld, vecs, [1, 3, 1])
    assert not in_span(fld, vecs, [0, 0, 1])


def test_mat_pow_matches_repeated_product():
    fld = prime_field(7)
    rng = random.Random(3)
    a = _random_matrix(fld, 4, 4, rng)
    acc = identity(fld, 4)
    for k in range(6):
        assert mat_pow(fld, a, k) == acc
        acc = mat_mul(fld, acc, a)


def test_transpose_involution_and_zero():
    a = [[1, 2, 3], [4, 5, 6]]
    assert transpose(transpose(a)) == a
    assert is_zero_matrix(zeros(2, 3))
    assert not is_zero_matrix(a)
