import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from braidcong import intlinalg as il
from braidcong.braid import BraidWord, artin_generator, parse_braid, random_word
from braidcong.burau import (SymplectizationError, burau_at, burau_generator, burau_unreduced,
                             integral_burau, integral_burau_mod, rho_symplectic, rho_symplectic_mod,
                             standard_form, symplectize)
from braidcong.laurent import ONE, T, ZERO, LaurentMatrix, LaurentPoly


def eye(n):
    return np.eye(n, dtype=np.int64)


def same(A, B):
    return np.array_equal(np.asarray(A, dtype=object), np.asarray(B, dtype=object))


# -- Laurent polynomials ---------------------------------------------------------

def test_laurent_arithmetic():
    p = ONE - T
    q = LaurentPoly.monomial(1, -1)
    assert p * q == q - ONE
    assert (T * q) == ONE
    assert p - p == ZERO and (p - p).is_zero()
    assert 3 - T == LaurentPoly((3, -1))
    assert hash(LaurentPoly((0, 1, 0), -1)) == hash(ONE)
    assert str(LaurentPoly((1, -2, 1))) == "1 - 2*t + t^2"


@pytest.mark.parametrize("t", [-1, 1, 2, 3])
def test_laurent_evaluation(t):
    p = LaurentPoly((2, 0, -1, 5), -1)
    x = sympy.Rational(t)
    assert sympy.Rational(p(t) if t in (1, -1) else p(sympy.Rational(t))) == 2 / x - x + 5 * x ** 2


def test_laurent_matrix_determinant_and_apply():
    M = burau_generator(1, 2)
    assert M.determinant() == -T
    assert M.apply([1, 1]) == [ONE, ONE]
    with pytest.raises(ValueError):
        LaurentMatrix([[1, 2]])


# -- unreduced Burau -----------------------------------------------------------

def test_burau_generator_formula():
    M = burau_unreduced(BraidWord(2, (1,)))
    assert M == LaurentMatrix([[ONE - T, T], [ONE, ZERO]])


def test_burau_empty_and_inverse():
    assert burau_unreduced(BraidWord(3)) == LaurentMatrix.identity(3)
    assert burau_unreduced(parse_braid("n=3; 1 -1")) == LaurentMatrix.identity(3)
    assert burau_unreduced(parse_braid("n=3; -2 2")) == LaurentMatrix.identity(3)


def test_burau_braid_relations():
    assert burau_unreduced(parse_braid("n=3; 1 2 1")) == burau_unreduced(parse_braid("n=3; 2 1 2"))
    assert burau_unreduced(parse_braid("n=4; 1 3")) == burau_unreduced(parse_braid("n=4; 3 1"))


def test_burau_generator_range():
    with pytest.raises(ValueError):
        burau_generator(3, 3)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 5), st.integers(0, 2**32), st.integers(0, 10))
def test_burau_specializes_to_integral(n, seed, length):
    w = random_word(n, length, seed)
    assert same(burau_unreduced(w).evaluate(-1), integral_burau(w))


def test_burau_at_agrees_with_laurent():
    p = 1_000_003
    w = random_word(4, 15, 2)
    exact = burau_unreduced(w).evaluate(Fraction(3))
    expected = [[x.numerator * pow(x.denominator, -1, p) % p for x in row] for row in exact]
    assert same(burau_at(w, 3, p), expected)


# -- integral Burau ----------------------------------------------------------------

def test_integral_generator_blocks():
    assert same(integral_burau(parse_braid("n=2; 1")), [[2, -1], [1, 0]])
    assert same(integral_burau(parse_braid("n=2; 1 1")), [[3, -2], [2, -1]])
    M = integral_burau(parse_braid("n=2; 1 1 1 1"))
    assert same(M, [[5, -4], [4, -3]])
    assert same(il.mod(M, 4), eye(2))
    assert same(integral_burau(parse_braid("n=2; -1")), [[0, 1], [-1, 2]])


def test_integral_burau_mod_matches_exact():
    w = random_word(6, 40, 11)
    for m in (2, 4, 8):
        assert same(integral_burau_mod(w, m), il.mod(integral_burau(w), m))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8), st.integers(0, 2**32))
def test_homomorphism_and_fixed_vector(n, seed):
    rng = random.Random(seed)
    u, v = random_word(n, rng.randint(0, 10), rng), random_word(n, rng.randint(0, 10), rng)
    assert same(integral_burau(u * v), integral_burau(u).dot(integral_burau(v)))
    ones = np.ones(n, dtype=object)
    assert same(integral_burau(u).dot(ones), ones)


def test_determinant_is_one():
    for n in (3, 4, 5):
        assert il.det(integral_burau(random_word(n, 30, n))) == 1


# -- symplectic coordinates -------------------------------------------------------

@pytest.mark.parametrize("n, dim, radical", [(3, 2, True), (4, 4, False), (5, 4, True), (6, 6, False),
                                             (7, 6, True), (8, 8, False)])
def test_symplectize_shapes(n, dim, radical):
    ctx = symplectize(n)
    assert ctx.dim == dim and (ctx.radical is not None) == radical
    assert ctx.g == (n - 1) // 2 if n % 2 else (n - 2) // 2
    assert il.det(ctx.basis) in (1, -1)
    assert same(il.matmul(ctx.basis_inv, ctx.basis), eye(n))
    assert same(il.matmul(ctx.basis.T, ctx.burau_form, ctx.basis)[:dim, :dim], standard_form(dim))
    assert same(ctx.J, standard_form(dim))


def test_even_last_vector_is_all_ones():
    for n in (4, 6, 8):
        ctx = symplectize(n)
        assert same(ctx.basis[:, -1], np.ones(n, dtype=object))


def test_odd_radical_is_all_ones():
    for n in (3, 5, 7):
        ctx = symplectize(n)
        assert set(ctx.radical) == {1} or set(ctx.radical) == {-1}


def test_symplectize_rejects_small_n():
    with pytest.raises(ValueError):
        symplectize(2)


def test_symplectization_error_is_runtime_error():
    assert issubclass(SymplectizationError, RuntimeError)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
@pytest.mark.parametrize("variant", [0, 1, 7])
def test_rho_symplectic_preserves_form(n, variant):
    ctx = symplectize(n, variant)
    rng = random.Random(n * 100 + variant)
    for _ in range(40):
        w = random_word(n, rng.randint(0, 20), rng)
        M = rho_symplectic(w, ctx)
        assert same(M.T.dot(ctx.J).dot(M), ctx.J)
        if ctx.y_last is not None:
            assert same(M.dot(ctx.y_last), ctx.y_last)
        else:
            # the trivial summand splits off exactly
            full = il.matmul(ctx.basis_inv, integral_burau(w), ctx.basis)
            assert not full[: ctx.dim, ctx.dim:].any() and not full[ctx.dim:, : ctx.dim].any()
            assert full[-1, -1] == 1


def test_rho_symplectic_examples():
    ctx = symplectize(3)
    assert same(rho_symplectic(BraidWord(3), ctx), eye(2))
    a12 = artin_generator(1, 2, 3)
    assert same(rho_symplectic_mod(a12 ** 2, 4), eye(2))
    assert not same(rho_symplectic_mod(a12, 4), eye(2))
    with pytest.raises(ValueError):
        rho_symplectic(BraidWord(4), ctx)


def test_variants_give_conjugate_images():
    w = random_word(5, 25, 0)
    for m in (2, 4):
        a, b = rho_symplectic_mod(w, m, 0), rho_symplectic_mod(w, m, 3)
        assert (a == eye(4)).all() == (b == eye(4)).all()


# -- integer linear algebra ---------------------------------------------------------

def test_hermite_and_kernel():
    A = il.int_matrix([[2, 4, 6], [1, 3, 5]])
    H, U, r = il.column_hermite(A)
    assert r == 2 and il.det(U) in (1, -1)
    assert same(il.matmul(A, U), H)
    K = il.integer_kernel(A)
    assert K.shape == (3, 1) and not il.matmul(A, K).any()


def test_primitive_vector_and_inverse():
    assert il.primitive_vector([sympy.Rational(-2, 3), sympy.Rational(4, 3), 0]) == [1, -2, 0]
    M = il.int_matrix([[2, 1], [1, 1]])
    assert same(il.matmul(M, il.unimodular_inverse(M)), eye(2))
    with pytest.raises(ValueError):
        il.unimodular_inverse(il.int_matrix([[2, 0], [0, 1]]))
