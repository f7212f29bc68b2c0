from __future__ import annotations

import itertools
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_matrix
from strongclean.errors import GuardError, NotMonicError, ShapeError
from strongclean.matrices import (
    MAX_DIM,
    Matrix,
    adjugate,
    charpoly,
    companion,
    conjugate,
    cyclic_search_is_exhaustive,
    determinant,
    is_cyclic,
    krylov_matrix,
    mat_arith,
    try_invert_matrix,
)
from strongclean.poly import Polynomial, eval_at_matrix
from strongclean.rings import DualExtension, GaloisField4, GroupRingC2, Integers, IntegersMod, TruncatedPowerSeries

Z = Integers()
T = sympy.Symbol("t")


def laplace_det(R, rows):
    """Cofactor expansion along the first row, an independent determinant."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = R.zero
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = R.mul(rows[0][j], laplace_det(R, minor))
        acc = R.add(acc, term if j % 2 == 0 else R.neg(term))
    return acc


def laplace_charpoly(A: Matrix) -> Polynomial:
    """det(tI - A) by cofactor expansion over the polynomial ring."""
    R = A.ring
    n = A.rows
    entries = [
        [Polynomial(R, (R.neg(A[i, j]), R.one if i == j else R.zero)) for j in range(n)] for i in range(n)
    ]

    def det(rows):
        if len(rows) == 1:
            return rows[0][0]
        acc = Polynomial(R)
        for j in range(len(rows)):
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            term = rows[0][j] * det(minor)
            acc = acc + term if j % 2 == 0 else acc - term
        return acc

    return det(entries)


@pytest.mark.parametrize("R", [IntegersMod(6), DualExtension(GaloisField4()), GroupRingC2(IntegersMod(2))], ids=str)
def test_berkowitz_matches_cofactor_expansion(R):
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 4)
        A = random_matrix(R, rng, n)
        assert charpoly(A) == laplace_charpoly(A)
        assert determinant(A) == laplace_det(R, [list(r) for r in A.entries])


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_integer_charpoly_and_det_match_sympy(rows):
    A = Matrix.from_ints(Z, rows)
    M = sympy.Matrix(rows)
    assert determinant(A) == M.det()
    assert list(reversed(charpoly(A).coeffs)) == M.charpoly(T).all_coeffs()


def test_determinant_is_multiplicative():
    rng = random.Random(11)
    for R in (Z, IntegersMod(6), TruncatedPowerSeries(IntegersMod(4), 3)):
        for _ in range(50):
            n = rng.randint(1, 3)
            A, B = random_matrix(R, rng, n), random_matrix(R, rng, n)
            assert determinant(A @ B) == R.mul(determinant(A), determinant(B))


def test_cayley_hamilton():
    rng = random.Random(3)
    for R in (Z, IntegersMod(8), DualExtension(IntegersMod(4))):
        for _ in range(30):
            A = random_matrix(R, rng, rng.randint(1, 4))
            assert eval_at_matrix(charpoly(A), A) == Matrix.zeros(R, A.rows)


def test_known_values():
    A = Matrix.from_ints(Z, [[0, 3], [1, 2]])
    assert charpoly(A) == Polynomial.from_ints(Z, [-3, -2, 1])
    assert determinant(A) == -3
    assert A @ A == Matrix.from_ints(Z, [[3, 6], [2, 7]])
    assert determinant(Matrix.from_ints(Z, [[8, 6], [3, 7]])) == 38
    assert charpoly(Matrix.zeros(Z, 2)) == Polynomial.from_ints(Z, [0, 0, 1])


def test_inversion_exhaustive_mod4():
    R = IntegersMod(4)
    eye = Matrix.identity(R, 2)
    units = 0
    for e in itertools.product(range(4), repeat=4):
        A = Matrix(R, [e[:2], e[2:]])
        inv = try_invert_matrix(A)
        brute = next(
            (B for f in itertools.product(range(4), repeat=4) if A @ (B := Matrix(R, [f[:2], f[2:]])) == eye),
            None,
        )
        assert (inv is None) == (brute is None)
        if inv is not None:
            units += 1
            assert inv == brute
    # |GL2(Z/4)| = 96
    assert units == 96


def test_adjugate_identity():
    rng = random.Random(5)
    for _ in range(50):
        A = random_matrix(Z, rng, rng.randint(1, 4))
        d = determinant(A)
        assert A @ adjugate(A) == Matrix.identity(Z, A.rows).scale(d)


@pytest.mark.parametrize("R", [IntegersMod(2), IntegersMod(3)], ids=str)
def test_companion_round_trip_exhaustive(R):
    for d in range(1, 5):
        for lower in itertools.product(range(R.n), repeat=d):
            h = Polynomial.monic(R, lower)
            C = companion(h)
            assert charpoly(C) == h
            assert is_cyclic(C) is not None


def test_companion_layout():
    h = Polynomial.from_ints(Z, [-3, -2, 1])
    assert companion(h) == Matrix.from_ints(Z, [[0, 3], [1, 2]])
    with pytest.raises(NotMonicError):
        companion(Polynomial.from_ints(Z, [1, 2]))


def test_cyclicity():
    assert is_cyclic(Matrix.from_ints(Z, [[2, 0], [0, -1]])) is None
    assert is_cyclic(Matrix.identity(IntegersMod(3), 2)) is None
    # diag(0,1) over Z/2 is cyclic: alpha = (1,1) gives Krylov [[1,0],[1,1]]
    A = Matrix.from_ints(IntegersMod(2), [[0, 0], [0, 1]])
    alpha = is_cyclic(A)
    assert alpha is not None
    K = krylov_matrix(A, alpha)
    assert IntegersMod(2).is_unit(determinant(K))
    # a cyclic matrix is conjugate to the companion of its charpoly
    assert conjugate(A, K) == companion(charpoly(A))
    assert cyclic_search_is_exhaustive(IntegersMod(2), 2)
    assert not cyclic_search_is_exhaustive(Z, 2)


def test_shape_guards():
    with pytest.raises(GuardError):
        Matrix.zeros(Z, MAX_DIM + 1)
    with pytest.raises(ShapeError):
        Matrix(Z, [[1, 2], [3]])
    with pytest.raises(ShapeError):
        determinant(Matrix(Z, [[1, 2]]))
    with pytest.raises(ShapeError):
        Matrix(Z, [[1, 2]]) @ Matrix(Z, [[1, 2]])
    assert mat_arith("scalar_mul", Matrix.identity(Z, 2), 3) == Matrix.diag(Z, [3, 3])
