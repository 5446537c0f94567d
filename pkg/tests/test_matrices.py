import random
from fractions import Fraction

import pytest

from spinbits.clifford import exp_bivector
from spinbits.fields import build_field_system
from spinbits.matrices import (
    Matrix,
    chirality_indices,
    e_basis_compose,
    e_basis_decompose,
    kappa_matrix,
    kappa_pm_matrix,
    lambda_matrix,
    real_basis_frame,
    real_rep_matrix,
    tensor_oracle,
)
from spinbits.scalars import Angle, I, ONE, Scalar, ZERO
from spinbits.triality import build_sigma_star, build_tau_star, kappa_real_matrix


def diag(entries):
    n = len(entries)
    return Matrix([[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)])


def test_kappa6_golden_matrices():
    blk1 = [[ZERO, I], [I, ZERO]]
    blk2 = [[ZERO, -ONE], [ONE, ZERO]]
    for word, blk in (([1], blk1), ([2], blk2)):
        M = kappa_matrix(6, word)
        for b in range(4):
            for r in range(2):
                for c in range(2):
                    assert M.data[2 * b + r][2 * b + c] == blk[r][c]
        for r in range(8):
            for c in range(8):
                if r // 2 != c // 2:
                    assert M.data[r][c] == ZERO
    assert kappa_matrix(6, [1, 2]) == diag([I, -I, I, -I, I, -I, I, -I])


def test_kappa_matrix_against_oracle_words():
    rng = random.Random(13)
    for n in (4, 6, 8, 10):
        oracle = tensor_oracle(n)
        for _ in range(6):
            word = [rng.randint(1, n) for _ in range(rng.randint(1, 3))]
            M = kappa_matrix(n, word)
            O = Matrix.identity(1 << (n // 2))
            for p in word:
                O = O * oracle[p - 1]
            assert M == O


def test_kappa_pm_examples():
    assert kappa_pm_matrix(8, [], 1) == Matrix.identity(8)
    idx = chirality_indices(8, -1)
    full = kappa_matrix(8, [1, 2])
    want = Matrix([[full.data[r][c] if r == c else ZERO for c in idx] for r in idx])
    assert kappa_pm_matrix(8, [1, 2], -1) == want
    with pytest.raises(ValueError):
        kappa_pm_matrix(8, [1], 1)


def test_half_spinor_rotation_blocks():
    # the one-parameter subgroup through e2e3 + e6e7 acts by double-angle
    # rotations in slots (2,3) and (6,7) of the minus frame
    frame = real_basis_frame(8, "minus")
    for kk in (0, 1, 2, 3, 6):
        t = Angle(kk)
        dbl = Angle(2 * kk)
        elem = exp_bivector(8, [(t, (2, 3)), (t, (6, 7))])
        cols = []
        for v in frame.vectors:
            img = elem.apply(v)
            cols.append(frame.expand_scalars(img))
        got = Matrix.from_columns(cols)
        expect = [[ONE if i == j else ZERO for j in range(8)] for i in range(8)]
        for (lo, hi) in ((1, 2), (5, 6)):
            expect[lo][lo] = dbl.cos()
            expect[hi][hi] = dbl.cos()
            expect[lo][hi] = -dbl.sin()
            expect[hi][lo] = dbl.sin()
        assert got == Matrix(expect)


def test_real_rep_matrix_examples():
    assert real_rep_matrix(8, [1], "plus") == Matrix.identity(8)

    M = real_rep_matrix(8, [2, 3], "plus")
    assert M.is_antisymmetric()
    assert M.is_rational()
    assert M * M == Matrix.identity(8).scale(-ONE)

    # stage 10: the matrix of e1e2 on the full real frame is the first
    # field of the 31-sphere system
    M10 = real_rep_matrix(10, [1, 2], "full")
    J1 = build_field_system(32).J[0]
    assert M10 == Matrix.from_int_rows(J1.to_int_rows())


def test_real_rep_matrix_rejects_span_breakers():
    with pytest.raises(ValueError):
        real_rep_matrix(10, [1], "full")


def test_lambda_matrix_examples():
    assert lambda_matrix(6, [1, 2]) == diag([-ONE, -ONE, ONE, ONE, ONE, ONE])
    assert lambda_matrix(8, [1, 2, 1, 2]) == Matrix.identity(8)
    with pytest.raises(ValueError):
        lambda_matrix(6, [1])


def test_lambda_matrices_are_special_orthogonal():
    rng = random.Random(21)
    for _ in range(10):
        n = rng.choice([4, 6, 8])
        word = [rng.randint(1, n) for _ in range(2 * rng.randint(1, 2))]
        M = lambda_matrix(n, word)
        assert M * M.transpose() == Matrix.identity(n)
        assert M.det() == ONE


def test_det_basics():
    assert Matrix.identity(5).det() == ONE
    assert Matrix.zero(3, 3).det() == ZERO
    M = Matrix.from_int_rows([[2, 1], [1, 1]])
    assert M.det() == ONE
    rng = random.Random(77)
    for _ in range(10):
        A = Matrix.from_int_rows([[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)])
        B = Matrix.from_int_rows([[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)])
        assert (A * B).det() == A.det() * B.det()


def test_e_basis_decompose_examples():
    M = kappa_real_matrix([1, 2], "minus")
    assert e_basis_decompose(M) == {
        (1, 2): Fraction(-1), (3, 4): Fraction(-1), (5, 6): Fraction(-1), (7, 8): Fraction(-1)
    }
    M = kappa_real_matrix([1, 2], "plus")
    assert e_basis_decompose(M) == {
        (1, 2): Fraction(1), (3, 4): Fraction(1), (5, 6): Fraction(1), (7, 8): Fraction(1)
    }
    assert e_basis_decompose(Matrix.zero(8, 8)) == {}


def test_e_basis_round_trip():
    rng = random.Random(17)
    for _ in range(10):
        coeffs = {}
        for i in range(1, 9):
            for j in range(i + 1, 9):
                if rng.random() < 0.3:
                    coeffs[(i, j)] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        coeffs = {k: v for k, v in coeffs.items() if v}
        M = e_basis_compose(8, coeffs)
        assert e_basis_decompose(M) == coeffs


def test_e_basis_decompose_rejects_non_antisymmetric():
    with pytest.raises(ValueError):
        e_basis_decompose(Matrix.identity(4))


def test_nullspace_examples():
    rank, kernel = Matrix.identity(4).nullspace()
    assert rank == 4 and kernel == []

    sig = build_sigma_star().matrix
    shifted = sig - Matrix.identity(28)
    rank, kernel = shifted.nullspace()
    assert len(kernel) == 14 and rank + 14 == 28

    tau = build_tau_star().matrix
    rank, kernel = (tau + Matrix.identity(28)).nullspace()
    assert len(kernel) == 7


def test_nullspace_vectors_are_in_kernel():
    rng = random.Random(31)
    rows = [[Scalar.rational(rng.randint(-3, 3)) for _ in range(6)] for _ in range(4)]
    M = Matrix(rows)
    rank, kernel = M.nullspace()
    assert rank + len(kernel) == 6
    for vec in kernel:
        assert all(x == ZERO for x in M.apply(vec))


def test_matrix_inverse():
    rng = random.Random(41)
    M = Matrix([[Scalar.rational(rng.randint(-4, 4)) + Scalar.rational(rng.randint(0, 1)) * I
                 for _ in range(4)] for _ in range(4)])
    if M.rank() == 4:
        assert M * M.inverse() == Matrix.identity(4)


def test_tensor_oracle_structure():
    o2 = tensor_oracle(2)
    assert o2[0] == Matrix([[ZERO, I], [I, ZERO]])
    assert o2[1] == Matrix([[ZERO, -ONE], [ONE, ZERO]])
    o3 = tensor_oracle(3)
    assert o3[2] == Matrix([[-I, ZERO], [ZERO, I]])
    o6 = tensor_oracle(6)
    assert o6[0] == kappa_matrix(6, [1])
    assert o6[1] == kappa_matrix(6, [2])


def test_tensor_oracle_limit(monkeypatch):
    monkeypatch.setenv("SPINBITS_MAX_N", "6")
    tensor_oracle.cache_clear()
    with pytest.raises(ValueError):
        tensor_oracle(8)
    monkeypatch.delenv("SPINBITS_MAX_N")
    tensor_oracle.cache_clear()


def test_matrix_json_round_trip():
    M = kappa_matrix(4, [1, 3])
    assert Matrix.from_json(M.to_json()) == M
