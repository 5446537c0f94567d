import random

import pytest

from spinbits.clifford import (
    CliffordElem,
    blade_product,
    chirality_involution,
    chirality_split,
    clifford_apply,
    delta_iso,
    exp_bivector,
    generator_action,
    lambda_vector,
    volume_element,
    word_apply,
)
from spinbits.matrices import spinor_to_column, tensor_oracle
from spinbits.scalars import Angle, I, ONE, Scalar
from spinbits.spinors import Spinor, chirality, hermitian, parity


def test_generator_action_examples():
    # the universal bit rule: e_5 flips bit 2 and reads bits 0..1
    assert clifford_apply(8, 5, Spinor.basis(4, 11)) == Spinor.basis(4, 15, I)
    # the tabulated e_5 u_10 illustration misprints the index; the rule
    # (and the tensor oracle) force the bit-2 flip to 14 with sign -i
    assert clifford_apply(8, 5, Spinor.basis(4, 10)) == Spinor.basis(4, 14, -I)

    assert clifford_apply(6, 1, Spinor.basis(3, 0)) == Spinor.basis(3, 1, I)
    assert clifford_apply(6, 2, Spinor.basis(3, 3)) == Spinor.basis(3, 2, -ONE)
    assert clifford_apply(3, 3, Spinor.basis(1, 0)) == Spinor.basis(1, 0, -I)


def test_generator_action_out_of_range():
    with pytest.raises(ValueError):
        clifford_apply(6, 7, Spinor.basis(3, 0))
    with pytest.raises(ValueError):
        clifford_apply(8, 1, Spinor.basis(3, 0))


def test_universality_for_low_generators():
    # for p < n the action is literally independent of the dimension
    for p in range(1, 6):
        for a in range(8):
            images = set()
            for n in (6, 8, 10, 12):
                c, b = generator_action(n, p, a)
                images.add((hash(c), b))
            assert len(images) == 1


def test_word_apply_examples():
    assert word_apply(6, [1, 2], Spinor.basis(3, 0)) == Spinor.basis(3, 0, I)
    rng = random.Random(4)
    for _ in range(20):
        psi = Spinor.basis(4, rng.randrange(16), Scalar.rational(rng.randint(1, 5)))
        assert word_apply(8, [1, 1], psi) == psi.scale(-ONE)


def test_algebra_product_examples():
    e1 = CliffordElem.generator(8, 1)
    e2 = CliffordElem.generator(8, 2)
    minus_one = CliffordElem.scalar(8, -ONE)
    assert e1 * e1 == minus_one
    assert e2 * e1 == -(e1 * e2)
    b = e1 * e2
    assert b * b == minus_one


def test_blade_product_signs():
    # e13 * e2: moving e2 past e3 costs one transposition
    sgn, mask = blade_product(0b101, 0b010)
    assert (sgn, mask) == (-1, 0b111)
    sgn, mask = blade_product(0b1, 0b1)
    assert (sgn, mask) == (-1, 0)


def test_operator_anticommutation():
    for n in (4, 6, 8):
        k = n // 2
        for p in range(1, n + 1):
            for q in range(1, n + 1):
                for a in range(1 << k):
                    u = Spinor.basis(k, a)
                    anti = clifford_apply(n, p, clifford_apply(n, q, u)) + clifford_apply(
                        n, q, clifford_apply(n, p, u)
                    )
                    want = u.scale(Scalar.rational(-2)) if p == q else Spinor.zero(k)
                    assert anti == want


def test_skew_symmetry_of_clifford_multiplication():
    rng = random.Random(8)
    for _ in range(40):
        n = rng.choice([2, 4, 6, 8])
        k = n // 2
        p = rng.randint(1, n)
        v = Spinor.basis(k, rng.randrange(1 << k), I + Scalar.rational(rng.randint(-2, 2)))
        w = Spinor.basis(k, rng.randrange(1 << k), Scalar.rational(rng.randint(-3, 3), 2))
        assert hermitian(clifford_apply(n, p, v), w) == -hermitian(v, clifford_apply(n, p, w))


def test_volume_element_and_chirality():
    vol = volume_element(8)
    assert vol.apply(Spinor.basis(4, 0)) == Spinor.basis(4, 0)
    plus, minus = chirality_split(8, Spinor.basis(4, 0))
    assert plus == Spinor.basis(4, 0) and minus.is_zero()
    plus, minus = chirality_split(8, Spinor.basis(4, 1))
    assert plus.is_zero() and minus == Spinor.basis(4, 1)


def test_volume_involution_at_stage_2():
    for a in (0, 1):
        u = Spinor.basis(1, a)
        assert chirality_involution(2, u) == u.scale(Scalar.rational(chirality(a)))


def test_chirality_involution_matches_parity():
    for n in (2, 4, 6, 8, 10):
        k = n // 2
        for a in range(1 << k):
            u = Spinor.basis(k, a)
            assert chirality_involution(n, u) == u.scale(Scalar.rational(chirality(a)))


def test_exp_bivector_identity_and_rejection():
    assert exp_bivector(8, [(Angle(0), (2, 3)), (Angle(0), (6, 7))]) == CliffordElem.one(8)
    with pytest.raises(ValueError):
        exp_bivector(8, [(Angle(3), (1, 2)), (Angle(3), (2, 3))])


def test_exp_bivector_four_term_expansion():
    # exp(t(e2e3 + e6e7)) = (1 + cos2t + (e2e3 + e6e7) sin2t + e2e3e6e7 (1 - cos2t)) / 2
    for kk in (1, 2, 3, 4, 6):
        t = Angle(kk)
        dbl = Angle(2 * kk)
        got = exp_bivector(8, [(t, (2, 3)), (t, (6, 7))])
        half = Scalar.rational(1, 2)
        e23 = CliffordElem.blade(8, (2, 3))
        e67 = CliffordElem.blade(8, (6, 7))
        e2367 = CliffordElem.blade(8, (2, 3, 6, 7))
        want = (
            CliffordElem.scalar(8, ONE + dbl.cos())
            + (e23 + e67).scale(dbl.sin())
            + e2367.scale(ONE - dbl.cos())
        ).scale(half)
        assert got == want


def test_quarter_turn_product_matches_tabulated_expansion():
    # at t = pi/4 the product is (1 + e2e3 + e6e7 + e2e3e6e7)/2
    got = exp_bivector(8, [(Angle(3), (2, 3)), (Angle(3), (6, 7))])
    half = Scalar.rational(1, 2)
    want = (
        CliffordElem.one(8)
        + CliffordElem.blade(8, (2, 3))
        + CliffordElem.blade(8, (6, 7))
        + CliffordElem.blade(8, (2, 3, 6, 7))
    ).scale(half)
    assert got == want


def test_lambda_vector_examples():
    e = lambda i: CliffordElem.generator(6, i)
    assert lambda_vector(6, [1, 2], e(1)) == -e(1)
    assert lambda_vector(6, [1, 2], e(3)) == e(3)
    # rotation doubling at exact angles: g = cos t + sin t e1e2
    for kk in range(24):
        t = Angle(kk)
        g = exp_bivector(6, [(t, (1, 2))])
        img = lambda_vector(6, g, e(1))
        dbl = Angle(2 * kk)
        assert img == e(1).scale(dbl.cos()) + e(2).scale(dbl.sin())


def test_lambda_vector_rejects_higher_grade():
    y = CliffordElem.blade(6, (1, 2))
    with pytest.raises(ValueError):
        lambda_vector(6, [1, 2], y)


def test_reversion():
    x = CliffordElem.from_word(8, [1, 2, 3])
    assert x.reverse() == CliffordElem.from_word(8, [3, 2, 1])
    y = CliffordElem.from_word(8, [1, 2]) + CliffordElem.one(8)
    assert y.reverse() == CliffordElem.from_word(8, [2, 1]) + CliffordElem.one(8)


def test_delta_iso_examples():
    assert delta_iso(2, Spinor.basis(1, 0)) == Spinor.basis(2, 0)
    assert delta_iso(2, Spinor.basis(1, 1)) == Spinor.basis(2, 3)
    assert delta_iso(3, Spinor.basis(2, 1)) == Spinor.basis(3, 5)
    # a = 5 already has even parity at width 3
    assert delta_iso(4, Spinor.basis(3, 5)) == Spinor.basis(4, 5)


def test_delta_iso_equivariance():
    for k in range(2, 6):
        n = 2 * k
        for a in range(1 << (k - 1)):
            u = Spinor.basis(k - 1, a)
            fu = delta_iso(k, u)
            assert parity(next(iter(fu.terms))) == 0
            for p in range(1, 2 * k - 1):
                for q in range(p + 1, 2 * k):
                    lhs = delta_iso(k, word_apply(2 * k - 1, [p, q], u))
                    rhs = word_apply(n, [p, q], fu)
                    assert lhs == rhs


def test_algebra_product_compatible_with_spinor_action():
    rng = random.Random(55)

    def rand_scalar():
        from fractions import Fraction
        return Scalar({1: (Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4)))})

    def rand_elem(n, terms):
        out = CliffordElem(n)
        for _ in range(terms):
            out = out + CliffordElem(n, {rng.randrange(1 << n): rand_scalar()})
        return out

    for _ in range(40):
        n, k = 6, 3
        x, y = rand_elem(n, 2), rand_elem(n, 2)
        psi = Spinor.basis(k, rng.randrange(1 << k), rand_scalar())
        assert (x * y).apply(psi) == x.apply(y.apply(psi))


def test_kernel_matches_oracle_spot():
    for n in (5, 9):
        k = n // 2
        oracle = tensor_oracle(n)
        for p in range(1, n + 1):
            for a in range(1 << k):
                col = spinor_to_column(clifford_apply(n, p, Spinor.basis(k, a)))
                assert [oracle[p - 1].data[r][a] for r in range(1 << k)] == col
