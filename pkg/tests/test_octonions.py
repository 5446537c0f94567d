from fractions import Fraction

from spinbits import reference as ref
from spinbits.octonions import (
    Octonion,
    SignedIndex,
    algebra_checks,
    division_table,
    identification_signs,
    octonion_mul,
    octonion_table,
    quaternion_checks,
    quaternion_table,
    real_clifford_table,
)


def test_real_clifford_table_matches_tabulated():
    table = real_clifford_table(8)
    gold = [ref.parse_signed_index_row(r) for r in ref.PHI_TABLE]
    for i in range(8):
        for j in range(8):
            assert (table[i][j].sign, table[i][j].index) == gold[i][j]


def test_real_clifford_table_spot_cells():
    table = real_clifford_table(8)
    assert table[0][0] == SignedIndex(1, 0)
    assert table[1][0] == SignedIndex(-1, 1)
    assert table[6][6] == SignedIndex(1, 0)


def test_identification_signs():
    assert identification_signs(8) == [1, -1, -1, 1, 1, -1, -1, -1]


def test_octonion_table_matches_tabulated():
    table = octonion_table()
    gold = [ref.parse_signed_index_row(r) for r in ref.OCT_TABLE]
    for i in range(8):
        for j in range(8):
            assert (table[i][j].sign, table[i][j].index) == gold[i][j]


def test_octonion_table_spot_cells():
    table = octonion_table()
    assert table[1][2] == SignedIndex(-1, 3)
    assert table[4][5] == SignedIndex(-1, 1)
    for j in range(8):
        assert table[0][j] == SignedIndex(1, j)


def test_octonion_mul_examples():
    x = Octonion([Fraction(k, 3) for k in range(1, 9)])
    assert octonion_mul(Octonion.unit(0), x) == x
    assert octonion_mul(Octonion.unit(1), Octonion.unit(1)) == -Octonion.unit(0)

    e1, e2, e4 = Octonion.unit(1), Octonion.unit(2), Octonion.unit(4)
    lhs = octonion_mul(octonion_mul(e1, e2), e4)
    rhs = octonion_mul(e1, octonion_mul(e2, e4))
    assert lhs == Octonion.unit(7)
    assert rhs == -Octonion.unit(7)


def test_norm_multiplicativity_example():
    e1, e2, e4 = Octonion.unit(1), Octonion.unit(2), Octonion.unit(4)
    x = e1 + e2
    prod = octonion_mul(x, e4)
    assert prod.norm() == Fraction(2)
    assert x.norm() * e4.norm() == Fraction(2)
    assert prod == -Octonion.unit(5) - Octonion.unit(6)


def test_algebra_checks_all_pass():
    for name, ok in algebra_checks(samples=100, seed=1):
        assert ok, name


def test_algebra_checks_deterministic():
    first = algebra_checks(samples=25, seed=7)
    second = algebra_checks(samples=25, seed=7)
    assert first == second


def test_quaternion_table_structure():
    table = quaternion_table()
    assert len(table) == 4
    for name, ok in quaternion_checks():
        assert ok, name


def test_quaternion_identity_row():
    table = quaternion_table()
    for j in range(4):
        assert table[0][j] == SignedIndex(1, j)
        assert table[j][0] == SignedIndex(1, j)


def test_division_table_cells_are_unit_signed():
    for n in (4, 8):
        for row in division_table(n):
            for cell in row:
                assert cell.sign in (1, -1)
                assert 0 <= cell.index < len(row)
