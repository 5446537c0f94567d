"""Division-algebra tables from Clifford multiplication on real spinor frames.

The bilinear map (vector, positive real spinor) -> negative real spinor
sends each (frame vector, frame spinor) pair to exactly plus or minus a
frame spinor; identifying the three frames with one coordinate space
turns the table into the octonion multiplication table (and at stage 4,
the quaternion one).
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, List, NamedTuple, Sequence, Tuple

from .clifford import clifford_apply
from .matrices import real_basis_frame
from .spinors import Spinor


class SignedIndex(NamedTuple):
    sign: int
    index: int

    def __neg__(self) -> "SignedIndex":
        return SignedIndex(-self.sign, self.index)


def _signed_expansion(frame, psi: Spinor) -> SignedIndex:
    coords = frame.expand(psi)
    hits = [(m, c) for m, c in enumerate(coords) if c]
    if len(hits) != 1 or abs(hits[0][1]) != 1:
        raise AssertionError(
            f"product is not a signed frame element: {hits}"
        )
    m, c = hits[0]
    return SignedIndex(1 if c > 0 else -1, m)


def real_clifford_table(n: int = 8) -> List[List[SignedIndex]]:
    """Cell (i, j) holds the signed negative-frame index of e_{i+1} acting
    on the j-th positive-frame spinor."""
    plus = real_basis_frame(n, "plus")
    minus = real_basis_frame(n, "minus")
    d = len(plus.vectors)
    table = []
    for i in range(d):
        row = []
        for j in range(d):
            img = clifford_apply(n, i + 1, plus.vectors[j])
            row.append(_signed_expansion(minus, img))
        table.append(row)
    return table


def identification_signs(n: int = 8) -> List[int]:
    """Signs s_i with (frame vector i) identified to s_i times unit i.

    Forced by the first column: e_{i+1} psi_0 = s_i phi_i, and unit 0 is
    the two-sided identity.
    """
    table = real_clifford_table(n)
    signs = []
    for i, row in enumerate(table):
        cell = row[0]
        if cell.index != i:
            raise AssertionError("first column is not a signed permutation fixing labels")
        signs.append(cell.sign)
    return signs


def division_table(n: int = 8) -> List[List[SignedIndex]]:
    """Unit multiplication table after identifying the three frames."""
    table = real_clifford_table(n)
    signs = identification_signs(n)
    d = len(table)
    return [
        [SignedIndex(signs[i] * table[i][j].sign, table[i][j].index) for j in range(d)]
        for i in range(d)
    ]


def octonion_table() -> List[List[SignedIndex]]:
    return division_table(8)


def quaternion_table() -> List[List[SignedIndex]]:
    return division_table(4)


class Octonion:
    """Octonion with eight exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Fraction]):
        if len(coeffs) != 8:
            raise ValueError("need 8 coefficients")
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @staticmethod
    def unit(i: int) -> "Octonion":
        return Octonion([Fraction(int(j == i)) for j in range(8)])

    @staticmethod
    def zero() -> "Octonion":
        return Octonion([Fraction(0)] * 8)

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "Octonion":
        return Octonion([-a for a in self.coeffs])

    def scale(self, c) -> "Octonion":
        c = Fraction(c)
        return Octonion([c * a for a in self.coeffs])

    def norm(self) -> Fraction:
        return sum((c * c for c in self.coeffs), Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, Octonion) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        parts = [f"{c}*e{i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) if parts else "0"


_TABLE_CACHE: Dict[int, List[List[SignedIndex]]] = {}


def _table() -> List[List[SignedIndex]]:
    if 8 not in _TABLE_CACHE:
        _TABLE_CACHE[8] = octonion_table()
    return _TABLE_CACHE[8]


def octonion_mul(x: Octonion, y: Octonion) -> Octonion:
    table = _table()
    out = [Fraction(0)] * 8
    for i, a in enumerate(x.coeffs):
        if not a:
            continue
        for j, b in enumerate(y.coeffs):
            if not b:
                continue
            cell = table[i][j]
            out[cell.index] += cell.sign * a * b
    return Octonion(out)


def random_octonion(rng: random.Random, span: int = 9) -> Octonion:
    return Octonion(
        [Fraction(rng.randint(-span, span), rng.randint(1, span)) for _ in range(8)]
    )


def algebra_checks(samples: int = 100, seed: int = 1) -> List[Tuple[str, bool]]:
    """Exact division-algebra properties on seeded random rational octonions."""
    rng = random.Random(seed)
    table = _table()
    results: List[Tuple[str, bool]] = []

    e0_identity = all(
        table[0][j] == SignedIndex(1, j) and table[j][0] == SignedIndex(1, j)
        for j in range(8)
    )
    results.append(("unit 0 is a two-sided identity", e0_identity))
    results.append(
        ("imaginary units square to minus the identity",
         all(table[i][i] == SignedIndex(-1, 0) for i in range(1, 8)))
    )
    results.append(
        ("distinct imaginary units anticommute",
         all(
             table[i][j].index == table[j][i].index
             and table[i][j].sign == -table[j][i].sign
             for i in range(1, 8)
             for j in range(1, 8)
             if i != j
         ))
    )

    norm_ok = alt_left = alt_right = True
    for _ in range(samples):
        x = random_octonion(rng)
        y = random_octonion(rng)
        xy = octonion_mul(x, y)
        if xy.norm() != x.norm() * y.norm():
            norm_ok = False
        if octonion_mul(x, octonion_mul(x, y)) != octonion_mul(octonion_mul(x, x), y):
            alt_left = False
        if octonion_mul(octonion_mul(y, x), x) != octonion_mul(y, octonion_mul(x, x)):
            alt_right = False
    results.append((f"norm multiplicativity on {samples} samples", norm_ok))
    results.append((f"left alternativity on {samples} samples", alt_left))
    results.append((f"right alternativity on {samples} samples", alt_right))

    e1, e2, e4 = Octonion.unit(1), Octonion.unit(2), Octonion.unit(4)
    witness = octonion_mul(octonion_mul(e1, e2), e4) != octonion_mul(
        e1, octonion_mul(e2, e4)
    )
    results.append(("non-associativity witness (units 1, 2, 4)", witness))

    orth = True
    for _ in range(10):
        x = random_octonion(rng)
        nx = x.norm()
        if not nx:
            continue
        cols = [octonion_mul(x, Octonion.unit(j)) for j in range(8)]
        for a in range(8):
            for b in range(a, 8):
                dot = sum(
                    (cols[a].coeffs[t] * cols[b].coeffs[t] for t in range(8)), Fraction(0)
                )
                if dot != (nx if a == b else 0):
                    orth = False
    results.append(("left multiplication columns scale orthonormally", orth))
    return results


def quaternion_checks() -> List[Tuple[str, bool]]:
    """Associativity and the quaternionic relations for the stage-4 table."""
    table = quaternion_table()
    results: List[Tuple[str, bool]] = []
    results.append(
        ("identity row and column", all(
            table[0][j] == SignedIndex(1, j) and table[j][0] == SignedIndex(1, j)
            for j in range(4)
        ))
    )
    results.append(
        ("imaginary units square to minus identity",
         all(table[i][i] == SignedIndex(-1, 0) for i in range(1, 4)))
    )
    results.append(
        ("imaginary units anticommute pairwise",
         all(
             table[i][j].index == table[j][i].index
             and table[i][j].sign == -table[j][i].sign
             for i in range(1, 4) for j in range(1, 4) if i != j
         ))
    )
    results.append(
        ("product of two distinct imaginary units is the third",
         all(
             table[i][j].index not in (0, i, j)
             for i in range(1, 4) for j in range(1, 4) if i != j
         ))
    )

    def mul(x: Tuple[int, int], y: Tuple[int, int]) -> Tuple[int, int]:
        cell = table[x[1]][y[1]]
        return (x[0] * y[0] * cell.sign, cell.index)

    assoc = all(
        mul(mul((1, a), (1, b)), (1, c)) == mul((1, a), mul((1, b), (1, c)))
        for a in range(4) for b in range(4) for c in range(4)
    )
    results.append(("associativity on all 64 basis triples", assoc))
    return results
