"""Orthonormal tangent vector fields on spheres from real Clifford modules.

For the largest stage r whose irreducible real module dimension divides
N, the images of e_1 e_j (j = 2..r) on R^N give r-1 antisymmetric
complex structures J with pairwise anticommutation, so Z, J_2 Z, ...,
J_r Z is an exact orthogonal frame at every point Z of the sphere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .clifford import word_apply
from .matrices import real_basis_frame
from .scalars import Scalar
from .spinors import Spinor, parity, real_structure


@dataclass(frozen=True)
class IrrepInfo:
    r: int
    d: int
    count: int
    field_type: str


_TYPE_BY_RESIDUE = {
    1: "R", 2: "C", 3: "H", 4: "H+H", 5: "H", 6: "C", 7: "R", 0: "R+R",
}


def irrep_info(r: int) -> IrrepInfo:
    """Dimension and count of the irreducible real modules at stage r."""
    if r < 1:
        raise ValueError("stage must be positive")
    res = r % 8
    half = r // 2
    if res in (1, 7):
        d = 1 << half
    elif res in (2, 4, 6):
        d = 1 << (r // 2)
    elif res in (3, 5):
        d = 1 << (half + 1)
    else:  # res == 0
        d = 1 << (r // 2 - 1)
    count = 2 if r % 4 == 0 else 1
    return IrrepInfo(r, d, count, _TYPE_BY_RESIDUE[res])


def max_stage(N: int) -> int:
    """Largest r whose irreducible module dimension divides N."""
    if N < 1:
        raise ValueError("need N >= 1")
    best = 1
    r = 1
    while True:
        d = irrep_info(r).d
        if d > N:
            break
        if N % d == 0:
            best = r
        r += 1
    return best


def hurwitz_radon(N: int) -> int:
    """Closed form 8a + 2^b for N = 2^(4a+b) * odd, 0 <= b <= 3."""
    if N < 1:
        raise ValueError("need N >= 1")
    twos = 0
    while N % 2 == 0:
        N //= 2
        twos += 1
    a, b = divmod(twos, 4)
    return 8 * a + (1 << b)


def _aliased_stage(r: int) -> int:
    """Reduce to the stages carrying their own real frame (0,1,2,4 mod 8)."""
    while r % 8 not in (0, 1, 2, 4):
        r -= 1
    return r


class SignedPermMatrix:
    """Antisymmetric signed permutation matrix, stored sparsely both ways."""

    __slots__ = ("n", "col_to_row", "row_to_col")

    def __init__(self, n: int, col_to_row: Dict[int, Tuple[int, int]]):
        if len(col_to_row) != n:
            raise ValueError("not a permutation")
        self.n = n
        self.col_to_row = col_to_row
        self.row_to_col = {}
        for c, (r, s) in col_to_row.items():
            if s not in (1, -1):
                raise ValueError("entries must be +-1")
            if r in self.row_to_col:
                raise ValueError("not a permutation")
            self.row_to_col[r] = (c, s)

    def apply(self, z: Sequence[Fraction]) -> List[Fraction]:
        if len(z) != self.n:
            raise ValueError("length mismatch")
        out = [Fraction(0)] * self.n
        for c, (r, s) in self.col_to_row.items():
            if z[c]:
                out[r] = s * z[c]
        return out

    def compose(self, other: "SignedPermMatrix") -> "SignedPermMatrix":
        # self * other as matrices
        c2r = {}
        for c, (mid, s1) in other.col_to_row.items():
            r, s2 = self.col_to_row[mid]
            c2r[c] = (r, s1 * s2)
        return SignedPermMatrix(self.n, c2r)

    def is_antisymmetric(self) -> bool:
        return all(
            self.col_to_row.get(r) == (c, -s) for c, (r, s) in self.col_to_row.items()
        )

    def is_minus_identity(self) -> bool:
        return all(self.col_to_row.get(c) == (c, -1) for c in range(self.n))

    def __neg__(self) -> "SignedPermMatrix":
        return SignedPermMatrix(
            self.n, {c: (r, -s) for c, (r, s) in self.col_to_row.items()}
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SignedPermMatrix)
            and self.n == other.n
            and self.col_to_row == other.col_to_row
        )

    def anticommutes_with(self, other: "SignedPermMatrix") -> bool:
        ab = self.compose(other)
        ba = other.compose(self)
        return ab == -ba

    def to_int_rows(self) -> List[List[int]]:
        rows = [[0] * self.n for _ in range(self.n)]
        for c, (r, s) in self.col_to_row.items():
            rows[r][c] = s
        return rows


def _irrep_block(r: int, which: str, p: int) -> SignedPermMatrix:
    """The image of e_1 e_p on one irreducible real frame, as a signed permutation."""
    frame = real_basis_frame(r, which)
    d = len(frame.vectors)
    col_to_row = {}
    for c in range(d):
        img = word_apply(r, [1, p], frame.vectors[c])
        coords = frame.expand(img)
        hits = [(m, v) for m, v in enumerate(coords) if v]
        if len(hits) != 1 or abs(hits[0][1]) != 1:
            raise AssertionError("field generator is not a signed permutation")
        col_to_row[c] = (hits[0][0], 1 if hits[0][1] > 0 else -1)
    return SignedPermMatrix(d, col_to_row)


def _tensor_identity(block: SignedPermMatrix, copies: int, offset: int, n: int,
                     into: Dict[int, Tuple[int, int]]):
    d = block.n
    for q in range(copies):
        base = offset + q * d
        for c, (r, s) in block.col_to_row.items():
            into[base + c] = (base + r, s)


@dataclass
class FieldSystem:
    """The r-1 exact orthogonal almost-complex structures on R^N."""

    N: int
    r: int
    multiplicities: Tuple[int, int]
    J: List[SignedPermMatrix]

    def field_count(self) -> int:
        return self.r - 1

    def evaluate(self, j: int, Z: Sequence) -> List[Fraction]:
        """Value of the j-th field (1-based) at coordinates Z."""
        if not 1 <= j <= self.r - 1:
            raise ValueError(f"field index {j} out of range")
        z = [Fraction(x) for x in Z]
        return self.J[j - 1].apply(z)


def build_field_system(N: int, split: Optional[Tuple[int, int]] = None) -> FieldSystem:
    """Maximal system of tangent fields on S^(N-1).

    The stage is r = max_stage(N); the module is m copies of the real
    irreducible frame (m1 plus- and m2 minus-copies when there are two
    inequivalent ones, all-plus by default).
    """
    if N < 2:
        raise ValueError("need N >= 2")
    r = max_stage(N)
    rr = _aliased_stage(r)
    info = irrep_info(rr)
    d = info.d
    if r != rr and irrep_info(r).d != d:
        raise AssertionError("aliased stage changed the module dimension")
    if info.count == 2:
        if split is None:
            m1, m2 = N // d, 0
        else:
            m1, m2 = split
        if d * (m1 + m2) != N:
            raise ValueError(f"split {split} does not fill dimension {N}")
    else:
        if split is not None:
            raise ValueError("split only applies when two inequivalent modules exist")
        m1, m2 = N // d, 0

    which1 = "plus" if info.count == 2 else "full"
    Js = []
    for p in range(2, rr + 1):
        block1 = _irrep_block(rr, which1, p)
        c2r: Dict[int, Tuple[int, int]] = {}
        _tensor_identity(block1, m1, 0, N, c2r)
        if m2:
            block2 = _irrep_block(rr, "minus", p)
            _tensor_identity(block2, m2, m1 * d, N, c2r)
        Js.append(SignedPermMatrix(N, c2r))
    return FieldSystem(N=N, r=rr, multiplicities=(m1, m2), J=Js)


def e1ep_closed_form(r: int, p: int, a: int) -> Tuple[Scalar, int]:
    """Single-formula action of e_1 e_p on u_a (the composite bit rule)."""
    if not 2 <= p <= r:
        raise ValueError("p out of range")
    a0 = a & 1
    if p == 2:
        sign = 1 if a0 == 0 else -1
        return Scalar.i_power(1 if sign > 0 else 3), a
    k2 = r // 2
    if p == r and r % 2 == 1:
        exp = (r // 2) + 1 + bin(a & ((1 << (r // 2)) - 1)).count("1")
        coeff = Scalar.rational(1 if exp % 2 == 0 else -1)
        return coeff, a + (1 if a0 == 0 else -1)
    j = (p + 1) // 2
    ajm1 = (a >> (j - 1)) & 1
    low = bin(a & ((1 << (j - 1)) - 1)).count("1")
    exp2 = (2 * j - 1 + low + ajm1 * (-2 * j + p + 1)) % 2
    coeff = Scalar.i_power(1 - p + 2 * exp2)
    b = a + ((1 << (j - 1)) if ajm1 == 0 else -(1 << (j - 1))) + (1 if a0 == 0 else -1)
    return coeff, b


def field_formula_value(r: int, p: int, x: Dict[int, Fraction], y: Dict[int, Fraction]) -> Spinor:
    """Direct closed-form value of the field for e_1 e_p at the point with
    coordinates X_a = x[a], Y_a = y[a] over the frame index set, as a spinor.

    Follows the per-residue recipes: plain unit spinors for stages 2, 4
    mod 8 and gamma-symmetrized ones for stages 0, 1 mod 8.
    """
    res = r % 8
    k = r // 2
    if res in (2, 4):
        idx = [a for a in range(1 << k) if parity(a) == 0]
        symmetrize = False
    elif res in (0, 1):
        idx = [a for a in range(1 << (k - 1)) if res == 1 or parity(a) == 0]
        symmetrize = True
    else:
        raise ValueError("stage without its own frame")

    out = Spinor.zero(k)
    inv_sqrt2 = Scalar.sqrt(2) * Scalar.rational(1, 2)
    for a in idx:
        xa = Scalar.from_fraction(x.get(a, Fraction(0)))
        ya = Scalar.from_fraction(y.get(a, Fraction(0)))
        if not (xa or ya):
            continue
        coeff, b = e1ep_closed_form(r, p, a)
        term = Spinor.basis(k, b, (xa + Scalar.i() * ya) * coeff)
        if symmetrize:
            term = (term + real_structure(r, term)).scale(inv_sqrt2)
        out = out + term
    return out


def frame_point_spinor(r: int, x: Dict[int, Fraction], y: Dict[int, Fraction]) -> Spinor:
    """The spinor with coordinates (X_a, Y_a) in the stage-r real frame."""
    res = r % 8
    k = r // 2
    inv_sqrt2 = Scalar.sqrt(2) * Scalar.rational(1, 2)
    out = Spinor.zero(k)
    support = set(x) | set(y)
    for a in sorted(support):
        xa = Scalar.from_fraction(x.get(a, Fraction(0)))
        ya = Scalar.from_fraction(y.get(a, Fraction(0)))
        term = Spinor.basis(k, a, xa + Scalar.i() * ya)
        if res in (0, 1):
            term = (term + real_structure(r, term)).scale(inv_sqrt2)
        out = out + term
    return out


def frame_index_set(r: int) -> List[int]:
    res = r % 8
    k = r // 2
    if res in (2, 4):
        return [a for a in range(1 << k) if parity(a) == 0]
    if res == 0:
        return [a for a in range(1 << (k - 1)) if parity(a) == 0]
    if res == 1:
        return list(range(1 << (k - 1)))
    raise ValueError("stage without its own frame")


def emit_coordinates(N: int, fmt: str = "text",
                     split: Optional[Tuple[int, int]] = None):
    """Fields as signed coordinate tuples in variables v1..vN.

    Text rows look like "(-v2, v1, ...)"; json gives signed 1-based
    indices; latex wraps the text tuples.
    """
    system = build_field_system(N, split=split)
    rows = []
    for J in system.J:
        row = []
        for rpos in range(N):
            c, s = J.row_to_col[rpos]
            row.append((s, c + 1))
        rows.append(row)
    if fmt == "json":
        return {
            "sphere": N - 1,
            "stage": system.r,
            "fields": [[s * v for (s, v) in row] for row in rows],
        }
    lines = []
    for row in rows:
        body = ", ".join(f"-v{v}" if s < 0 else f"v{v}" for (s, v) in row)
        lines.append(f"({body})")
    if fmt == "latex":
        out = []
        for m, row in enumerate(rows, start=1):
            body = ", ".join(f"-v_{{{v}}}" if s < 0 else f"v_{{{v}}}" for (s, v) in row)
            out.append(f"V_{{{m}}} = ({body})")
        return "\n".join(out)
    return "\n".join(lines)


def gram_is_scaled_identity(system: FieldSystem, Z: Sequence[Fraction]) -> bool:
    """Gram matrix of (Z, V_1(Z), ..., V_{r-1}(Z)) equals |Z|^2 Id, exactly."""
    z = [Fraction(v) for v in Z]
    vecs = [z] + [system.J[j].apply(z) for j in range(system.r - 1)]
    norm = sum((v * v for v in z), Fraction(0))
    for a in range(len(vecs)):
        for b in range(a, len(vecs)):
            dot = sum((vecs[a][t] * vecs[b][t] for t in range(system.N)), Fraction(0))
            if dot != (norm if a == b else 0):
                return False
    return True


def random_point(N: int, rng: random.Random, span: int = 9) -> List[Fraction]:
    while True:
        z = [Fraction(rng.randint(-span, span)) for _ in range(N)]
        if any(z):
            return z
