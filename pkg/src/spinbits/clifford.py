"""Clifford multiplication by bit flips, and exact arithmetic in Cl_n.

The generator action on basic spinors never builds a matrix: e_p sends
u_a to a power of i times u_b where b differs from a in one bit.  For
p < n the action does not depend on n at all, so words in low
generators can be applied in any ambient dimension.

Algebra elements are normalized monomial maps: a basis monomial
e_{i1}...e_{im} (indices increasing) is the bitmask with bits i-1 set,
and products are computed by XOR with a transposition-counting sign,
using e_i e_j = -e_j e_i and e_i^2 = -1.
"""

from __future__ import annotations

from typing import Dict, Iterable, Sequence, Tuple

from .scalars import Angle, ONE, Scalar, ZERO
from .spinors import Spinor, parity


def generator_action(n: int, p: int, a: int) -> Tuple[Scalar, int]:
    """e_p u_a = coeff * u_b inside Cl_n; returns (coeff, b)."""
    if not 1 <= p <= n:
        raise ValueError(f"generator index {p} out of range for n={n}")
    k = n // 2
    if p == n and n % 2 == 1:
        # diagonal action of the odd top generator
        sign = (k + bin(a).count("1")) & 1
        return Scalar.i_power(1 + 2 * sign), a
    j = (p + 1) // 2
    if p % 2 == 1:
        # e_{2j-1}: i * (-1)^(j-1) * (-1)^(sum of bits below j-1)
        low = bin(a & ((1 << (j - 1)) - 1)).count("1")
        coeff = Scalar.i_power(1 + 2 * ((j - 1 + low) & 1))
    else:
        # e_{2j}: (-1)^(j-1) * (-1)^(sum of bits below j)
        low = bin(a & ((1 << j) - 1)).count("1")
        coeff = Scalar.i_power(2 * ((j - 1 + low) & 1))
    return coeff, a ^ (1 << (j - 1))


def clifford_apply(n: int, p: int, psi: Spinor) -> Spinor:
    """Linear extension of the generator action e_p to a full spinor."""
    if psi.k != n // 2:
        raise ValueError(f"spinor width {psi.k} does not match n={n}")

    def act(a, c):
        g, b = generator_action(n, p, a)
        return b, c * g

    return psi.map_indices(act)


def word_apply(n: int, word: Sequence[int], psi: Spinor) -> Spinor:
    """Apply a product of generators, written left to right, to a spinor."""
    for p in reversed(word):
        psi = clifford_apply(n, p, psi)
    return psi


def blade_product(mask_i: int, mask_j: int) -> Tuple[int, int]:
    """Product of basis monomials: returns (sign, xor mask).

    Sign counts the transpositions needed to interleave the second
    sorted monomial into the first, plus one flip per contracted pair
    (e_i^2 = -1).
    """
    count = 0
    cur = mask_i
    j = mask_j
    while j:
        b = j & -j  # lowest set bit of the remaining right factor
        bpos = b.bit_length() - 1
        above = cur >> (bpos + 1)
        count += bin(above).count("1")
        if cur & b:
            count += 1  # contraction with signature -1
        cur ^= b
        j ^= b
    return (-1 if count & 1 else 1), mask_i ^ mask_j


class CliffordElem:
    """Element of the complexified Clifford algebra Cl_n over exact scalars."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Dict[int, Scalar] | None = None):
        self.n = n
        t = {}
        if terms:
            top = 1 << n
            for m, c in terms.items():
                if not 0 <= m < top:
                    raise ValueError(f"monomial mask {m} out of range for n={n}")
                if c:
                    t[m] = c
        self.terms = t

    @staticmethod
    def scalar(n: int, c: Scalar) -> "CliffordElem":
        return CliffordElem(n, {0: c})

    @staticmethod
    def one(n: int) -> "CliffordElem":
        return CliffordElem(n, {0: ONE})

    @staticmethod
    def generator(n: int, i: int) -> "CliffordElem":
        if not 1 <= i <= n:
            raise ValueError(f"generator e_{i} undefined in Cl_{n}")
        return CliffordElem(n, {1 << (i - 1): ONE})

    @staticmethod
    def blade(n: int, indices: Iterable[int], coeff: Scalar = ONE) -> "CliffordElem":
        mask = 0
        for i in indices:
            b = 1 << (i - 1)
            if mask & b:
                raise ValueError("repeated index in blade")
            mask |= b
        return CliffordElem(n, {mask: coeff})

    @staticmethod
    def from_word(n: int, word: Sequence[int]) -> "CliffordElem":
        out = CliffordElem.one(n)
        for p in word:
            out = out * CliffordElem.generator(n, p)
        return out

    def _check(self, other: "CliffordElem"):
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "CliffordElem") -> "CliffordElem":
        self._check(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, ZERO) + c
            if s:
                t[m] = s
            elif m in t:
                del t[m]
        out = CliffordElem.__new__(CliffordElem)
        out.n, out.terms = self.n, t
        return out

    def __sub__(self, other: "CliffordElem") -> "CliffordElem":
        return self + (-other)

    def __neg__(self) -> "CliffordElem":
        out = CliffordElem.__new__(CliffordElem)
        out.n = self.n
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def scale(self, c: Scalar) -> "CliffordElem":
        out = CliffordElem.__new__(CliffordElem)
        out.n = self.n
        out.terms = {m: c * v for m, v in self.terms.items()} if c else {}
        return out

    def __mul__(self, other: "CliffordElem") -> "CliffordElem":
        self._check(other)
        t: Dict[int, Scalar] = {}
        for mi, ci in self.terms.items():
            for mj, cj in other.terms.items():
                sgn, m = blade_product(mi, mj)
                c = ci * cj
                if sgn < 0:
                    c = -c
                s = t.get(m, ZERO) + c
                if s:
                    t[m] = s
                elif m in t:
                    del t[m]
        out = CliffordElem.__new__(CliffordElem)
        out.n, out.terms = self.n, t
        return out

    def reverse(self) -> "CliffordElem":
        """Reversion anti-automorphism: a grade-m monomial picks up (-1)^(m(m-1)/2)."""
        t = {}
        for m, c in self.terms.items():
            g = bin(m).count("1")
            t[m] = -c if (g * (g - 1) // 2) & 1 else c
        out = CliffordElem.__new__(CliffordElem)
        out.n, out.terms = self.n, t
        return out

    def grade_part(self, g: int) -> "CliffordElem":
        out = CliffordElem.__new__(CliffordElem)
        out.n = self.n
        out.terms = {m: c for m, c in self.terms.items() if bin(m).count("1") == g}
        return out

    def grades(self) -> set:
        return {bin(m).count("1") for m in self.terms}

    def apply(self, psi: Spinor) -> Spinor:
        """Spinor representation of this element (each monomial acts by bit flips)."""
        out = Spinor.zero(psi.k)
        for m, c in self.terms.items():
            word = [i + 1 for i in range(self.n) if (m >> i) & 1]
            out = out + word_apply(self.n, word, psi).scale(c)
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CliffordElem)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, tuple(sorted((m, hash(c)) for m, c in self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            name = "".join(f"e{i+1}" for i in range(self.n) if (m >> i) & 1) or "1"
            parts.append(f"({c}){name}")
        return " + ".join(parts)

    def latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            name = "".join(f"e_{{{i+1}}}" for i in range(self.n) if (m >> i) & 1)
            ctex = c.latex()
            if name and ctex == "1":
                parts.append(name)
            elif name and ctex == "-1":
                parts.append("-" + name)
            else:
                wrap = f"({ctex})" if ("+" in ctex[1:] or "-" in ctex[1:]) else ctex
                parts.append(wrap + name)
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out


def volume_element(n: int) -> CliffordElem:
    """vol_n = e_1 e_2 ... e_n as a single monomial."""
    return CliffordElem(n, {(1 << n) - 1: ONE})


def chirality_involution(n: int, psi: Spinor) -> Spinor:
    """psi -> (-i)^(n/2) vol_n psi; defined for even n."""
    if n % 2:
        raise ValueError("chirality involution needs even n")
    out = volume_element(n).apply(psi)
    return out.scale(Scalar.i_power(-(n // 2)))


def chirality_split(n: int, psi: Spinor) -> Tuple[Spinor, Spinor]:
    """Decompose into (+1, -1)-eigencomponents of the volume involution."""
    iota = chirality_involution(n, psi)
    half = Scalar.rational(1, 2)
    return (psi + iota).scale(half), (psi - iota).scale(half)


def exp_bivector(n: int, factors: Sequence[Tuple[Angle, Tuple[int, int]]]) -> CliffordElem:
    """Product of rotations exp(theta * e_i e_j) over pairwise disjoint pairs.

    Each factor is exactly cos(theta) + sin(theta) e_i e_j; disjointness
    keeps the factors commuting so the product equals the exponential of
    the bivector sum.
    """
    used = 0
    out = CliffordElem.one(n)
    for theta, (i, j) in factors:
        if not (1 <= i < j <= n):
            raise ValueError(f"bad index pair ({i}, {j})")
        mask = (1 << (i - 1)) | (1 << (j - 1))
        if used & mask:
            raise ValueError("index pairs must be pairwise disjoint")
        used |= mask
        factor = CliffordElem(n, {0: theta.cos(), mask: theta.sin()})
        out = out * factor
    return out


def lambda_vector(n: int, g, y: CliffordElem) -> CliffordElem:
    """Conjugation action g y g~ of an even element on a vector.

    ``g`` may be a word (sequence of generator indices, even length) or a
    CliffordElem, in which case the reversal is the reversion
    anti-automorphism.  The result must again have grade one.
    """
    if y.grades() not in (set(), {1}):
        raise ValueError("lambda acts on grade-1 elements")
    if isinstance(g, CliffordElem):
        elem, rev = g, g.reverse()
    else:
        word = list(g)
        if len(word) % 2:
            raise ValueError("need an even word")
        elem = CliffordElem.from_word(n, word)
        rev = CliffordElem.from_word(n, list(reversed(word)))
    out = elem * y * rev
    if out.grades() not in (set(), {1}):
        raise ValueError("conjugation did not preserve grade 1")
    return out


def delta_iso(k: int, psi: Spinor) -> Spinor:
    """Equivariant embedding of the odd-stage spinors into even-parity indices.

    u_a with a < 2**(k-1) keeps its index when the bit-parity of a is
    even and gains the top bit 2**(k-1) when it is odd, so every image
    index has even parity in k bits.
    """
    if psi.k != k - 1:
        raise ValueError(f"expected width {k - 1}, got {psi.k}")
    top = 1 << (k - 1)
    out = Spinor.zero(k)
    for a, c in psi.terms.items():
        b = a | top if parity(a) else a
        out = out + Spinor.basis(k, b, c)
    return out


def bivector_combo_to_elem(n: int, coeffs: Dict[Tuple[int, int], Scalar]) -> CliffordElem:
    """Sum of c_ij e_i e_j from a coefficient map over ordered pairs i < j."""
    out = CliffordElem(n)
    for (i, j), c in coeffs.items():
        if not 1 <= i < j <= n:
            raise ValueError(f"bad bivector pair ({i}, {j})")
        out = out + CliffordElem.blade(n, (i, j), c)
    return out
