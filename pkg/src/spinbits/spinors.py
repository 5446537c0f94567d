"""Binary-coded spinors.

A basic spinor u_a is a nonnegative integer a < 2**k whose binary
digits encode a sign tuple (s_1, ..., s_k), s_j = +-1, via

    a = sum_j (1 - s_j)/2 * 2**(k-j)

so s_1 sits at the most significant bit and s_k at bit 0.  General
spinors are sparse complex-linear combinations of the u_a with exact
coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .scalars import I, INV_SQRT2, ONE, Scalar, ZERO


def index_from_signs(signs: Sequence[int]) -> int:
    """Sign tuple (+-1, ..., +-1) -> basis index."""
    a = 0
    for s in signs:
        if s == 1:
            a = a << 1
        elif s == -1:
            a = (a << 1) | 1
        else:
            raise ValueError(f"sign entries must be +-1, got {s}")
    return a

def signs_from_index(a: int, k: int) -> Tuple[int, ...]:
    """Basis index -> sign tuple of length k (inverse of index_from_signs)."""
    if not 0 <= a < (1 << k):
        raise ValueError(f"index {a} out of range for {k} bits")
    return tuple(-1 if (a >> (k - j)) & 1 else 1 for j in range(1, k + 1))

def bit(a: int, l: int) -> int:
    return (a >> l) & 1

def parity(a: int) -> int:
    """Number of set bits mod 2."""
    return bin(a).count("1") & 1

def chirality(a: int) -> int:
    """+1 on even bit-parity indices, -1 on odd ones."""
    return -1 if parity(a) else 1

def weight(a: int, k: int) -> Tuple[Fraction, ...]:
    """Weight of u_a under the standard maximal torus: component j is s_j/2."""
    return tuple(Fraction(s, 2) for s in signs_from_index(a, k))


class Spinor:
    """Sparse exact linear combination of basic spinors u_a, a < 2**k."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Dict[int, Scalar] | None = None):
        self.k = k
        t = {}
        if terms:
            top = 1 << k
            for a, c in terms.items():
                if not 0 <= a < top:
                    raise ValueError(f"index {a} out of range for k={k}")
                if c:
                    t[a] = c
        self.terms = t

    @staticmethod
    def basis(k: int, a: int, coeff: Scalar = ONE) -> "Spinor":
        return Spinor(k, {a: coeff})

    @staticmethod
    def zero(k: int) -> "Spinor":
        return Spinor(k)

    def __add__(self, other: "Spinor") -> "Spinor":
        self._check(other)
        t = dict(self.terms)
        for a, c in other.terms.items():
            s = t.get(a, ZERO) + c
            if s:
                t[a] = s
            elif a in t:
                del t[a]
        out = Spinor.__new__(Spinor)
        out.k, out.terms = self.k, t
        return out

    def __sub__(self, other: "Spinor") -> "Spinor":
        return self + (-other)

    def __neg__(self) -> "Spinor":
        out = Spinor.__new__(Spinor)
        out.k = self.k
        out.terms = {a: -c for a, c in self.terms.items()}
        return out

    def scale(self, c) -> "Spinor":
        if not isinstance(c, Scalar):
            c = Scalar.rational(c) if isinstance(c, int) else Scalar.from_fraction(c)
        out = Spinor.__new__(Spinor)
        out.k = self.k
        out.terms = {a: c * v for a, v in self.terms.items()} if c else {}
        return out

    def __rmul__(self, c) -> "Spinor":
        return self.scale(c)

    def map_indices(self, f) -> "Spinor":
        """New spinor with each term (a, c) replaced by f(a, c) -> (b, c')."""
        t: Dict[int, Scalar] = {}
        for a, c in self.terms.items():
            b, c2 = f(a, c)
            s = t.get(b, ZERO) + c2
            if s:
                t[b] = s
            elif b in t:
                del t[b]
        out = Spinor.__new__(Spinor)
        out.k, out.terms = self.k, t
        return out

    def coeff(self, a: int) -> Scalar:
        return self.terms.get(a, ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, Spinor) and self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, tuple(sorted((a, hash(c)) for a, c in self.terms.items()))))

    def _check(self, other: "Spinor"):
        if self.k != other.k:
            raise ValueError(f"bit-width mismatch: {self.k} vs {other.k}")

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "terms": [
                {"index": a, "coeff": c.to_json()} for a, c in sorted(self.terms.items())
            ],
        }

    @staticmethod
    def from_json(obj: dict) -> "Spinor":
        return Spinor(
            obj["k"], {t["index"]: Scalar.from_json(t["coeff"]) for t in obj["terms"]}
        )

    def latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for a, c in sorted(self.terms.items()):
            ctex = c.latex()
            if ctex == "1":
                parts.append(f"u_{{{a}}}")
            elif ctex == "-1":
                parts.append(f"-u_{{{a}}}")
            elif "+" in ctex[1:] or "-" in ctex[1:]:
                parts.append(f"({ctex})u_{{{a}}}")
            else:
                parts.append(f"{ctex}u_{{{a}}}")
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})u_{a}" for a, c in sorted(self.terms.items()))


def hermitian(psi1: Spinor, psi2: Spinor) -> Scalar:
    """Hermitian product with orthonormal u_a, conjugate-linear in the first slot."""
    psi1._check(psi2)
    total = ZERO
    small, big = psi1.terms, psi2.terms
    for a, c in small.items():
        d = big.get(a)
        if d is not None:
            total = total + c.conjugate() * d
    return total


def real_structure_on_basis(n: int, a: int) -> Tuple[Scalar, int]:
    """gamma_n applied to u_a: returns (coefficient, image index).

    gamma_n is the tensor product over the k = floor(n/2) factors of the
    standard quaternionic structure on odd slots and the real structure
    on even slots (slot 1 = most significant bit), each of which flips
    the slot sign; the product of the odd-slot factors -s*i gives the
    coefficient.
    """
    k = n // 2
    if k == 0:
        raise ValueError("need n >= 2")
    signs = signs_from_index(a, k)
    coeff = ONE
    for s_pos in range(1, k + 1, 2):
        coeff = coeff * (-signs[s_pos - 1]) * I
    return coeff, (1 << k) - 1 - a


def real_structure(n: int, psi: Spinor) -> Spinor:
    """The real/quaternionic structure gamma_n; conjugate-linear."""
    k = n // 2
    if psi.k != k:
        raise ValueError(f"spinor width {psi.k} does not match n={n}")

    def act(a, c):
        g, b = real_structure_on_basis(n, a)
        return b, c.conjugate() * g

    return psi.map_indices(act)


def gamma_squares_to(n: int) -> int:
    """+1 or -1 according to gamma_n**2 = +-Id (period 8 in n)."""
    return 1 if n % 8 in (0, 1, 6, 7) else -1


def real_form_basis(r: int, which: str = "full") -> List[Spinor]:
    """Ordered real basis of the real (half-)spinor representation at stage r.

    Stages r = 0, 1, 2, 4 (mod 8) are supported; the remaining residues
    alias lower stages by dimension coincidence and are rejected here.
    ``which`` is "plus"/"minus" when there are two real irreducibles
    (r = 0, 4 mod 8) and "full" otherwise.
    """
    res = r % 8
    k = r // 2
    if res in (0, 4) and which not in ("plus", "minus"):
        raise ValueError(f"stage {r} has plus/minus forms; got {which!r}")
    if res in (1, 2) and which != "full":
        raise ValueError(f"stage {r} has a single real form; got {which!r}")

    if res == 0:
        idx = [a for a in range(1 << (k - 1)) if parity(a) == 0]
        basis = []
        for a in idx:
            for u in (Spinor.basis(k, a), Spinor.basis(k, a, I)):
                basis.append((u + real_structure(r, u)).scale(INV_SQRT2))
    elif res == 1:
        basis = []
        for a in range(1 << (k - 1)):
            for u in (Spinor.basis(k, a), Spinor.basis(k, a, I)):
                basis.append((u + real_structure(r, u)).scale(INV_SQRT2))
    elif res in (2, 4):
        idx = [a for a in range(1 << k) if parity(a) == 0]
        basis = []
        for a in idx:
            basis.append(Spinor.basis(k, a))
            basis.append(Spinor.basis(k, a, I))
    else:
        raise ValueError(
            f"stage r={r} (r mod 8 = {res}) has no separate real form; "
            "use the matching stage of the same dimension"
        )

    if which == "minus":
        from .clifford import clifford_apply

        basis = [clifford_apply(r, 1, v) for v in basis]
    return basis
