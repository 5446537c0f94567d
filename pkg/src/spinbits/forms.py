"""Exterior algebra on eight coordinates with rational coefficients:
dualization of antisymmetric endomorphisms to 2-forms, the invariant
4-form built from them, its 3-form contraction, and the top-form square.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .matrices import Matrix, e_basis_decompose

DIM = 8


def _merge_sign(a: Tuple[int, ...], b: Tuple[int, ...]):
    """Shuffle sign for concatenating two increasing index tuples, or None on overlap."""
    out = []
    sign = 1
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return None, ()
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            # b[j] moves past the remaining entries of a
            if (len(a) - i) & 1:
                sign = -sign
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return sign, tuple(out)


def canonical_term(indices: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Sort wedge indices, tracking the permutation sign; repeated index kills the term."""
    idx = list(indices)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for i in range(1, len(idx)):
        if idx[i - 1] == idx[i]:
            return 0, ()
    return sign, tuple(idx)


class ExtForm:
    """Homogeneous exterior form with Fraction coefficients on sorted index subsets."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Dict[Tuple[int, ...], Fraction] | None = None):
        if not 0 <= degree <= DIM:
            raise ValueError("degree out of range")
        self.degree = degree
        t = {}
        if terms:
            for key, c in terms.items():
                key = tuple(key)
                if len(key) != degree or list(key) != sorted(set(key)):
                    raise ValueError(f"bad index subset {key} for degree {degree}")
                if any(not 1 <= i <= DIM for i in key):
                    raise ValueError(f"index out of range in {key}")
                c = Fraction(c)
                if c:
                    t[key] = c
        self.terms = t

    @staticmethod
    def dx(*indices: int) -> "ExtForm":
        sign, key = canonical_term(indices)
        if sign == 0:
            return ExtForm(len(indices))
        return ExtForm(len(indices), {key: Fraction(sign)})

    @staticmethod
    def zero(degree: int) -> "ExtForm":
        return ExtForm(degree)

    def __add__(self, other: "ExtForm") -> "ExtForm":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        t = dict(self.terms)
        for k, c in other.terms.items():
            s = t.get(k, Fraction(0)) + c
            if s:
                t[k] = s
            elif k in t:
                del t[k]
        out = ExtForm.__new__(ExtForm)
        out.degree, out.terms = self.degree, t
        return out

    def __sub__(self, other: "ExtForm") -> "ExtForm":
        return self + (-other)

    def __neg__(self) -> "ExtForm":
        out = ExtForm.__new__(ExtForm)
        out.degree = self.degree
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def scale(self, c) -> "ExtForm":
        c = Fraction(c)
        out = ExtForm.__new__(ExtForm)
        out.degree = self.degree
        out.terms = {k: c * v for k, v in self.terms.items()} if c else {}
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtForm)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.degree, tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, indices: Sequence[int]) -> Fraction:
        sign, key = canonical_term(indices)
        if sign == 0:
            return Fraction(0)
        return sign * self.terms.get(key, Fraction(0))

    def latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, c in sorted(self.terms.items()):
            body = "\\wedge ".join(f"dx_{{{i}}}" for i in key) or "1"
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}\\," + body)
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"{c}*dx{''.join(str(i) for i in key)}" for key, c in sorted(self.terms.items())
        )


def wedge(a: ExtForm, b: ExtForm) -> ExtForm:
    if a.degree + b.degree > DIM:
        raise ValueError("degree overflow")
    t: Dict[Tuple[int, ...], Fraction] = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            sign, key = _merge_sign(ka, kb)
            if sign is None:
                continue
            s = t.get(key, Fraction(0)) + sign * ca * cb
            if s:
                t[key] = s
            elif key in t:
                del t[key]
    return ExtForm(a.degree + b.degree, t)


def dualize_endomorphism(M: Matrix) -> ExtForm:
    """Antisymmetric rational matrix -> 2-form, E_kl component c becoming c dx_k^dx_l."""
    coeffs = e_basis_decompose(M)
    return ExtForm(2, {(k, l): c for (k, l), c in coeffs.items()})


def contract_first(form: ExtForm) -> ExtForm:
    """Interior product with the first coordinate direction.

    Keeps only terms containing index 1 and deletes it; with sorted
    subsets the deleted index is in front, so no sign appears.
    """
    t = {}
    for key, c in form.terms.items():
        if key and key[0] == 1:
            t[key[1:]] = c
    return ExtForm(form.degree - 1, t)


def _two_form_frames() -> List[ExtForm]:
    from .triality import PAIR_ORDER, kappa_real_matrix

    out = []
    for (i, j) in PAIR_ORDER:
        if i >= 2:
            out.append(dualize_endomorphism(kappa_real_matrix([i, j], "plus")))
    return out


def spin7_four_form() -> ExtForm:
    """Sum of the squares of the 21 dualized 2-forms; invariant 4-form."""
    total = ExtForm.zero(4)
    for f in _two_form_frames():
        total = total + wedge(f, f)
    return total


def g2_three_form() -> ExtForm:
    return contract_first(spin7_four_form())


def omega_square() -> ExtForm:
    om = spin7_four_form()
    return wedge(om, om)


def derivation_action(G: Matrix, form: ExtForm) -> ExtForm:
    """Lie-derivative style action of a linear vector-space map on a
    constant-coefficient form: dx_m -> -sum_c G[m][c] dx_c, extended as
    a derivation across each wedge monomial."""
    if G.rows != DIM or G.cols != DIM:
        raise ValueError("need an 8x8 matrix")
    rows = [[x.as_fraction() for x in row] for row in G.data]
    t: Dict[Tuple[int, ...], Fraction] = {}
    for key, c in form.terms.items():
        for slot, m in enumerate(key):
            for col in range(1, DIM + 1):
                g = rows[m - 1][col - 1]
                if not g:
                    continue
                sign, newkey = canonical_term(key[:slot] + (col,) + key[slot + 1:])
                if sign == 0:
                    continue
                s = t.get(newkey, Fraction(0)) - c * g * sign
                if s:
                    t[newkey] = s
                elif newkey in t:
                    del t[newkey]
    return ExtForm(form.degree, t)
