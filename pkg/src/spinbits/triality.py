"""Outer automorphisms of the spin(8) story: sigma*, tau*, their
eigenspaces, the g2 fixed subalgebra, the S3 relations, group-level
automorphisms on generators, and the images of the center.

sigma* and tau* are constructed from first principles: decompose the
half-spinor action of each generator e_i e_j over the standard
antisymmetric basis E_kl and halve.  The tabulated lists in
``reference`` are used by the verification suite, never as the source
of the construction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .clifford import CliffordElem, bivector_combo_to_elem, volume_element
from .matrices import Matrix, e_basis_decompose, real_rep_matrix
from .scalars import Angle, HALF, I, ONE, SQRT3, Scalar, ZERO, INV_SQRT2
from .spinors import Spinor

PAIR_ORDER: List[Tuple[int, int]] = [(i, j) for i in range(1, 9) for j in range(i + 1, 9)]
_PAIR_POS = {p: n for n, p in enumerate(PAIR_ORDER)}

BivectorCoeffs = Dict[Tuple[int, int], Scalar]


class OuterMap:
    """A linear map on bivectors, stored over the ordered pair basis."""

    def __init__(self, name: str, matrix: Matrix):
        if matrix.rows != 28 or matrix.cols != 28:
            raise ValueError("outer maps live on the 28-dimensional bivector space")
        self.name = name
        self.matrix = matrix

    def __mul__(self, other: "OuterMap") -> "OuterMap":
        return OuterMap(f"{self.name}*{other.name}", self.matrix * other.matrix)

    def power(self, e: int) -> "OuterMap":
        out = Matrix.identity(28)
        for _ in range(e):
            out = out * self.matrix
        return OuterMap(f"{self.name}^{e}", out)

    def image_coeffs(self, pair: Tuple[int, int]) -> BivectorCoeffs:
        c = _PAIR_POS[pair]
        return {
            PAIR_ORDER[r]: self.matrix.data[r][c]
            for r in range(28)
            if self.matrix.data[r][c]
        }

    def apply_coeffs(self, coeffs: BivectorCoeffs) -> BivectorCoeffs:
        vec = [ZERO] * 28
        for p, c in coeffs.items():
            vec[_PAIR_POS[p]] = c
        out = self.matrix.apply(vec)
        return {PAIR_ORDER[r]: c for r, c in enumerate(out) if c}

    def __eq__(self, other) -> bool:
        return isinstance(other, OuterMap) and self.matrix == other.matrix


# Orientation of the half-spinor frames used throughout this module:
# the gamma-symmetrized bases with the 4th and 5th vectors negated (on
# both chiralities).  The tabulated E-decompositions, the 28x28 arrays,
# and the dualized 2-forms are mutually consistent exactly in this
# orientation; the division-algebra tables live in the unflipped frame.
FRAME_SIGNS = (1, 1, 1, -1, -1, 1, 1, 1)


def _reframe(M: Matrix) -> Matrix:
    return Matrix(
        [
            [
                M.data[r][c] if FRAME_SIGNS[r] * FRAME_SIGNS[c] > 0 else -M.data[r][c]
                for c in range(M.cols)
            ]
            for r in range(M.rows)
        ]
    )


def kappa_real_matrix(word: Sequence[int], sign: str) -> Matrix:
    """Real half-spinor matrix of a word, in this module's frame orientation."""
    return _reframe(real_rep_matrix(8, word, sign))


def _half_spinor_decomposition(sign: str) -> Dict[Tuple[int, int], Dict[Tuple[int, int], Fraction]]:
    """E_kl coefficients of every generator's half-spinor action at stage 8."""
    out = {}
    for (i, j) in PAIR_ORDER:
        out[(i, j)] = e_basis_decompose(kappa_real_matrix([i, j], sign))
    return out


_cache: Dict[str, OuterMap] = {}


def build_outer(name: str) -> OuterMap:
    """sigma* from the minus half-spinor action, tau* from the plus one."""
    if name in _cache:
        return _cache[name]
    if name not in ("sigma", "tau"):
        raise ValueError("name must be sigma or tau")
    source = "minus" if name == "sigma" else "plus"
    deco = _half_spinor_decomposition(source)
    cols = []
    for p in PAIR_ORDER:
        col = [ZERO] * 28
        for q, c in deco[p].items():
            col[_PAIR_POS[q]] = Scalar.from_fraction(c / 2)
        cols.append(col)
    out = OuterMap(name, Matrix.from_columns(cols))
    _cache[name] = out
    return out


def build_sigma_star() -> OuterMap:
    return build_outer("sigma")


def build_tau_star() -> OuterMap:
    return build_outer("tau")


def eigenspace(outer: OuterMap, lam: Scalar) -> Tuple[int, List[BivectorCoeffs]]:
    """Exact kernel of (map - lambda Id) over the scalar field."""
    allowed = {
        ONE,
        -ONE,
        (SQRT3 * I - ONE) * HALF,
        (-SQRT3 * I - ONE) * HALF,
    }
    if lam not in allowed:
        raise ValueError("unsupported eigenvalue")
    shifted = outer.matrix - Matrix.identity(28).scale(lam)
    _, kernel = shifted.nullspace()
    basis = []
    for vec in kernel:
        basis.append({PAIR_ORDER[r]: c for r, c in enumerate(vec) if c})
    return len(basis), basis


def omega_eigenvalue(conj: bool = False) -> Scalar:
    """Primitive cube root of unity (-1 + i sqrt3)/2, or its conjugate."""
    s = -SQRT3 if conj else SQRT3
    return (s * I - ONE) * HALF


def kappa_star_matrix(pairs_coeffs: BivectorCoeffs, sign: str) -> Matrix:
    """Half-spinor action matrix of a bivector combination on a real frame."""
    out = Matrix.zero(8, 8)
    for (i, j), c in pairs_coeffs.items():
        out = out + kappa_real_matrix([i, j], sign).scale(c)
    return out


def s3_relations() -> List[Tuple[str, bool]]:
    """The S3 presentation and representation-permutation identities."""
    sig, tau = build_sigma_star(), build_tau_star()
    ident = Matrix.identity(28)
    results = [
        ("tau*^2 = Id", (tau * tau).matrix == ident),
        ("sigma*^3 = Id", sig.power(3).matrix == ident),
        ("sigma* tau* = tau* sigma*^2", (sig * tau).matrix == (tau * sig.power(2)).matrix),
        ("sigma*^2 tau* = tau* sigma*", (sig.power(2) * tau).matrix == (tau * sig).matrix),
        ("(tau* sigma*)^2 = Id", ((tau * sig) * (tau * sig)).matrix == ident),
        ("(sigma* tau*)^2 = Id", ((sig * tau) * (sig * tau)).matrix == ident),
    ]
    ts = tau * sig
    ok_minus = all(
        kappa_star_matrix(ts.image_coeffs(p), "minus") == kappa_real_matrix(list(p), "plus")
        for p in PAIR_ORDER
    )
    ok_plus = all(
        kappa_star_matrix(ts.image_coeffs(p), "plus") == kappa_real_matrix(list(p), "minus")
        for p in PAIR_ORDER
    )
    results.append(("kappa-* (tau* sigma*) = kappa+*", ok_minus))
    results.append(("kappa+* (tau* sigma*) = kappa-*", ok_plus))
    return results


def _coeffs_to_vector(coeffs: BivectorCoeffs) -> List[Scalar]:
    vec = [ZERO] * 28
    for p, c in coeffs.items():
        vec[_PAIR_POS[p]] = c
    return vec


def span_contains(span: Sequence[BivectorCoeffs], vec: BivectorCoeffs) -> bool:
    """Exact membership of a bivector combination in a rational span."""
    rows = [_coeffs_to_vector(v) for v in span]
    base = Matrix(rows).transpose()
    r0 = base.rank()
    extended = Matrix(rows + [_coeffs_to_vector(vec)]).transpose()
    return extended.rank() == r0


def spans_equal(a: Sequence[BivectorCoeffs], b: Sequence[BivectorCoeffs]) -> bool:
    ra = Matrix([_coeffs_to_vector(v) for v in a]).transpose().rank()
    rb = Matrix([_coeffs_to_vector(v) for v in b]).transpose().rank()
    rab = Matrix(
        [_coeffs_to_vector(v) for v in a] + [_coeffs_to_vector(v) for v in b]
    ).transpose().rank()
    return ra == rb == rab


def g2_generators() -> List[BivectorCoeffs]:
    """The 14 spanning bivectors of the fixed subalgebra of sigma*."""
    from . import reference

    out = []
    for line in reference.G2_GENERATORS:
        out.append(
            {p: Scalar.from_fraction(c) for p, c in reference.parse_bivector_terms(line).items()}
        )
    return out


def bivector_bracket(a: BivectorCoeffs, b: BivectorCoeffs) -> BivectorCoeffs:
    """Clifford commutator of two bivector combinations, again a bivector."""
    ea = bivector_combo_to_elem(8, a)
    eb = bivector_combo_to_elem(8, b)
    comm = ea * eb - eb * ea
    out: BivectorCoeffs = {}
    for mask, c in comm.terms.items():
        idx = [t + 1 for t in range(8) if (mask >> t) & 1]
        if len(idx) != 2:
            raise ValueError("bracket left the bivector space")
        out[(idx[0], idx[1])] = c
    return out


def apply_bivector_to_spinor(coeffs: BivectorCoeffs, psi: Spinor) -> Spinor:
    out = Spinor.zero(psi.k)
    for (i, j), c in coeffs.items():
        out = out + bivector_combo_to_elem(8, {(i, j): c}).apply(psi)
    return out


def _orthocomplement_in(span: Sequence[BivectorCoeffs], sub: Sequence[BivectorCoeffs]) -> List[BivectorCoeffs]:
    """Vectors of `span` orthogonal to `sub` in the pair-coefficient dot product."""
    span_vecs = [_coeffs_to_vector(v) for v in span]
    rows = []
    for s in sub:
        sv = _coeffs_to_vector(s)
        rows.append([
            sum((v[t] * sv[t] for t in range(28)), ZERO) for v in span_vecs
        ])
    _, kern = Matrix(rows).nullspace()
    out = []
    for combo in kern:
        vec = [ZERO] * 28
        for t, c in enumerate(combo):
            if c:
                for r in range(28):
                    vec[r] = vec[r] + c * span_vecs[t][r]
        out.append({PAIR_ORDER[r]: c for r, c in enumerate(vec) if c})
    return out


def g2_structure() -> Dict[str, object]:
    """The g2 generators plus the full battery of structural checks."""
    sig, tau = build_sigma_star(), build_tau_star()
    gens = g2_generators()
    checks: List[Tuple[str, bool]] = []

    k4 = 4
    psi_plus = (Spinor.basis(k4, 0) - Spinor.basis(k4, 15)).scale(INV_SQRT2)
    psi_minus = (Spinor.basis(k4, 1, I) - Spinor.basis(k4, 14, I)).scale(INV_SQRT2)
    checks.append(
        ("annihilates the basic positive spinor",
         all(apply_bivector_to_spinor(g, psi_plus).is_zero() for g in gens))
    )
    checks.append(
        ("annihilates the basic negative spinor",
         all(apply_bivector_to_spinor(g, psi_minus).is_zero() for g in gens))
    )

    dim_fix_sigma, fix_sigma = eigenspace(sig, ONE)
    checks.append(("fixed space of sigma* has dimension 14", dim_fix_sigma == 14))
    checks.append(("generators span the fixed space of sigma*", spans_equal(gens, fix_sigma)))

    _, fix_tau = eigenspace(tau, ONE)
    spin7_low = [
        {(i, j): ONE} for (i, j) in PAIR_ORDER if i >= 2
    ]
    inter = _span_intersection(fix_tau, spin7_low)
    checks.append(("g2 = spin7(e2..e8) intersect Fix(tau*)",
                   len(inter) == 14 and spans_equal(gens, inter)))

    ts = tau * sig
    ts2 = tau * sig.power(2)
    _, fix_ts = eigenspace_of(ts)
    _, fix_ts2 = eigenspace_of(ts2)
    checks.append(("Fix(tau* sigma*) = spin7(e2..e8)", spans_equal(fix_ts, spin7_low)))
    inter2 = _span_intersection(fix_tau, fix_ts2)
    inter3 = _span_intersection(fix_tau, fix_ts)
    checks.append(("g2 = Fix(tau*) intersect Fix(tau* sigma*^2)",
                   len(inter2) == 14 and spans_equal(gens, inter2)))
    checks.append(("g2 = Fix(tau*) intersect Fix(tau* sigma*)",
                   len(inter3) == 14 and spans_equal(gens, inter3)))

    sig2 = sig.power(2)
    image = [sig2.apply_coeffs(v) for v in fix_ts]
    checks.append(("sigma*^2 maps Fix(tau* sigma*) onto Fix(tau*)", spans_equal(image, fix_tau)))

    closure = all(
        span_contains(gens, bivector_bracket(a, b)) for a in gens for b in gens
    )
    checks.append(("bracket closure of g2", closure))

    # bracket structure of the pair (spin7, g2): reductive complement in
    # both spin7 copies, symmetric pair only one level up via the tau*
    # involution (spin8 = Fix(tau*) + m with [m, m] inside Fix(tau*))
    for label, copy in (("e2..e8 copy", spin7_low), ("Fix(tau*) copy", fix_tau)):
        m = _orthocomplement_in(copy, gens)
        ok_dim = len(m) == 7
        gm = all(span_contains(m, bivector_bracket(g, x)) for g in gens for x in m)
        mm = all(span_contains(copy, bivector_bracket(x, y)) for x in m for y in m)
        checks.append(
            (f"reductive pair (spin7, g2) in the {label}: [g2,m] in m, [m,m] in spin7",
             ok_dim and gm and mm)
        )
    _, m_tau = eigenspace(tau, -ONE)
    sym_mm = all(span_contains(fix_tau, bivector_bracket(x, y)) for x in m_tau for y in m_tau)
    sym_gm = all(span_contains(m_tau, bivector_bracket(g, x)) for g in fix_tau for x in m_tau)
    checks.append(
        ("symmetric pair (spin8, spin7) from the tau* involution", sym_mm and sym_gm)
    )

    return {"generators": gens, "checks": checks}


def eigenspace_of(outer: OuterMap) -> Tuple[int, List[BivectorCoeffs]]:
    """(+1)-eigenspace of an arbitrary composite."""
    shifted = outer.matrix - Matrix.identity(28)
    _, kernel = shifted.nullspace()
    return len(kernel), [
        {PAIR_ORDER[r]: c for r, c in enumerate(vec) if c} for vec in kernel
    ]


def _span_intersection(a: Sequence[BivectorCoeffs], b: Sequence[BivectorCoeffs]) -> List[BivectorCoeffs]:
    """Basis of span(a) intersect span(b), exactly."""
    va = [_coeffs_to_vector(v) for v in a]
    vb = [_coeffs_to_vector(v) for v in b]
    # solve sum x_s a_s - sum y_t b_t = 0
    cols = []
    for v in va:
        cols.append(v)
    for v in vb:
        cols.append([-c for c in v])
    M = Matrix.from_columns(cols)
    _, kern = M.nullspace()
    seen = []
    for combo in kern:
        vec = [ZERO] * 28
        for s, c in enumerate(combo[: len(va)]):
            if c:
                for r in range(28):
                    vec[r] = vec[r] + c * va[s][r]
        if any(vec):
            seen.append(vec)
    # reduce to a basis
    if not seen:
        return []
    reduced, pivots = Matrix(seen)._echelon()
    out = []
    for row in reduced[: len(pivots)]:
        out.append({PAIR_ORDER[r]: c for r, c in enumerate(row) if c})
    return out


def g2_action_matrix(alphas: Sequence) -> Matrix:
    """Action of sum(alpha_m G_m) on the positive real frame, presented
    in the row convention of the tabulated display (the transpose of the
    column-action matrix); exact over rational alpha."""
    return g2_action_matrix_on("plus", alphas).transpose()


def g2_action_matrix_on(which: str, alphas: Sequence) -> Matrix:
    """Column-convention action of sum(alpha_m G_m) on a real frame."""
    if len(alphas) != 14:
        raise ValueError("need 14 coefficients")
    gens = g2_generators()
    out = Matrix.zero(8, 8)
    for alpha, g in zip(alphas, gens):
        c = alpha if isinstance(alpha, Scalar) else Scalar.from_fraction(Fraction(alpha))
        if c:
            out = out + kappa_star_matrix({p: c * v for p, v in g.items()}, which)
    return out


def group_automorphism(which: str, pair: Tuple[int, int]) -> CliffordElem:
    """Image of the generator e_i e_j under the group-level lift.

    Exponentiating t * image-bivector to t = pi/2 gives a product of
    four commuting rotation factors at angle pi/4 with signs read from
    the bivector image.
    """
    outer = build_outer(which)
    coeffs = outer.image_coeffs(pair)
    quarter = Angle(3)  # pi/4
    out = CliffordElem.one(8)
    for (i, j), c in sorted(coeffs.items()):
        f = c * 2  # entries are +-1/2
        sin = quarter.sin() if f == ONE else -quarter.sin() if f == -ONE else None
        if sin is None:
            raise ValueError("generator image is not a quarter-turn product")
        out = out * CliffordElem(
            8, {0: quarter.cos(), (1 << (i - 1)) | (1 << (j - 1)): sin}
        )
    return out


def center_images(which: str) -> Dict[str, CliffordElem]:
    """Images of the nontrivial central elements, computed inside Cl_8."""
    vol = volume_element(8)
    g12 = group_automorphism(which, (1, 2))
    minus_one_img = g12 * g12
    vol_img = CliffordElem.one(8)
    for pair in ((1, 2), (3, 4), (5, 6), (7, 8)):
        vol_img = vol_img * group_automorphism(which, pair)
    neg_vol_img = minus_one_img * vol_img
    return {"-1": minus_one_img, "vol": vol_img, "-vol": neg_vol_img}
