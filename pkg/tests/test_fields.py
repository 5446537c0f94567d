import random
from fractions import Fraction

import pytest

from spinbits import reference as ref
from spinbits.clifford import word_apply
from spinbits.fields import (
    build_field_system,
    e1ep_closed_form,
    emit_coordinates,
    field_formula_value,
    frame_index_set,
    frame_point_spinor,
    gram_is_scaled_identity,
    hurwitz_radon,
    irrep_info,
    max_stage,
    random_point,
)
from spinbits.spinors import Spinor


def test_irrep_info_examples():
    assert (irrep_info(3).d, irrep_info(3).count, irrep_info(3).field_type) == (4, 1, "H")
    assert (irrep_info(8).d, irrep_info(8).count, irrep_info(8).field_type) == (8, 2, "R+R")
    assert (irrep_info(10).d, irrep_info(10).count, irrep_info(10).field_type) == (32, 1, "C")
    assert irrep_info(1).d == 1
    with pytest.raises(ValueError):
        irrep_info(0)


def test_max_stage_examples():
    assert max_stage(32) == 10
    assert max_stage(16) == 9
    for N in (1, 3, 9, 15, 1001):
        assert max_stage(N) == 1


def test_max_stage_equals_hurwitz_radon():
    for N in range(1, 4097):
        assert max_stage(N) == hurwitz_radon(N)


def test_hurwitz_radon_closed_form():
    assert hurwitz_radon(1) == 1
    assert hurwitz_radon(2) == 2
    assert hurwitz_radon(4) == 4
    assert hurwitz_radon(8) == 8
    assert hurwitz_radon(16) == 9
    assert hurwitz_radon(32) == 10
    assert hurwitz_radon(64) == 12
    assert hurwitz_radon(128) == 16
    assert hurwitz_radon(256) == 17


def test_closed_forms_match_generator_composition():
    for r in range(2, 13):
        k = r // 2
        for p in range(2, r + 1):
            for a in range(1 << k):
                c, b = e1ep_closed_form(r, p, a)
                assert Spinor.basis(k, b, c) == word_apply(r, [1, p], Spinor.basis(k, a))


def test_build_field_system_32_matches_tabulated_rows():
    emitted = emit_coordinates(32).splitlines()
    gold = [ref.parse_signed_slot_row(row) for row in ref.V_ROWS]
    mismatches = {}
    for j, line in enumerate(emitted, start=1):
        toks = [t.strip() for t in line.strip("()").split(",")]
        mine = [(-1 if t.startswith("-") else 1, int(t.lstrip("-v"))) for t in toks]
        for slot in range(32):
            if mine[slot] != gold[j - 1][slot]:
                mismatches[(j, slot + 1)] = mine[slot][0] * mine[slot][1]
    # the two flagged misprints are corrected; everything else is exact
    assert mismatches == ref.V_ROW_TYPOS


def test_v1_and_v8_examples():
    system = build_field_system(32)
    e1 = [Fraction(int(t == 0)) for t in range(32)]
    assert system.evaluate(1, e1) == [Fraction(int(t == 1)) for t in range(32)]
    v8 = system.evaluate(8, e1)
    assert v8 == [Fraction(-(t == 16)) for t in range(32)]


def test_first_row_text():
    first = emit_coordinates(32).splitlines()[0]
    assert first.startswith("(-v2, v1, v4, -v3, v6, -v5, -v8, v7,")


def test_smallest_sphere():
    assert emit_coordinates(2) == "(-v2, v1)"


def test_quaternionic_frame_on_s3():
    system = build_field_system(4)
    assert system.r == 4 and system.field_count() == 3
    for J in system.J:
        assert J.is_antisymmetric()
        assert J.compose(J).is_minus_identity()
    for a in range(3):
        for b in range(a + 1, 3):
            assert system.J[a].anticommutes_with(system.J[b])


def test_structure_equations_various_N():
    rng = random.Random(19)
    for N in (2, 8, 16, 24, 32, 48, 64, 128, 256, 512):
        system = build_field_system(N)
        assert system.r == hurwitz_radon(N)
        for J in system.J:
            assert J.is_antisymmetric()
            assert J.compose(J).is_minus_identity()
        for a in range(len(system.J)):
            for b in range(a + 1, len(system.J)):
                assert system.J[a].anticommutes_with(system.J[b])
        for _ in range(3):
            assert gram_is_scaled_identity(system, random_point(N, rng))


def test_signed_permutation_entries():
    for N in (16, 32, 64):
        for J in build_field_system(N).J:
            rows = J.to_int_rows()
            for row in rows:
                nz = [x for x in row if x]
                assert len(nz) == 1 and nz[0] in (1, -1)


def test_tangency():
    rng = random.Random(23)
    system = build_field_system(16)
    for _ in range(10):
        z = random_point(16, rng)
        for j in range(1, system.field_count() + 1):
            v = system.evaluate(j, z)
            assert sum(a * b for a, b in zip(v, z)) == 0


def test_evaluate_validation():
    system = build_field_system(8)
    with pytest.raises(ValueError):
        system.evaluate(0, [Fraction(1)] * 8)
    with pytest.raises(ValueError):
        system.evaluate(8, [Fraction(1)] * 8)
    with pytest.raises(ValueError):
        system.evaluate(1, [Fraction(1)] * 7)


def test_multiplicity_split():
    rng = random.Random(37)
    # stage 8 carries two inequivalent real forms; N = 24 allows mixed splits
    for split in ((3, 0), (2, 1), (1, 2), (0, 3)):
        system = build_field_system(24, split=split)
        assert system.r == 8 and system.multiplicities == split
        for J in system.J:
            assert J.is_antisymmetric()
            assert J.compose(J).is_minus_identity()
        for a in range(len(system.J)):
            for b in range(a + 1, len(system.J)):
                assert system.J[a].anticommutes_with(system.J[b])
        for _ in range(2):
            assert gram_is_scaled_identity(system, random_point(24, rng))
    with pytest.raises(ValueError):
        build_field_system(24, split=(1, 1))
    with pytest.raises(ValueError):
        build_field_system(32, split=(1, 1))


def test_field_formula_matches_matrix_route():
    rng = random.Random(29)
    for r in (8, 9, 10, 12):
        idx = frame_index_set(r)
        N = irrep_info(r).d
        system = build_field_system(N)
        assert system.r == r
        for _ in range(3):
            x = {a: Fraction(rng.randint(-5, 5)) for a in idx}
            y = {a: Fraction(rng.randint(-5, 5)) for a in idx}
            z = []
            for a in idx:
                z.extend((x[a], y[a]))
            for p in range(2, r + 1):
                direct = field_formula_value(r, p, x, y)
                out = system.J[p - 2].apply(z)
                xs = {a: out[2 * t] for t, a in enumerate(idx)}
                ys = {a: out[2 * t + 1] for t, a in enumerate(idx)}
                assert direct == frame_point_spinor(r, xs, ys)


def test_frame_closure_under_top_generator():
    # stage 9: e_1 e_9 maps the symmetrized frame into itself (the
    # reflection partner lands on the same frame member up to sign)
    from spinbits.matrices import real_basis_frame

    frame = real_basis_frame(9, "full")
    for v in frame.vectors:
        img = word_apply(9, [1, 9], v)
        coords = frame.expand(img)
        assert sum(1 for c in coords if c) == 1


def test_json_emission():
    out = emit_coordinates(8, fmt="json")
    assert out["sphere"] == 7 and out["stage"] == 8
    assert len(out["fields"]) == 7
    assert all(len(row) == 8 for row in out["fields"])
