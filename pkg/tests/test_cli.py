import json

import pytest

from spinbits.cli import main, parse_word
from spinbits.matrices import Matrix
from spinbits.scalars import Scalar
from spinbits.spinors import Spinor
from spinbits.verify import Report, verify_all


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_parse_word():
    assert parse_word("e1e2") == [1, 2]
    assert parse_word("e10e2") == [10, 2]
    with pytest.raises(Exception):
        parse_word("x1")


def test_spinor_mul_json(capsys):
    code, out = run(capsys, "spinor", "mul", "--n", "8", "--p", "5", "--index", "11")
    assert code == 0
    payload = json.loads(out)
    assert payload["terms"] == [
        {"index": 15, "coeff": {"1": {"re": "0/1", "im": "1/1"}}}
    ]
    psi = Spinor.from_json(payload)
    assert psi == Spinor.basis(4, 15, Scalar.i())


def test_spinor_mul_range_error(capsys):
    code, _ = run(capsys, "spinor", "mul", "--n", "6", "--p", "9", "--index", "0")
    assert code == 2


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_rep_matrix_json_round_trip(capsys):
    code, out = run(
        capsys, "rep", "matrix", "--n", "6", "--word", "e1e2", "--space", "full",
        "--format", "json",
    )
    assert code == 0
    M = Matrix.from_json(json.loads(out))
    assert M.rows == M.cols == 8


def test_rep_matrix_vector_space(capsys):
    code, out = run(
        capsys, "rep", "matrix", "--n", "6", "--word", "e1e2", "--space", "vector",
        "--format", "json",
    )
    assert code == 0
    M = Matrix.from_json(json.loads(out))
    assert M.rows == 6


def test_rep_matrix_chirality_spaces(capsys):
    for space, size in (("plus", 8), ("minus", 8)):
        code, out = run(
            capsys, "rep", "matrix", "--n", "8", "--word", "e1e2",
            "--space", space, "--format", "json",
        )
        assert code == 0
        M = Matrix.from_json(json.loads(out))
        assert M.rows == M.cols == size


def test_rep_matrix_bad_space_word(capsys):
    code, _ = run(
        capsys, "rep", "matrix", "--n", "8", "--word", "e1", "--space", "plus",
    )
    assert code == 2


def test_triality_check_order(capsys):
    code, out = run(capsys, "triality", "sigma", "--check-order")
    assert code == 0
    assert "order 3" in out
    code, out = run(capsys, "triality", "tau", "--check-order")
    assert code == 0


def test_triality_eigen(capsys):
    code, out = run(capsys, "triality", "sigma", "--eigen", "omega", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["dimension"] == 7


def test_triality_s3_and_center(capsys):
    code, out = run(capsys, "triality", "s3")
    assert code == 0
    assert "0 failed" in out
    code, out = run(capsys, "triality", "center")
    assert code == 0
    assert "sigma(-1)" in out


def test_triality_g2_generators(capsys):
    code, out = run(capsys, "triality", "g2", "--generators", "--format", "json")
    assert code == 0
    assert len(json.loads(out)) == 14


def test_triality_g2_matrix(capsys):
    alphas = ",".join(["1"] + ["0"] * 13)
    code, out = run(capsys, "triality", "g2", "--matrix", alphas, "--format", "json")
    assert code == 0
    M = Matrix.from_json(json.loads(out))
    assert M.data[1][2] == Scalar.rational(2)


def test_octonion_table_json(capsys):
    code, out = run(capsys, "octonion", "table", "--format", "json")
    assert code == 0
    table = json.loads(out)
    assert table[1][2] == [-1, 3]


def test_octonion_check(capsys):
    code, out = run(capsys, "octonion", "check", "--samples", "10", "--seed", "3")
    assert code == 0
    assert "0 failed" in out


def test_octonion_quaternions(capsys):
    code, out = run(capsys, "octonion", "quaternions")
    assert code == 0
    assert len(out.strip().splitlines()) == 4


def test_forms_commands(capsys):
    code, out = run(capsys, "forms", "omega", "--check-square")
    assert code == 0
    assert "504" in out
    code, out = run(capsys, "forms", "phi", "--latex")
    assert code == 0
    assert "dx_{2}" in out


def test_fields_coords(capsys):
    code, out = run(capsys, "fields", "--sphere", "31", "--emit", "coords")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 9
    assert lines[0].startswith("(-v2, v1, v4, -v3,")


def test_fields_matrices_and_verify(capsys):
    code, out = run(capsys, "fields", "--sphere", "7", "--emit", "matrices", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["stage"] == 8 and len(payload["matrices"]) == 7
    code, out = run(capsys, "fields", "--sphere", "15", "--verify", "--samples", "4")
    assert code == 0
    assert "0 failed" in out


def test_fields_split_usage_error(capsys):
    code, _ = run(capsys, "fields", "--sphere", "31", "--split", "1,1")
    assert code == 2


def test_verify_all_sampleless_golden_only(capsys):
    code, out = run(
        capsys, "verify-all", "--samples", "0", "--max-n", "6", "--format", "json"
    )
    assert code == 0
    rep = Report.from_json(json.loads(out))
    assert rep.fail_count == 0
    assert rep.pass_count == len(rep.checks)


def test_report_round_trip():
    rep = verify_all(seed=1, samples=0, max_n=4)
    clone = Report.from_json(rep.to_json())
    assert clone.to_json() == rep.to_json()
    assert clone.exit_code() == rep.exit_code()


def test_fault_injection_hits_exactly_one_check():
    rep = verify_all(seed=1, samples=0, max_n=4, corrupt="sigma")
    fails = [c.name for c in rep.checks if not c.passed]
    assert fails == ["C3 sigma* equals the tabulated 28x28 array"]
    assert rep.exit_code() == 1
