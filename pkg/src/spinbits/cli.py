"""Command-line interface: every subsystem behind one binary.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .clifford import clifford_apply
from .fields import build_field_system, emit_coordinates, gram_is_scaled_identity, random_point
from .forms import g2_three_form, omega_square, spin7_four_form
from .matrices import (
    Matrix,
    kappa_matrix,
    kappa_pm_matrix,
    lambda_matrix,
    real_rep_matrix,
)
from .octonions import algebra_checks, octonion_table, quaternion_table
from .scalars import Scalar
from .spinors import Spinor
from .triality import (
    build_outer,
    center_images,
    eigenspace,
    g2_action_matrix,
    g2_generators,
    g2_structure,
    omega_eigenvalue,
    s3_relations,
)
from .verify import Report, verify_all
from .scalars import ONE


class UsageError(Exception):
    pass


def parse_word(text: str) -> List[int]:
    if not re.fullmatch(r"(e\d+)*", text):
        raise UsageError(f"cannot parse generator word {text!r}")
    return [int(m) for m in re.findall(r"e(\d+)", text)]


def _print(payload, fmt: str, latex_fn=None, text_fn=None):
    if fmt == "json":
        print(json.dumps(payload, default=_to_jsonable, indent=None, sort_keys=False))
    elif fmt == "latex":
        print(latex_fn() if latex_fn else payload)
    else:
        print(text_fn() if text_fn else payload)


def _to_jsonable(x):
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    raise TypeError(f"not JSON encodable: {x!r}")


def cmd_spinor(args) -> int:
    n, p, a = args.n, args.p, args.index
    k = n // 2
    if not 0 <= a < (1 << k):
        raise UsageError(f"index {a} out of range for n={n}")
    if not 1 <= p <= n:
        raise UsageError(f"generator {p} out of range for n={n}")
    img = clifford_apply(n, p, Spinor.basis(k, a))
    if args.format == "json":
        print(json.dumps(img.to_json()))
    elif args.format == "latex":
        print(img.latex())
    else:
        print(repr(img))
    return 0


def cmd_rep(args) -> int:
    word = parse_word(args.word)
    n = args.n
    space = args.space
    try:
        if space == "full":
            M = kappa_matrix(n, word)
        elif space in ("plus", "minus"):
            M = kappa_pm_matrix(n, word, 1 if space == "plus" else -1)
        elif space in ("real-plus", "real-minus"):
            source = "plus" if space == "real-plus" else "minus"
            if n % 8 in (1, 2) and space == "real-plus":
                source = "full"  # single real form at these stages
            M = real_rep_matrix(n, word, source)
        elif space == "vector":
            M = lambda_matrix(n, word)
        else:
            raise UsageError(f"unknown space {space}")
    except ValueError as e:
        raise UsageError(str(e))
    if args.format == "json":
        print(json.dumps(M.to_json()))
    elif args.format == "latex":
        print(M.latex())
    else:
        print(repr(M))
    return 0


def _parse_eigenvalue(text: str) -> Scalar:
    table = {
        "1": ONE,
        "-1": -ONE,
        "omega": omega_eigenvalue(),
        "omega-bar": omega_eigenvalue(True),
    }
    if text not in table:
        raise UsageError("eigenvalue must be one of: 1, -1, omega, omega-bar")
    return table[text]


def _report_from_pairs(pairs) -> Report:
    rep = Report()
    rep.extend(pairs)
    return rep


def _emit_report(rep: Report, fmt: str) -> int:
    if fmt == "json":
        print(json.dumps(rep.to_json()))
    else:
        for c in rep.checks:
            print(f"[{c.status.upper():4}] {c.name}")
        print(f"{rep.pass_count} passed, {rep.fail_count} failed")
    return rep.exit_code()


def cmd_triality(args) -> int:
    if args.what in ("sigma", "tau"):
        outer = build_outer(args.what)
        if args.check_order:
            order = 3 if args.what == "sigma" else 2
            ok = outer.power(order).matrix == Matrix.identity(28)
            rep = _report_from_pairs([(f"{args.what}* has order {order}", ok)])
            return _emit_report(rep, args.format)
        if args.eigen is not None:
            lam = _parse_eigenvalue(args.eigen)
            dim, basis = eigenspace(outer, lam)
            payload = {
                "eigenvalue": args.eigen,
                "dimension": dim,
                "basis": [
                    {f"{i}{j}": c for (i, j), c in vec.items()} for vec in basis
                ],
            }
            _print(payload, args.format, text_fn=lambda: f"dimension {dim}")
            return 0
        M = outer.matrix
        if args.format == "latex":
            print(M.latex())
        elif args.format == "json":
            print(json.dumps(M.to_json()))
        else:
            print(repr(M))
        return 0

    if args.what == "g2":
        if args.generators:
            payload = [
                {f"{i}{j}": c for (i, j), c in g.items()} for g in g2_generators()
            ]
            _print(payload, args.format,
                   text_fn=lambda: "\n".join(str(p) for p in payload))
            return 0
        if args.matrix is not None:
            alphas = [Fraction(t) for t in args.matrix.split(",")]
            if len(alphas) != 14:
                raise UsageError("need 14 comma-separated coefficients")
            M = g2_action_matrix(alphas)
            if args.format == "latex":
                print(M.latex())
            elif args.format == "json":
                print(json.dumps(M.to_json()))
            else:
                print(repr(M))
            return 0
        res = g2_structure()
        rep = _report_from_pairs(res["checks"])
        return _emit_report(rep, args.format)

    if args.what == "s3":
        rep = _report_from_pairs(s3_relations())
        return _emit_report(rep, args.format)

    if args.what == "center":
        rows = []
        for which in ("sigma", "tau"):
            for key, elem in center_images(which).items():
                rows.append((which, key, elem))
        if args.format == "json":
            print(json.dumps([
                {"map": w, "argument": k, "image": repr(e)} for (w, k, e) in rows
            ]))
        else:
            for w, k, e in rows:
                print(f"{w}({k}) = {e}")
        return 0
    raise UsageError(f"unknown triality subcommand {args.what}")


def cmd_octonion(args) -> int:
    if args.what == "table":
        table = octonion_table()
        if args.format == "json":
            print(json.dumps([[[s, i] for (s, i) in row] for row in table]))
        elif args.format == "latex":
            body = " \\\\\n".join(
                " & ".join(("-" if s < 0 else "") + f"\\hat e_{{{i}}}" for (s, i) in row)
                for row in table
            )
            print("\\begin{array}{%s}\n%s\n\\end{array}" % ("c" * 8, body))
        else:
            for row in table:
                print(" ".join(f"{'-' if s < 0 else '+'}e{i}" for (s, i) in row))
        return 0
    if args.what == "check":
        rep = _report_from_pairs(algebra_checks(args.samples, args.seed))
        return _emit_report(rep, args.format)
    if args.what == "quaternions":
        table = quaternion_table()
        if args.format == "json":
            print(json.dumps([[[s, i] for (s, i) in row] for row in table]))
        else:
            for row in table:
                print(" ".join(f"{'-' if s < 0 else '+'}e{i}" for (s, i) in row))
        return 0
    raise UsageError(f"unknown octonion subcommand {args.what}")


def cmd_forms(args) -> int:
    if args.what == "omega":
        om = spin7_four_form()
        if args.check_square:
            sq = omega_square()
            vol = sq.coefficient((1, 2, 3, 4, 5, 6, 7, 8))
            ok = len(sq.terms) == 1 and vol == 504
            rep = _report_from_pairs([("omega wedge omega = 504 vol", ok)])
            return _emit_report(rep, "text" if not args.latex else "text")
        print(om.latex() if args.latex else repr(om))
        return 0
    if args.what == "phi":
        phi = g2_three_form()
        print(phi.latex() if args.latex else repr(phi))
        return 0
    raise UsageError(f"unknown forms subcommand {args.what}")


def cmd_fields(args) -> int:
    N = args.sphere + 1
    split: Optional[Tuple[int, int]] = None
    if args.split:
        parts = args.split.split(",")
        if len(parts) != 2:
            raise UsageError("--split needs m1,m2")
        split = (int(parts[0]), int(parts[1]))
    try:
        system = build_field_system(N, split=split)
    except ValueError as e:
        raise UsageError(str(e))
    if args.verify:
        import random as _random

        rng = _random.Random(args.seed)
        ok = all(J.is_antisymmetric() for J in system.J)
        ok = ok and all(J.compose(J).is_minus_identity() for J in system.J)
        ok = ok and all(
            system.J[a].anticommutes_with(system.J[b])
            for a in range(len(system.J))
            for b in range(a + 1, len(system.J))
        )
        gram = all(
            gram_is_scaled_identity(system, random_point(N, rng))
            for _ in range(args.samples)
        )
        rep = _report_from_pairs(
            [
                (f"structure equations for {system.field_count()} fields on S^{N-1}", ok),
                (f"exact Gram frames at {args.samples} random points", gram),
            ]
        )
        return _emit_report(rep, args.format if args.format != "latex" else "text")
    if args.emit == "matrices":
        payload = [J.to_int_rows() for J in system.J]
        if args.format == "json":
            print(json.dumps({"sphere": N - 1, "stage": system.r, "matrices": payload}))
        else:
            for m, rows in enumerate(payload, start=1):
                print(f"J_{m}:")
                for row in rows:
                    print("  " + " ".join(f"{x:2d}" for x in row))
        return 0
    out = emit_coordinates(N, fmt=args.format, split=split)
    if args.format == "json":
        print(json.dumps(out))
    else:
        print(out)
    return 0


def cmd_verify_all(args) -> int:
    rep = verify_all(seed=args.seed, samples=args.samples, max_n=args.max_n)
    return _emit_report(rep, args.format)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="spinbits",
        description="exact spinor algebra over binary-coded bases",
    )
    sub = top.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spinor", help="generator action on basic spinors")
    spsub = sp.add_subparsers(dest="what", required=True)
    mul = spsub.add_parser("mul", help="image of u_index under e_p")
    mul.add_argument("--n", type=int, required=True)
    mul.add_argument("--p", type=int, required=True)
    mul.add_argument("--index", type=int, required=True)
    mul.add_argument("--format", choices=("text", "json", "latex"), default="json")
    mul.set_defaults(func=cmd_spinor)

    rep = sub.add_parser("rep", help="representation matrices")
    repsub = rep.add_subparsers(dest="what", required=True)
    mat = repsub.add_parser("matrix")
    mat.add_argument("--n", type=int, required=True)
    mat.add_argument("--word", type=str, required=True, help="e.g. e1e2")
    mat.add_argument(
        "--space",
        choices=("full", "plus", "minus", "real-plus", "real-minus", "vector"),
        default="full",
    )
    mat.add_argument("--format", choices=("text", "json", "latex"), default="text")
    mat.set_defaults(func=cmd_rep)

    tri = sub.add_parser("triality", help="outer automorphisms and g2")
    tri.add_argument("what", choices=("sigma", "tau", "g2", "s3", "center"))
    tri.add_argument("--matrix", nargs="?", const="", default=None,
                     help="for g2: 14 comma-separated coefficients")
    tri.add_argument("--check-order", action="store_true")
    tri.add_argument("--eigen", type=str, default=None,
                     help="1, -1, omega, omega-bar")
    tri.add_argument("--generators", action="store_true")
    tri.add_argument("--annihilator-check", action="store_true")
    tri.add_argument("--format", choices=("text", "json", "latex"), default="text")
    tri.set_defaults(func=_triality_dispatch)

    octo = sub.add_parser("octonion", help="division-algebra tables")
    octo.add_argument("what", choices=("table", "check", "quaternions"))
    octo.add_argument("--samples", type=int, default=100)
    octo.add_argument("--seed", type=int, default=1)
    octo.add_argument("--format", choices=("ascii", "text", "json", "latex"), default="text")
    octo.set_defaults(func=cmd_octonion)

    fo = sub.add_parser("forms", help="invariant exterior forms")
    fo.add_argument("what", choices=("omega", "phi"))
    fo.add_argument("--check-square", action="store_true")
    fo.add_argument("--latex", action="store_true")
    fo.set_defaults(func=cmd_forms)

    fl = sub.add_parser("fields", help="tangent vector fields on spheres")
    fl.add_argument("--sphere", type=int, required=True, help="M for S^M")
    fl.add_argument("--emit", choices=("coords", "matrices"), default="coords")
    fl.add_argument("--verify", action="store_true")
    fl.add_argument("--samples", type=int, default=20)
    fl.add_argument("--seed", type=int, default=1)
    fl.add_argument("--split", type=str, default=None, help="m1,m2")
    fl.add_argument("--format", choices=("text", "json", "latex"), default="text")
    fl.set_defaults(func=cmd_fields)

    va = sub.add_parser("verify-all", help="run the full certificate suite")
    va.add_argument("--seed", type=int, default=1)
    va.add_argument("--samples", type=int, default=100)
    va.add_argument("--max-n", type=int, default=int(os.environ.get("SPINBITS_MAX_N", "12")))
    va.add_argument("--format", choices=("text", "json"), default="text")
    va.set_defaults(func=cmd_verify_all)

    return top


def _triality_dispatch(args) -> int:
    if args.what == "g2" and args.annihilator_check:
        res = g2_structure()
        rep = _report_from_pairs(
            [c for c in res["checks"] if "annihilates" in c[0]]
        )
        return _emit_report(rep, args.format)
    return cmd_triality(args)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "format", None) == "ascii":
        args.format = "text"
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
