"""Command line interface.

Exit status is 0 on success, 1 on a domain error (reported on stderr as
``error: E_CODE: message``) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from galhull.code import (
    code_from_rows,
    dual_galois,
    hull,
    is_lcd,
    is_self_dual,
    is_self_orthogonal,
)
from galhull.codefile import read_code_file
from galhull.errors import GalHullError
from galhull.golden import run_checks
from galhull.lcd import STRATEGIES, LcdSearchConfig, lcd_equivalent_search
from galhull.matrix import Matrix
from galhull.mpc import MatrixProductSpec, mpc_generator, mpc_hull, mpc_hull_dim_bounds


def format_matrix(M: Matrix) -> list[str]:
    if M.nrows == 0:
        return ["(empty)"]
    return [" ".join(map(str, r)) for r in M.rows]


def _emit(out, title: str, M: Matrix) -> None:
    print(f"{title}:", file=out)
    for line in format_matrix(M):
        print(line, file=out)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _load_code(path):
    F, rows = read_code_file(path)
    return F, rows, code_from_rows(F, rows)


def _header(out, F, C, ell):
    print(f"field: GF({F.q}) p={F.p} e={F.e} modulus={','.join(map(str, F.modulus))}", file=out)
    print(f"code: [{C.n},{C.k}]", file=out)
    print(f"ell: {ell}", file=out)


def cmd_hull(args, out):
    F, rows, C = _load_code(args.code)
    rep = hull(C, args.ell)
    _header(out, F, C, rep.ell)
    print(f"h = {rep.h}", file=out)
    print(f"r = {rep.r}", file=out)
    if rows.rank() == rows.nrows:
        _emit(out, "gram", rows.gram(rep.ell))
    else:
        _emit(out, "gram", rep.gram)
    _emit(out, "hull generator", rep.hull.gen)
    _emit(out, "structured generator", rep.structured_gen)


def cmd_dual(args, out):
    F, _, C = _load_code(args.code)
    D = dual_galois(C, args.ell)
    _header(out, F, C, args.ell)
    _emit(out, "dual generator", D.gen)


def cmd_check(args, out):
    _, _, C = _load_code(args.code)
    print(f"lcd: {_bool(is_lcd(C, args.ell))}", file=out)
    print(f"self-orthogonal: {_bool(is_self_orthogonal(C, args.ell))}", file=out)
    print(f"self-dual: {_bool(is_self_dual(C, args.ell))}", file=out)


def cmd_lcd_search(args, out):
    F, _, C = _load_code(args.code)
    cfg = LcdSearchConfig(args.strategy, args.m, args.budget, args.seed)
    res = lcd_equivalent_search(C, args.ell, cfg)
    print(f"found: {_bool(res.found)}", file=out)
    print(f"exhausted: {_bool(res.exhausted)}", file=out)
    print(f"evaluations: {res.evaluations}", file=out)
    if res.found:
        print("x: " + " ".join(map(str, res.x)), file=out)
        print("perm: " + " ".join(map(str, res.transform.perm)), file=out)
        print("diag: " + " ".join(map(str, res.transform.diag)), file=out)
        _emit(out, "generator", res.code.gen)


def cmd_mpc(args, out):
    codes = []
    F = None
    for path in args.codes.split(","):
        G, _, C = _load_code(path)
        if F is not None and G != F:
            raise GalHullError(f"{path} is over a different field", "E_FIELD_MISMATCH")
        F = G
        codes.append(C)
    FA, A = read_code_file(args.matrix)
    if FA != F:
        raise GalHullError("outer matrix is over a different field", "E_FIELD_MISMATCH")
    spec = MatrixProductSpec(tuple(codes), A)
    ell = F.check_level(args.ell)
    _emit(out, "mpc generator", mpc_generator(spec))
    if args.hull:
        _emit(out, "hull generator", mpc_hull(spec, ell).gen)
    if args.bounds:
        b = mpc_hull_dim_bounds(spec, ell)
        print(f"bounds: {b.lower} <= dim hull <= {b.upper}", file=out)
        print(f"triangular: {_bool(b.triangular)}", file=out)


def cmd_verify(args, out):
    results = run_checks()
    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}", file=out)
    return 0 if all(ok for _, ok in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="galhull", description="Galois hulls of linear codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_code(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--code", required=True, help="code file")
        p.add_argument("--ell", type=int, required=True, help="Galois level")
        p.set_defaults(func=func)
        return p

    with_code("hull", cmd_hull, "hull, Gram matrix and structured generator")
    with_code("dual", cmd_dual, "Galois dual")
    with_code("check", cmd_check, "LCD / self-orthogonal / self-dual")
    p = with_code("lcd-search", cmd_lcd_search, "find a monomially equivalent LCD code")
    p.add_argument("--strategy", choices=STRATEGIES, default="exhaustive-units")
    p.add_argument("--m", type=int, default=None, help="subfield degree (restricted strategy)")
    p.add_argument("--budget", type=int, default=10_000, help="draws for the random strategy")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("mpc", help="matrix product code")
    p.add_argument("--codes", required=True, help="comma-separated constituent code files")
    p.add_argument("--matrix", required=True, help="outer matrix file")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--hull", action="store_true", help="hull from the constituents")
    p.add_argument("--bounds", action="store_true", help="hull dimension bounds")
    p.set_defaults(func=cmd_mpc)

    p = sub.add_parser("verify-examples", help="run the built-in worked examples")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        status = args.func(args, out)
    except GalHullError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
