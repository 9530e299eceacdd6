"""Command-line front end: ``cyclolab {table,jacobi,matrix,orbits,verify}``."""
from __future__ import annotations

import argparse
import sys

from . import export
from .coefficients import ell_of
from .field import CACHE_ENV, FieldError, build_dlog_table, find_generator, make_field
from .formula import distinct_count
from .matrix import build_orbit_table, char_poly, cyclo_matrix, determinant, eigenvalues, is_squarefree
from .sums import FieldData
from .verify import SUITES, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _field_args(p: argparse.ArgumentParser, ell: bool = True):
    p.add_argument("--p", type=int, required=True, help="characteristic (odd prime)")
    p.add_argument("--r", type=int, default=1, help="extension degree")
    if ell:
        p.add_argument("--ell", type=int, required=True, help="odd prime l; the order is 2 l^2")
    p.add_argument("--gen", type=int, default=None,
                   help="generator as an encoded element c0 + c1 p + ... (default: least generator)")
    p.add_argument("--poly", type=_ints, default=None, help="defining polynomial c0,c1,...,1")
    p.add_argument("--cache", default=None, help=f"dlog cache directory (default: ${CACHE_ENV})")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")


def _setup(args, order=None):
    field = make_field(args.p, args.r, args.poly)
    gen = args.gen if args.gen is not None else field.encode(find_generator(field))
    data = FieldData(build_dlog_table(field, gen, args.cache))
    if order is None:
        e = 2 * args.ell * args.ell
        ell_of(e)
    else:
        e = order
    if (field.q - 1) % e:
        raise UsageError(f"order {e} does not divide q - 1 = {field.q - 1}")
    return data.context(e)


def cmd_table(args, out):
    ctx = _setup(args, args.order)
    tab = ctx.dh_table if args.kind == "dh" else ctx.table
    if args.format == "csv":
        out.write(export.table_csv(tab))
    else:
        out.write(export.dumps(tab.to_json()) + "\n")
    return EXIT_OK


def cmd_jacobi(args, out):
    ctx = _setup(args, args.order)
    val = ctx.jacobi_sum(args.i, args.j)
    if args.format == "csv":
        out.write(export.jacobi_csv([(args.i, args.j, val)]))
    else:
        out.write(export.dumps(export.jacobi_json(ctx.e, args.i, args.j, val, ctx.data.provenance)) + "\n")
    return EXIT_OK


def cmd_matrix(args, out):
    ctx = _setup(args)
    M = cyclo_matrix(ctx)
    if args.format == "csv":
        out.write(M.to_csv())
        return EXIT_OK
    doc = M.to_json()
    if args.invariants:
        cp = char_poly(M)
        doc.update({
            "det": determinant(M),
            "charpoly": cp,
            "eigenvalues": [[z.real, z.imag] for z in eigenvalues(M)],
            "squarefree_charpoly": is_squarefree(cp),
            "nilpotent": (M ** M.n).is_zero(),
        })
    out.write(export.dumps(doc) + "\n")
    return EXIT_OK


def cmd_orbits(args, out):
    e = 2 * args.ell * args.ell
    ell_of(e)
    tab = build_orbit_table(e, args.parity)
    if args.format == "text":
        out.write(tab.render() + "\n")
        out.write(f"classes: {tab.class_count}\n")
    else:
        doc = {
            "e": e,
            "parity": tab.parity,
            "class_count": tab.class_count,
            "distinct_count_formula": distinct_count(args.ell),
            "layout": [[list(c) for c in row] for row in tab.layout()],
        }
        out.write(export.dumps(doc) + "\n")
    return EXIT_OK


def cmd_verify(args, out):
    ids = list(SUITES) if args.suite == "all" else args.suite.split(",")
    unknown = [i for i in ids if i not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}")
    ctx = _setup(args)
    reports = [run_suite(i, ctx) for i in ids]
    if args.format == "text":
        for r in reports:
            out.write(r.summary() + "\n")
    else:
        out.write(export.dumps({"schema": 1, "reports": [r.to_json() for r in reports]}) + "\n")
    return EXIT_OK if all(r.status == "PASS" for r in reports) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cyclolab", description="Cyclotomic numbers of order 2 l^2 over F_q")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("table", help="cyclotomic or Dickson-Hurwitz table")
    _field_args(p)
    p.add_argument("--order", type=int, default=None, help="order e (default 2 l^2)")
    p.add_argument("--kind", choices=("cyclotomic", "dh"), default="cyclotomic")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("jacobi", help="one Jacobi sum J_e(i, j)")
    _field_args(p, ell=False)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(func=cmd_jacobi)

    p = sub.add_parser("matrix", help="matrix of (a,b)_{2l^2} and its invariants")
    _field_args(p)
    p.add_argument("--invariants", action="store_true")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("orbits", help="symmetry classes of (a,b)_{2l^2}")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--parity", choices=("odd", "even"), required=True, help="parity of k = (q-1)/2l^2")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("verify", help="run identity suites")
    _field_args(p)
    p.add_argument("--suite", default="all", help="identity id, comma list, or 'all'")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, FieldError, ValueError) as exc:
        print(f"cyclolab: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
