"""Command line interface.

Exit codes: 0 success, 1 verification violations, 2 bad input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import dual, primitives, products, quotient, series
from .coproduct import (check_32_relations, check_bialgebra, coproduct, coproduct_left,
                        coproduct_right)
from .report import Report
from .tensor import check_tensor_structure
from .trees import enumerate_trees, parse_tree, render_tree
from .vectors import TensorVector, TreeVector, parse_vector

LAWS = ("tri", "tensor", "bialgebra", "three-two", "cotri", "dual-adjoint", "lr")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _tree(text: str):
    return parse_tree(text)


def _vector(text: str) -> TreeVector:
    return parse_vector(text)


def _per_tree(x: TreeVector, f) -> TensorVector:
    return x.apply(f, TensorVector)


def cmd_mul(args, out):
    x, y = _vector(args.left), _vector(args.right)
    print(products.product_vec(args.op, x, y), file=out)
    return 0


def cmd_coprod(args, out):
    x = _vector(args.tree)
    f = {"full": coproduct, "left": coproduct_left, "right": coproduct_right}[args.piece]
    print(f(x), file=out)
    return 0


def cmd_dual(args, out):
    if args.dual_command == "coprod":
        x = _vector(args.tree)
        if args.piece is None:
            print(dual.dual_coproduct(x), file=out)
        else:
            print(_per_tree(x, lambda t: dual.dual_pieces(t)[args.piece]), file=out)
    else:
        print(dual.dual_product(_vector(args.left), _vector(args.right)), file=out)
    return 0


def _run_law(law: str, n: int) -> Report:
    if law == "tri":
        return products.check_tridend_axioms(n)
    if law == "tensor":
        return check_tensor_structure(n)
    if law == "bialgebra":
        return check_bialgebra(n)
    if law == "three-two":
        return check_32_relations(n)
    if law == "cotri":
        report = Report("cotri")
        report.extend(dual.check_cotri(n))
        report.extend(dual.check_compatibilities(n))
        return report
    if law == "dual-adjoint":
        return dual.check_dual_adjointness(n)
    if law == "lr":
        report = quotient.check_biideal(n)
        readings = quotient.check_lr_readings(n)
        report.extend(readings["standard"])
        return report
    raise ValueError(law)


def cmd_verify(args, out):
    report = _run_law(args.law, args.max_degree)
    for v in report.violations:
        print(v.line(), file=out)
    print(report.summary(), file=out)
    return 0 if report.ok else 1


def _dims_rows(n: int):
    table = primitives.dimension_table(n, allow_large=n > primitives.DEFAULT_MAX_DEGREE)
    cols = ["dim_A", "dim_prim_coass", "dim_prim_codend", "dim_prim_left", "dim_prim_right"]
    return [dict(degree=d, **{c: table[d][c] for c in cols}) for d in sorted(table)], ["degree"] + cols


def cmd_dims(args, out):
    rows, cols = _dims_rows(args.max_degree)
    if args.format == "json":
        print(json.dumps(rows, indent=2), file=out)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        out.write(buf.getvalue())
    else:
        widths = [max(len(c), 6) for c in cols]
        print("  ".join(c.rjust(w) for c, w in zip(cols, widths)), file=out)
        for r in rows:
            print("  ".join(str(r[c]).rjust(w) for c, w in zip(cols, widths)), file=out)
    return 0


def cmd_series(args, out):
    n = args.terms
    if args.which == "R":
        coeffs = series.tree_series(n).integer_coefficients()
    elif args.which == "P":
        coeffs = series.codend_series(n).integer_coefficients()
    else:
        coeffs = series.coass_series(n).integer_coefficients()
    print(" ".join(str(c) for c in coeffs), file=out)
    return 0


def cmd_quotient(args, out):
    if args.quotient_command == "mul":
        print(quotient.lr_product(_tree(args.left), _tree(args.right)), file=out)
    else:
        print(quotient.lr_coproduct(_tree(args.tree)), file=out)
    return 0


def cmd_express(args, out):
    t = _tree(args.tree)
    print(products.render_expression(products.express_in_generator(t)), file=out)
    return 0


def cmd_enumerate(args, out):
    for t in enumerate_trees(args.degree):
        print(render_tree(t), file=out)
    return 0


def _nonneg(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tridend", description="Planar tree tridendriform bialgebra calculator.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("mul", help="product of two tree vectors")
    s.add_argument("--op", choices=list(products.OPS), default="star")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(func=cmd_mul)

    s = sub.add_parser("coprod", help="admissible-cut coproduct")
    s.add_argument("--piece", choices=["full", "left", "right"], default="full")
    s.add_argument("tree")
    s.set_defaults(func=cmd_coprod)

    s = sub.add_parser("dual", help="dual coproduct and product")
    dsub = s.add_subparsers(dest="dual_command", required=True, parser_class=_Parser)
    d = dsub.add_parser("coprod")
    d.add_argument("--piece", choices=list(dual.PIECES), default=None)
    d.add_argument("tree")
    d = dsub.add_parser("mul")
    d.add_argument("left")
    d.add_argument("right")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("verify", help="exhaustive verification of a family of identities")
    s.add_argument("--law", choices=LAWS, required=True)
    s.add_argument("--max-degree", type=_nonneg, default=4)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("dims", help="dimension table of the primitive spaces")
    s.add_argument("--max-degree", type=_nonneg, default=5)
    s.add_argument("--format", choices=["text", "csv", "json"], default="text")
    s.set_defaults(func=cmd_dims)

    s = sub.add_parser("series", help="coefficients of a generating series")
    s.add_argument("--which", choices=["R", "P", "primcoass"], required=True)
    s.add_argument("--terms", type=_nonneg, default=10)
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("quotient", help="quotient on binary trees")
    qsub = s.add_subparsers(dest="quotient_command", required=True, parser_class=_Parser)
    q = qsub.add_parser("mul")
    q.add_argument("left")
    q.add_argument("right")
    q = qsub.add_parser("coprod")
    q.add_argument("tree")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("express", help="write a tree in terms of the generator g = (|,|)")
    s.add_argument("tree")
    s.set_defaults(func=cmd_express)

    s = sub.add_parser("enumerate", help="list the trees of a degree in canonical order")
    s.add_argument("--degree", type=_nonneg, required=True)
    s.set_defaults(func=cmd_enumerate)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    err = sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except _UsageError as e:
        print(e, file=err)
        return 2
    except (ValueError, ArithmeticError) as e:
        print(f"error: {e}", file=err)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
