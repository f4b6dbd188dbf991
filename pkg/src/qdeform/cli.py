"""Command line interface.

Verbs:
  normalize   rewrite an expression to normal form in a named algebra
  check       run a verification suite, text or JSON report
  rep         export Fock-space matrices for an oscillator algebra
  catalog     list presentations or show/export one
  pair        evaluate the dual pairing <L^±_ij, expression>

Numeric defaults (q0 = 0.7, dim = 16) can be overridden per-call or via
the environment variables QD_Q0 and QD_DIM.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .catalog import (build_presentation, catalog_names,
                      presentation_to_json)
from .fock import fock_rep
from .freealg import RewriteBudgetExceeded, format_element
from .hopf import pairing_element
from .parser import ParseError, parse_expression
from .reports import render_text, validate_report
from .scalars import ExponentOverflow
from .suites import run_suite, suite_names


def _env_float(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return float(raw)
    except ValueError:
        raise SystemExit("invalid %s=%r (expected a number)" % (name, raw))


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit("invalid %s=%r (expected an integer)" % (name, raw))


def build_arg_parser():
    top = argparse.ArgumentParser(
        prog="qdeform",
        description="exact verification engine for rank-2 q-deformed "
                    "algebras",
    )
    sub = top.add_subparsers(dest="verb", required=True)

    p_norm = sub.add_parser(
        "normalize", help="rewrite an expression to normal form"
    )
    p_norm.add_argument("--algebra", required=True,
                        choices=catalog_names(), metavar="NAME")
    p_norm.add_argument("--unicode", action="store_true",
                        help="use display names for generators")
    p_norm.add_argument("expression")

    p_check = sub.add_parser("check", help="run a verification suite")
    p_check.add_argument("--suite", default="all", choices=suite_names(),
                         metavar="SUITE")
    p_check.add_argument("--q0", type=float,
                         default=_env_float("QD_Q0", 0.7))
    p_check.add_argument("--dim", type=int, default=_env_int("QD_DIM", 16))
    p_check.add_argument("--degree", type=int, default=2,
                         help="word-length bound for coalgebra checks")
    p_check.add_argument("--json", action="store_true",
                         help="emit the machine-readable report")

    p_rep = sub.add_parser(
        "rep", help="export Fock matrices for an oscillator algebra"
    )
    p_rep.add_argument("--algebra", required=True,
                       choices=("osc_q", "osc_q_qinv", "osc_alpha",
                                "osc_A"),
                       metavar="NAME")
    p_rep.add_argument("--q0", type=float, default=_env_float("QD_Q0", 0.7))
    p_rep.add_argument("--dim", type=int, default=_env_int("QD_DIM", 16))
    p_rep.add_argument("--json", action="store_true")

    p_cat = sub.add_parser("catalog", help="list or show presentations")
    p_cat.add_argument("name", nargs="?", choices=catalog_names(),
                       metavar="NAME")
    p_cat.add_argument("--json", action="store_true")

    p_pair = sub.add_parser(
        "pair", help="dual pairing of an L-functional with an expression"
    )
    p_pair.add_argument("--sign", required=True, choices=("+", "-"))
    p_pair.add_argument("--row", required=True, type=int, choices=(1, 2))
    p_pair.add_argument("--col", required=True, type=int, choices=(1, 2))
    p_pair.add_argument("expression")
    return top


def _cmd_normalize(args):
    pres = build_presentation(args.algebra)
    e = parse_expression(args.expression, pres.generators)
    nf = pres.normalize(e)
    print(format_element(nf, pres, unicode_names=args.unicode))
    return 0


def _cmd_check(args):
    report = run_suite(args.suite, q0=args.q0, dim=args.dim,
                       degree=args.degree)
    validate_report(report)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(render_text(report))
    return 0 if report["passed"] else 1


def _matrix_export(mat):
    return [
        [[float(z.real), float(z.imag)] for z in row]
        for row in np.asarray(mat, dtype=complex)
    ]


def _cmd_rep(args):
    rep = fock_rep(args.algebra, args.dim, args.q0)
    out = {
        "algebra": args.algebra,
        "dim": rep["dim"],
        "q0": rep["q0"],
        "basis": ["|%d>" % n for n in range(rep["dim"])],
        "generators": {
            g: _matrix_export(m) for g, m in rep["matrices"].items()
        },
    }
    if args.json:
        print(json.dumps(out))
        return 0
    print("algebra %s on a %d-dimensional Fock space at q0=%g"
          % (args.algebra, args.dim, args.q0))
    for g, m in rep["matrices"].items():
        print("-- %s --" % g)
        with np.printoptions(precision=6, suppress=True, linewidth=120):
            print(np.asarray(m))
    return 0


def _cmd_catalog(args):
    if args.name is None:
        if args.json:
            print(json.dumps(catalog_names()))
            return 0
        for name in catalog_names():
            pres = build_presentation(name)
            print("%-18s %2d generators  %3d rules"
                  % (name, len(pres.generators), len(pres.rules)))
        return 0
    pres = build_presentation(args.name)
    if args.json:
        print(json.dumps(presentation_to_json(pres), indent=2))
        return 0
    print("presentation %s" % pres.name)
    print("generators:", " ".join(pres.generators))
    for lhs, rhs in pres.rules.items():
        print("  %s -> %s"
              % ("*".join(lhs), format_element(rhs, pres)))
    return 0


def _cmd_pair(args):
    glq2 = build_presentation("glq2")
    e = parse_expression(args.expression, glq2.generators)
    val = pairing_element(args.sign, args.row - 1, args.col - 1, e)
    print(str(val))
    return 0


_DISPATCH = {
    "normalize": _cmd_normalize,
    "check": _cmd_check,
    "rep": _cmd_rep,
    "catalog": _cmd_catalog,
    "pair": _cmd_pair,
}


def main(argv=None):
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.verb](args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2
    except (RewriteBudgetExceeded, ExponentOverflow) as exc:
        print("computation aborted: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
