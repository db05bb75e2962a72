"""Command-line front end.

Exit status: 0 on success or a feasible system, 1 when a system is infeasible
or a verification check fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import chains, formats, matrices, snf, solver, subsets, verify

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _subset_arg(text):
    try:
        return subsets.parse_subset(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def cmd_rank(args, out):
    out.write(f"{subsets.rank(args.set)}\n")
    return EXIT_OK


def cmd_tableau(args, out):
    out.write(f"{subsets.tableau(args.set)}\n")
    return EXIT_OK


def cmd_chain(args, out):
    chain = chains.chain_of(args.set, args.v)
    if args.format == "json":
        out.write(json.dumps({"rank": chain.rank,
                              "members": [subsets.format_subset(F) for F in chain.members]}) + "\n")
    else:
        out.write(f"{chain}\n")
    return EXIT_OK


def cmd_decompose(args, out):
    if args.kind == "complement":
        dec = chains.complement_decompose(args.v)
    else:
        dec = chains.decompose(args.v)
    if args.format == "text":
        for chain in dec:
            out.write(f"{chain}\n")
    else:
        out.write(dec.to_json() + "\n")
    return EXIT_OK


def _build_matrix(args):
    kind = args.kind
    if kind == "r":
        if args.i is None:
            raise UsageError("matrix r needs --i (rows: full-rank i-sets, columns: t-sets)")
        return matrices.build_R(args.i, args.t, args.v)
    if kind == "q":
        if args.j is None:
            raise UsageError("matrix q needs --j")
        return matrices.build_Q(args.t, args.j, args.v, args.k)
    if args.k is None:
        raise UsageError(f"matrix {kind} needs --k")
    return matrices.BUILDERS[kind](args.t, args.k, args.v)


def _write_matrix(M, fmt, out, labels=True):
    if fmt == "json":
        out.write(formats.matrix_to_json(M) + "\n")
    elif fmt == "csv":
        out.write(formats.matrix_to_csv(M))
    else:
        out.write(formats.matrix_to_text(M, labels))


def cmd_matrix(args, out):
    _write_matrix(_build_matrix(args), args.format, out, not args.no_labels)
    return EXIT_OK


def cmd_snf(args, out):
    if args.input:
        with open(args.input) as fh:
            M = formats.matrix_from_text(fh.read())
    elif args.kind:
        if args.t is None or args.v is None:
            raise UsageError("snf --kind needs --t and --v")
        M = _build_matrix(args)
    else:
        raise UsageError("snf needs --input FILE or --kind KIND")
    result = snf.smith_normal_form(M)
    if args.u_out:
        with open(args.u_out, "w") as fh:
            fh.write(formats.matrix_to_text(result.u))
    if args.v_out:
        with open(args.v_out, "w") as fh:
            fh.write(formats.matrix_to_text(result.v))
    if args.format == "json":
        out.write(json.dumps({"d": list(result.d), "rank": result.rank}) + "\n")
    else:
        out.write("d = " + ",".join(str(x) for x in result.d) + "\n")
    return EXIT_OK


def cmd_solve(args, out):
    if (args.lam is None) == (args.b_file is None):
        raise UsageError("solve needs exactly one of --lambda or --b-file")
    if args.lam is not None:
        if args.lam < 1:
            raise UsageError("--lambda must be a positive integer")
        report = solver.signed_design(args.t, args.k, args.v, args.lam)
    else:
        with open(args.b_file) as fh:
            b, _ = formats.vector_from_text(fh.read())
        if any(not isinstance(x, int) for x in b):
            raise UsageError("right-hand side must be integral")
        report = solver.solve_integral(args.t, args.k, args.v, b)
    if args.format == "json":
        payload = {
            "feasible": report.feasible,
            "b_prime": [formats.format_number(x) for x in report.b_prime],
        }
        if report.feasible:
            payload["witness"] = list(report.witness)
            payload["labels"] = [subsets.format_subset(K) for K in report.labels]
        else:
            payload["violated_levels"] = list(report.violated_levels)
        out.write(json.dumps(payload) + "\n")
    elif report.feasible:
        out.write(formats.vector_to_text(report.witness, report.labels))
    else:
        for violation in report.violations:
            out.write(f"{violation}\n")
    return EXIT_OK if report.feasible else EXIT_FALSE


def cmd_verify(args, out):
    if args.v_max < 1 or args.v_max > chains.MAX_V:
        raise UsageError(f"--v-max must lie in 1..{chains.MAX_V}")
    results = verify.run_checks(args.v_max)
    out.write(verify.format_results(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankchains",
        description="Rank chains, inclusion matrices, Smith forms and signed designs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="rank of a subset")
    p.add_argument("set", type=_subset_arg, help='comma-separated subset, "" for the empty set')
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("tableau", help="two-row tableau of a subset")
    p.add_argument("set", type=_subset_arg)
    p.set_defaults(func=cmd_tableau)

    p = sub.add_parser("chain", help="rank chain through a subset of [v]")
    p.add_argument("set", type=_subset_arg)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("decompose", help="all rank chains of 2^[v]")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--kind", choices=["rank", "complement"], default="rank")
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.set_defaults(func=cmd_decompose)

    kinds = ["wtk", "wbar", "wunder", "r", "q", "a", "dbar", "dunder"]
    p = sub.add_parser("matrix", help="build an inclusion or diagonal matrix")
    p.add_argument("kind", choices=kinds)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--i", type=int, help="row level for kind r")
    p.add_argument("--j", type=int, help="column size for kind q")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--no-labels", action="store_true")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("snf", help="Smith normal form of a built or loaded matrix")
    p.add_argument("--kind", choices=kinds)
    p.add_argument("--input", help="matrix file in the text format")
    p.add_argument("--t", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--v", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--u-out", help="write the left transform here")
    p.add_argument("--v-out", help="write the right transform here")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("solve", help="integral solution of W_tk x = b")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int)
    p.add_argument("--b-file", help="right-hand side, one integer per line (C(v,t) lines)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check every identity for universes up to v-max")
    p.add_argument("--v-max", type=int, default=6)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
