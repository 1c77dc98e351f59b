"""``ghwforge`` command line.

Exit codes: 0 success / feasible / counterexample found, 1 error or failed
verification, 2 infeasible, 3 no counterexample within the trial budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import kernels
from .codes import check_row_zero_sets, min_distance, min_weight_codewords, weight_hierarchy
from .errors import GHWForgeError
from .families import cubic_line_code, code_points, reed_muller_1, reed_solomon
from .field import field_new, field_of_order
from .formats import dumps, load_code, load_curve, load_sets, write_json
from .harness import MODES, FalsifyConfig, Reproduction, falsify, reverify
from .sets import check_mode
from .solver import exhaustive_oracle, solve_support_constrained

EXIT_OK, EXIT_ERROR, EXIT_INFEASIBLE, EXIT_NOT_FOUND = 0, 1, 2, 3


def _emit(obj, out: str | None) -> None:
    if out:
        write_json(out, obj)
    sys.stdout.write(dumps(obj))


def cmd_gf_info(args) -> int:
    spec = field_new(args.p, args.m)
    info = spec.to_json() | {"q": spec.q, "generator": spec.generator, "backend": kernels.backend()}
    print(spec)
    sys.stdout.write(dumps(info))
    return EXIT_OK


def cmd_code_ghw(args) -> int:
    C = load_code(args.code)
    d = weight_hierarchy(C, args.method)
    print(" ".join(map(str, d.d)))
    sys.stdout.write(dumps({"hierarchy": list(d.d), "method": args.method}))
    return EXIT_OK


def cmd_code_mindist(args) -> int:
    C = load_code(args.code)
    d1 = min_distance(C)
    _, words = min_weight_codewords(C)
    print(d1)
    sys.stdout.write(dumps({"d": d1, "min_weight_words": len(words)}))
    return EXIT_OK


def cmd_code_zero_sets(args) -> int:
    C = load_code(args.code)
    report = check_row_zero_sets(C)
    sys.stdout.write(dumps(report.to_json()))
    return EXIT_OK if report.passed else EXIT_ERROR


def cmd_sets_check(args) -> int:
    S = load_sets(args.sets)
    d = None
    if args.mode != "mds":
        if not args.code:
            raise GHWForgeError(f"mode {args.mode} needs --code for the weight hierarchy")
        d = weight_hierarchy(load_code(args.code))
    report = check_mode(S, args.mode, d)
    sys.stdout.write(dumps(report.to_json()))
    return EXIT_OK if report.passed else EXIT_ERROR


def cmd_solve(args) -> int:
    C = load_code(args.code)
    S = load_sets(args.sets)
    outcome = solve_support_constrained(C, S)
    result = outcome.to_json()
    if args.oracle:
        ref = exhaustive_oracle(C, S)
        result["oracle"] = ref.status
        if ref.status != outcome.status:
            sys.stdout.write(dumps(result))
            print("solver and oracle disagree", file=sys.stderr)
            return EXIT_ERROR
    _emit(result, args.out)
    return EXIT_OK if outcome.status == "feasible" else EXIT_INFEASIBLE


def cmd_construct(args) -> int:
    if args.family == "rs":
        spec = field_of_order(args.q)
        C = reed_solomon(spec, list(range(args.n)), args.k)
    elif args.family == "rm1":
        C = reed_muller_1(field_of_order(args.q), args.m)
    else:
        if not args.curve:
            raise GHWForgeError("construct cubic needs --curve")
        cubic = load_curve(args.curve)
        C = cubic_line_code(cubic.spec, cubic, code_points(cubic.spec, cubic))
    _emit(C.to_json(), args.out)
    return EXIT_OK


def cmd_paper_verify(args) -> int:
    def show(check):
        print(check.line(), file=sys.stderr)

    report = Reproduction(seed=args.seed).run(show)
    if args.out:
        write_json(args.out, report.to_json())
    bad = report.first_failure()
    if bad is not None:
        print(f"first failing check: {bad.name}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


def _falsify_code(args):
    if args.code:
        return load_code(args.code)
    fam = args.family
    if fam == "rs":
        return reed_solomon(field_of_order(args.q), list(range(args.n)), args.k)
    if fam == "rm1":
        return reed_muller_1(field_of_order(args.q), args.m)
    if fam == "elliptic":
        from .families import elliptic_example_f4

        return elliptic_example_f4()[0]
    raise GHWForgeError("falsify needs --code or --family")


def cmd_falsify(args) -> int:
    config = FalsifyConfig(_falsify_code(args), trials=args.trials, seed=args.seed, mode=args.mode)
    cex = falsify(config)
    if cex is None:
        sys.stdout.write(dumps({"found": False, "seed": config.seed, "trials": config.trials, "mode": config.mode}))
        return EXIT_NOT_FOUND
    if not reverify(config.code, cex, config.mode):
        print("counterexample failed re-verification", file=sys.stderr)
        return EXIT_ERROR
    _emit({"found": True} | cex.to_json(config), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ghwforge", description="Weight hierarchies and support-constrained generator matrices.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    gf = sub.add_parser("gf").add_subparsers(dest="sub", required=True)
    p = gf.add_parser("info", help="field parameters and canonical modulus")
    p.add_argument("p", type=int)
    p.add_argument("m", type=int, nargs="?", default=1)
    p.set_defaults(func=cmd_gf_info)

    code = sub.add_parser("code").add_subparsers(dest="sub", required=True)
    p = code.add_parser("ghw", help="weight hierarchy d_1..d_k")
    p.add_argument("code")
    p.add_argument("--method", choices=("auto", "subcode", "zeroset"), default="auto")
    p.set_defaults(func=cmd_code_ghw)
    p = code.add_parser("mindist", help="minimum distance")
    p.add_argument("code")
    p.set_defaults(func=cmd_code_mindist)
    p = code.add_parser("check-thm21", help="row zero sets of the stored generator obey the GHW bound")
    p.add_argument("code")
    p.set_defaults(func=cmd_code_zero_sets)

    sets = sub.add_parser("sets").add_subparsers(dest="sub", required=True)
    p = sets.add_parser("check", help="gate a subset system")
    p.add_argument("sets")
    p.add_argument("--mode", choices=MODES + ("card", "card+ghw"), default="ghw")
    p.add_argument("--code", help="code file (needed for ghw modes)")
    p.set_defaults(func=cmd_sets_check)

    p = sub.add_parser("solve", help="generator matrix with prescribed zeros")
    p.add_argument("code")
    p.add_argument("sets")
    p.add_argument("--oracle", action="store_true", help="cross-check with brute force")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("construct", help="build a family code")
    p.add_argument("family", choices=("rs", "rm1", "cubic"))
    p.add_argument("--q", type=int, default=7)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--curve", help="curve file for the cubic family")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    paper = sub.add_parser("paper").add_subparsers(dest="sub", required=True)
    p = paper.add_parser("verify", help="run the reproduction suite")
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--out")
    p.set_defaults(func=cmd_paper_verify)

    p = sub.add_parser("falsify", help="seeded counterexample search")
    p.add_argument("--code")
    p.add_argument("--family", choices=("rs", "rm1", "elliptic"))
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--mode", choices=MODES + ("card+ghw",), default="ghw")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_falsify)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GHWForgeError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
