"""Command-line front end.

Exit status: 0 when the analysis ran (mathematical verdicts live in the
report), 1 for usage errors, 2 for unreadable or malformed input files,
3 when an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .constructions import SearchConfig, counterexample_L0, paper_example_3_1, search_mdp
from .conv_code import (
    MODES,
    SIDES,
    ConvCode,
    OracleTooLarge,
    check_mdp_criterion,
    column_bound,
    column_distance,
    free_distance,
    mdp_index_sets,
    naive_row_degree_sum,
    right_kernel_generator,
    singleton_bound,
    sliding,
)
from .fileformat import MatrixFormatError, format_matrix, read_matrix
from .finite_field import GF, field_from_order
from .poly import Poly
from .poly_matrix import (
    METHODS,
    PolyMatrix,
    RankDeficientError,
    is_left_prime,
    is_row_reduced,
    max_minor_degree,
    row_reduce,
    smith,
)
from .theorems import corollary_audit, epsilon_condition, r_feasible_range, verify_sufficiency


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


class Scalar:
    """Tag for a scalar matrix so renderers know how to encode it."""

    def __init__(self, field: GF, M):
        self.field = field
        self.M = M


# --------------------------------------------------------------------------
# rendering
# --------------------------------------------------------------------------

def _elem_json(field: GF, c: int):
    return c if field.prime else list(field.to_vector(c))


def to_json(obj):
    if isinstance(obj, Poly):
        return [_elem_json(obj.field, c) for c in obj.coeffs]
    if isinstance(obj, PolyMatrix):
        return [[to_json(e) for e in row] for row in obj.entries]
    if isinstance(obj, Scalar):
        return [[_elem_json(obj.field, c) for c in row] for row in obj.M]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {k: to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json(v) for v in obj]
    return obj


def _text(obj, indent: str = "  ") -> str:
    if isinstance(obj, PolyMatrix):
        return "\n" + "\n".join(indent + "[" + ", ".join(str(e) for e in row) + "]" for row in obj.entries)
    if isinstance(obj, Scalar):
        f = obj.field
        fmt = (lambda c: str(c)) if f.prime else (lambda c: "(" + ",".join(map(str, f.to_vector(c))) + ")")
        return "\n" + "\n".join(indent + " ".join(fmt(c) for c in row) for row in obj.M)
    if isinstance(obj, dict):
        return "\n" + "\n".join(f"{indent}{k}: {_text(v, indent + '  ')}" for k, v in obj.items())
    if isinstance(obj, (list, tuple)):
        if any(isinstance(v, (PolyMatrix, dict)) for v in obj):
            return "".join(_text(v, indent) for v in obj)
        return ", ".join(_text(v, indent) for v in obj) if obj else "(none)"
    if obj is None:
        return "-"
    if isinstance(obj, bool):
        return "yes" if obj else "no"
    return str(obj)


def emit(report: dict, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(to_json(report), sort_keys=True, indent=2) + "\n")
    else:
        for key, value in report.items():
            out.write(f"{key}: {_text(value)}\n")


# --------------------------------------------------------------------------
# helpers
# --------------------------------------------------------------------------

def _verdict(v) -> dict:
    return {"holds": v.holds, "checked": v.checked, "first_failure": v.first_failure, "mode": v.mode}


def _code(M: PolyMatrix, side: str) -> ConvCode:
    return ConvCode(side, M)


def _nk(M: PolyMatrix, side: str) -> tuple[int, int]:
    return M.cols, (M.rows if side == "generator" else M.cols - M.rows)


def _sufficiency(rep) -> dict:
    return {
        "r": rep.r,
        "S": rep.S,
        "shape": rep.shape,
        "rank": rep.rank,
        "rank_full": rep.rank_full,
        "left_prime_confirmed": rep.left_prime_confirmed,
        "implication_ok": rep.implication_ok,
        "witness": rep.witness,
    }


def _audit(a) -> dict:
    return {
        "n": a.n,
        "k": a.k,
        "delta": a.delta,
        "side": a.side,
        "L": a.L,
        "criterion": _verdict(a.criterion),
        "criterion_literal": _verdict(a.criterion_literal),
        "divisible": a.divisible,
        "sufficiency": _sufficiency(a.sufficiency) if a.sufficiency else None,
        "witness_found": a.witness_found,
        "witness_r": a.witness_r,
        "witness_S": a.witness_S,
        "row_reduced": a.row_reduced,
        "left_prime": a.left_prime,
        "degree": a.degree,
        "degree_matches": a.degree_matches,
        "passed": a.passed,
    }


def _parse_rows(text: str | None):
    if text is None:
        return None
    try:
        return tuple(int(s) for s in text.split(",") if s.strip())
    except ValueError:
        raise UsageError(f"--rows expects comma-separated integers, got {text!r}") from None


def _field(q: int, modulus) -> GF:
    try:
        return field_from_order(q, modulus)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def cmd_degree(args, M):
    side = args.side
    report = {"side": side}
    report["n"], report["k"] = _nk(M, side)
    try:
        report["degree"] = _code(M, side).degree
    except RankDeficientError:
        report["degree"] = None
        report["rank_deficient"] = True
    report["row_degree_sum"] = int(naive_row_degree_sum(M))
    report["max_minor_degree"] = int(max_minor_degree(M))
    try:
        report["left_prime"] = is_left_prime(M)
    except RankDeficientError:
        report["left_prime"] = None
    report["row_reduced"] = is_row_reduced(M)
    return report


def cmd_leftprime(args, M):
    try:
        return {"method": args.method, "left_prime": is_left_prime(M, args.method), "rank_deficient": False}
    except RankDeficientError:
        return {"method": args.method, "left_prime": None, "rank_deficient": True}


def cmd_rowreduce(args, M):
    rr = row_reduce(M)
    return {"R": rr.R, "U": rr.U, "row_degrees": list(rr.row_degrees), "row_degree_sum": sum(rr.row_degrees)}


def cmd_smith(args, M):
    S = smith(M)
    return {"factors": list(S.factors), "U": S.U, "D": S.D, "V": S.V}


def cmd_kernel(args, M):
    G = right_kernel_generator(M)
    return {"generator": G, "file": format_matrix(G)}


def cmd_sliding(args, M):
    Sm = sliding(M, args.side, args.j)
    return {"side": args.side, "j": args.j, "shape": Sm.shape, "matrix": Scalar(M.field, Sm.base)}


def cmd_mdp(args, M):
    side = args.side
    n, k = _nk(M, side)
    j = args.j
    if j is None:
        j = _code(M, side).params.L
    verdicts = {mode: check_mdp_criterion(M, side, j, mode) for mode in MODES}
    counts = {mode: sum(1 for _ in mdp_index_sets(side, j, n, k, mode)) for mode in MODES}
    main = verdicts[args.mode]
    return {
        "side": side,
        "j": j,
        "mode": args.mode,
        "holds": main.holds,
        "checked": main.checked,
        "first_failure": main.first_failure,
        "index_sets": counts,
        "verdicts": {mode: _verdict(v) for mode, v in verdicts.items()},
    }


def cmd_coldist(args, M):
    code = _code(M, args.side)
    report = {"j": args.j, "bound": column_bound(code.n, code.k, args.j)}
    try:
        report["column_distance"] = column_distance(code, args.j)
        report["oracle_too_large"] = False
    except OracleTooLarge as exc:
        report["column_distance"] = None
        report["oracle_too_large"] = True
        report["message"] = str(exc)
    return report


def cmd_profile(args, M):
    code = _code(M, args.side)
    L = code.params.L
    bounds = [column_bound(code.n, code.k, j) for j in range(L + 1)]
    report = {"degree": code.degree, "L": L, "bounds": bounds}
    try:
        prof = [column_distance(code, j) for j in range(L + 1)]
        report.update(profile=prof, mdp=prof == bounds, oracle_too_large=False)
    except OracleTooLarge as exc:
        report.update(profile=None, mdp=None, oracle_too_large=True, message=str(exc))
    return report


def cmd_freedist(args, M):
    code = _code(M, args.side)
    report = {"degree": code.degree, "singleton_bound": singleton_bound(code.n, code.k, code.degree)}
    try:
        fd = free_distance(code, args.cap)
        report.update(value=fd.value, certified=fd.certified, profile=list(fd.profile), oracle_too_large=False)
    except OracleTooLarge as exc:
        report.update(value=None, certified=False, profile=None, oracle_too_large=True, message=str(exc))
    return report


def cmd_verify(args, M):
    S = _parse_rows(args.rows)
    if args.r is not None:
        rep = verify_sufficiency(M, args.side, args.r, S, args.delta)
        return _sufficiency(rep)
    if S is not None:
        raise UsageError("--rows requires --r")
    return _audit(corollary_audit(M, args.side, args.n, args.k, args.delta))


def cmd_rrange(args):
    rng = r_feasible_range(args.n, args.k, args.delta, args.side)
    return {
        "lower": rng.lower,
        "upper": rng.upper,
        "rational_feasible": rng.rational_feasible,
        "integer_feasible": rng.integer_feasible,
        "shape_lower": rng.shape_lower,
        "epsilon_condition": epsilon_condition(args.n, args.k, args.delta, args.side),
    }


def cmd_counterexample(args):
    ce = counterexample_L0(args.n, args.k, args.delta, _field(args.q, None), args.side)
    return {
        "side": ce.side,
        "n": ce.n,
        "k": ce.k,
        "delta": ce.delta,
        "matrix": ce.matrix,
        "criterion": _verdict(ce.criterion),
        "left_prime": ce.left_prime,
        "degree": ce.degree,
        "vanishes_at_one": ce.vanishes_at_one,
        "refutes": ce.refutes,
    }


def cmd_search(args):
    cfg = SearchConfig(args.n, args.k, args.delta, args.q, strategy=args.strategy, budget=args.budget, seed=args.seed)
    res = search_mdp(cfg)
    return {
        "candidates": res.candidates,
        "examined": res.examined,
        "truncated": res.truncated,
        "hits": [h.matrix for h in res.hits],
        "count": len(res.hits),
    }


def cmd_example(args):
    e = paper_example_3_1()
    return {
        "H": e.H,
        "H_tilde": e.H_tilde,
        "degree": e.degree,
        "row_degree_sum_H": e.row_degree_sum_H,
        "max_minor_degree_H": e.max_minor_degree_H,
        "H_left_prime": e.H_left_prime,
        "H_row_reduced": e.H_row_reduced,
        "H0_full_rank": e.H0_full_rank,
        "H_tilde_left_prime": e.H_tilde_left_prime,
        "H_tilde_row_reduced": e.H_tilde_row_reduced,
        "same_code": e.same_code,
    }


FILE_COMMANDS = {
    "degree": cmd_degree,
    "leftprime": cmd_leftprime,
    "rowreduce": cmd_rowreduce,
    "smith": cmd_smith,
    "kernel": cmd_kernel,
    "sliding": cmd_sliding,
    "mdp": cmd_mdp,
    "coldist": cmd_coldist,
    "profile": cmd_profile,
    "freedist": cmd_freedist,
    "verify": cmd_verify,
}

PLAIN_COMMANDS = {
    "rrange": cmd_rrange,
    "counterexample": cmd_counterexample,
    "search": cmd_search,
    "example-3-1": cmd_example,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = _Parser(prog="mdpconv", description="MDP convolutional code toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def file_cmd(name, help_text, side_default="parity", side_required=False):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("file", help="matrix file")
        if side_required:
            p.add_argument("--side", choices=SIDES, required=True)
        elif side_default is not None:
            p.add_argument("--side", choices=SIDES, default=side_default)
        return p

    file_cmd("degree", "code degree and row-degree diagnostics")
    p = file_cmd("leftprime", "left primeness test", side_default=None)
    p.add_argument("--method", choices=METHODS, default="minor_gcd")
    file_cmd("rowreduce", "row-reduced equivalent matrix", side_default=None)
    file_cmd("smith", "Smith normal form", side_default=None)
    file_cmd("kernel", "generator matrix of the right kernel", side_default=None)
    p = file_cmd("sliding", "truncated sliding matrix", side_required=True)
    p.add_argument("--j", type=int, required=True)
    p = file_cmd("mdp", "MDP minor criterion", side_required=True)
    p.add_argument("--j", type=int, default=None, help="window (default: L of the code)")
    p.add_argument("--mode", choices=MODES, default="structural")
    p = file_cmd("coldist", "brute-force column distance")
    p.add_argument("--j", type=int, required=True)
    file_cmd("profile", "column distance profile d_0..d_L")
    p = file_cmd("freedist", "free distance from growing column distances")
    p.add_argument("--cap", type=int, default=None, help="largest window to examine")
    p = file_cmd("verify", "stacked-rank sufficiency test / full audit")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--rows", default=None, help="row subset S, e.g. 1,2")

    p = sub.add_parser("rrange", parents=[common], help="feasible stacking depths")
    for name in ("n", "k", "delta"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--side", choices=SIDES, required=True)

    p = sub.add_parser("counterexample", parents=[common], help="L = 0 counterexample")
    for name in ("n", "k", "delta", "q"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--side", choices=SIDES, default="parity")

    p = sub.add_parser("search", parents=[common], help="search MDP parity-check matrices")
    for name in ("n", "k", "delta", "q"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strategy", choices=("exhaustive", "random"), default="exhaustive")

    sub.add_parser("example-3-1", parents=[common], help="the (3,1) example over GF(2)")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command in FILE_COMMANDS:
            try:
                M = read_matrix(args.file)
            except MatrixFormatError as exc:
                print(f"mdpconv: {args.file}: {exc}", file=sys.stderr)
                return 2
            except OSError as exc:
                print(f"mdpconv: {exc}", file=sys.stderr)
                return 2
            report = FILE_COMMANDS[args.command](args, M)
        else:
            report = PLAIN_COMMANDS[args.command](args)
    except AssertionError as exc:
        print(f"mdpconv: internal invariant violated: {exc}", file=sys.stderr)
        return 3
    except (UsageError, ValueError) as exc:
        print(f"mdpconv: {exc}", file=sys.stderr)
        return 1
    emit(report, args.json, out)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
