"""Command-line front end.

Exit codes: 0 pass, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import os
import sys
from typing import Sequence

from . import combinatorics as comb
from .degeneration import BigradedCharacter, alpha_experiment, bigraded_character, degree_formula
from .fock import cocycle_sweep, current_identity_sweep, limit_check, limit_character_rhs
from .symfunc import frobenius_character, weight_multiplicity
from .wedge import admissible_sets, cyclic_closure, weight_of

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


# -- argument helpers ----------------------------------------------------------


def int_list(text: str) -> tuple:
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def resolve_xi(args) -> tuple:
    """Full r-vector form of xi from --xi or --signature/--s."""
    if args.xi is not None and args.signature is not None:
        raise UsageError("give either --xi or --signature, not both")
    if args.xi is None and args.signature is None:
        raise UsageError("one of --xi or --signature is required")
    parts = args.xi if args.xi is not None else args.signature
    r = args.r if args.r is not None else len(parts)
    if r < 1 or len(parts) > r:
        raise UsageError(f"{parts} does not fit r={r}")
    xi = tuple(parts) + (0,) * (r - len(parts))
    if args.signature is not None:
        if any(p < 0 for p in parts) or not comb.is_dominant(xi):
            raise UsageError(f"signature {parts} is not a partition")
        xi = tuple(x + args.s for x in xi)
    elif not comb.is_dominant(xi):
        raise UsageError(f"{xi} is not dominant")
    return xi


def split_twist(xi: Sequence[int]) -> tuple:
    """xi = part + shift*tau with part a partition vector (last entry 0)."""
    shift = xi[-1]
    return tuple(x - shift for x in xi), shift


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("WEYLPARK_JOBS", "1")))
    except ValueError:
        return 1


# -- output ------------------------------------------------------------------------


def _rows_to_csv(rows: list) -> str:
    buf = io.StringIO()
    keys = list(rows[0]) if rows else []
    writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (" ".join(map(str, v)) if isinstance(v, (list, tuple)) else v) for k, v in row.items()})
    return buf.getvalue()


def _pretty(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key == "schema":
            continue
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            lines.extend("  " + "  ".join(f"{k}={v}" for k, v in row.items()) for row in value)
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def emit(report: dict, fmt: str, output: str | None, table: str | None = None) -> None:
    if fmt == "json":
        text = json.dumps(report, indent=2, sort_keys=False) + "\n"
    elif fmt == "csv":
        rows = report.get(table) if table else None
        if rows is None:
            rows = [{"key": k, "value": json.dumps(v)} for k, v in report.items()]
        text = _rows_to_csv(rows)
    else:
        text = _pretty(report)
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(kind: str, **fields) -> dict:
    return {"schema": f"weylpark.{kind}/{SCHEMA_VERSION}", **fields}


# -- subcommands ---------------------------------------------------------------------


def cmd_dims(args) -> int:
    xi = resolve_xi(args)
    part, shift = split_twist(xi)
    N = part[0] if args.N is None else args.N
    if N < part[0]:
        raise UsageError(f"N must be at least xi_1 = {part[0]}")
    count = len(admissible_sets(part))
    dim = cyclic_closure(part, N).dim
    values = [count, dim]
    catalan = None
    if all(x == 0 for x in part[1:]):
        catalan = comb.catalan_dimension(part[0], len(part))
        values.append(catalan)
    passed = len(set(values)) == 1
    emit(
        _report("dims", xi=list(xi), r=len(xi), N=N, admissible_sets=count, closure_dim=dim, catalan=catalan, passed=passed),
        args.format,
        args.output,
    )
    return 0 if passed else 1


def _frobenius_check(part: tuple, ch: BigradedCharacter) -> tuple:
    r = len(part)
    exp = frobenius_character(part, r)
    graded = ch.x_graded()
    diffs = []
    n = sum(part)
    for cut in itertools.combinations(range(n + r - 1), r - 1):
        bounds = (-1,) + cut + (n + r - 1,)
        eta = tuple(bounds[i + 1] - bounds[i] - 1 for i in range(r))
        want = weight_multiplicity(exp, eta)
        got = {i: d for (w, i), d in graded.items() if w == eta}
        if want != got:
            diffs.append({"weight": list(eta), "character": got, "frobenius": want})
    return not diffs, diffs


def cmd_char(args) -> int:
    xi = resolve_xi(args)
    part, shift = split_twist(xi)
    r = len(xi)
    N = part[0] if args.N is None else args.N
    if N < part[0]:
        raise UsageError(f"N must be at least xi_1 = {part[0]}")
    ch = bigraded_character(part, N)
    checks = []
    for name in args.check or []:
        if name == "symmetry":
            flat = ch.specialize()
            bad = [[i, j, d, flat.get((j, i), 0)] for (i, j), d in sorted(flat.items()) if flat.get((j, i), 0) != d]
            checks.append({"check": name, "passed": not bad, "diff": bad})
        elif name == "degree":
            want = degree_formula(part, r)
            checks.append({"check": name, "passed": ch.x_degree() == want, "max_x_degree": ch.x_degree(), "formula": want})
        elif name == "frobenius":
            ok, diffs = _frobenius_check(part, ch)
            checks.append({"check": name, "passed": ok, "diff": diffs})
        elif name == "nindep":
            other = bigraded_character(part, N + 1)
            diff = sorted(set(ch.data.items()) ^ set(other.data.items()))
            checks.append({"check": name, "passed": other == ch, "N": [N, N + 1], "diff": [list(d) for d in diff]})
    twisted = ch.shifted((shift,) * r)
    passed = all(c["passed"] for c in checks)
    report = _report(
        "character",
        xi=list(xi),
        r=r,
        N=N,
        dim=twisted.dim,
        entries=twisted.records(),
        checks=checks,
        passed=passed,
    )
    if args.format == "csv":
        text = twisted.to_csv()
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    else:
        emit(report, args.format, args.output)
    for c in checks:
        if not c["passed"]:
            print(f"check {c['check']} failed: {json.dumps(c)}", file=sys.stderr)
    return 0 if passed else 1


def cmd_parking(args) -> int:
    n = args.n
    if n < 0:
        raise UsageError("n must be non-negative")
    if args.rho is not None and args.xi is not None:
        raise UsageError("give either --rho or --xi")
    if args.xi is not None:
        rho = comb.rho_of_xi(args.xi)
    elif args.rho is not None:
        rho = comb.Partition(args.rho)
    else:
        rho = comb.Partition(range(n, 0, -1))
    if rho.size and len(rho) > n:
        raise UsageError(f"rho {tuple(rho)} has more than n={n} parts")
    functions = comb.enumerate_parking(n, rho)
    report = _report("parking", n=n, rho=list(rho), count=len(functions))
    if args.histogram:
        report["histogram"] = {str(k): v for k, v in comb.statistic_histogram(functions).items()}
    if args.orbits:
        report["orbits"] = [
            {"content": list(a), "size": size, "statistic": comb.sequence_statistic(a, rho)}
            for a, size in comb.orbit_decomposition(n, rho).items()
        ]
    if args.list:
        report["functions"] = [{"values": list(f), "statistic": f.statistic} for f in functions]
    report["passed"] = True
    emit(report, args.format, args.output, table="functions" if args.list else "orbits" if args.orbits else None)
    return 0


def cmd_coinvariant_bound(args) -> int:
    r = args.r
    if r < 1:
        raise UsageError("r must be positive")
    xi = (r,) + (0,) * (r - 1)
    ones = (1,) * r
    hsets = sum(1 for H in admissible_sets(xi) if weight_of(H, r) == ones)
    closure = cyclic_closure(xi, r)
    block = sum(d for (w, _), d in closure.block_dims().items() if w == ones)
    bound = (r + 1) ** (r - 1)
    passed = hsets == block == bound
    emit(_report("coinvariant", r=r, hsets=hsets, closure_weight_space=block, parking_count=bound, passed=passed), args.format, args.output)
    return 0 if passed else 1


def cmd_fock_verify(args) -> int:
    cocycle = cocycle_sweep(args.r, depth=min(args.depth, 2), samples=args.samples, seed=args.seed, jobs=args.jobs)
    current = current_identity_sweep(args.r, depth=args.depth, jobs=args.jobs)
    rows = [
        {"identity": "cocycle", "case": row["case"], "passed": row["status"] == "pass", "status": row["status"]}
        for row in cocycle["rows"]
    ] + [
        {"identity": "current", "case": f"j={row['j']} m={row['m']} n={row['charge']}", "passed": row["passed"], "status": f"{row['checked']} monomials"}
        for row in current["rows"]
    ]
    passed = cocycle["passed"] and current["passed"]
    report = _report(
        "verification",
        r=args.r,
        depth=args.depth,
        seed=args.seed,
        central_acts_by_one=cocycle["central_acts_by_one"],
        rows=rows,
        passed=passed,
    )
    emit(report, args.format, args.output, table="rows")
    return 0 if passed else 1


def cmd_limit_check(args) -> int:
    if args.D < 0 or args.Nmax < 1 or args.r < 1:
        raise UsageError("need D >= 0, Nmax >= 1, r >= 1")
    result = limit_check(args.n, args.r, args.Nmax, args.D)
    if not result["rows"]:
        raise UsageError("no N in 1..Nmax makes (n + N r) e_1 dominant")
    rhs = limit_character_rhs(args.n, args.r, args.D)
    rows = [
        {"N": row["N"], "agree": row["agree"], "stable": row["stable"],
         "mismatch": [{"weight": list(w), "x": i, "y": j, "lhs": a, "rhs": b} for (w, i, j), a, b in row["mismatch"]]}
        for row in result["rows"]
    ]
    report = _report(
        "limit",
        n=args.n,
        r=args.r,
        D=args.D,
        rhs=[{"weight": list(w), "x": i, "y": j, "coeff": c} for (w, i, j), c in sorted(rhs.items(), key=lambda kv: (kv[0][1], kv[0][2], kv[0][0]))],
        rows=rows,
        agree_from_N=result["agree_from_N"],
        passed=result["passed"],
    )
    emit(report, args.format, args.output, table="rhs")
    if not result["passed"]:
        last = rows[-1]
        print(f"no agreement at N={last['N']}: {json.dumps(last['mismatch'][:1])}", file=sys.stderr)
    return 0 if result["passed"] else 1


def cmd_alpha(args) -> int:
    if args.n < 0:
        raise UsageError("n must be non-negative")
    emit(_report("alpha", **alpha_experiment(args.n, args.s, args.r)), args.format, args.output)
    return 0


# -- parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weylpark", description="Weyl modules over matrix currents in two variables.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "pretty"], default="json")
    common.add_argument("--output", help="write to this file instead of stdout")

    xi_args = argparse.ArgumentParser(add_help=False)
    xi_args.add_argument("--xi", type=int_list, help="comma-separated parts of xi")
    xi_args.add_argument("--signature", type=int_list, help="partition lambda; xi = lambda + s*tau")
    xi_args.add_argument("--s", type=int, default=0, help="tau multiple used with --signature")
    xi_args.add_argument("--r", type=int, help="rank (defaults to the length of xi)")
    xi_args.add_argument("--N", type=int, help="truncation N (default xi_1)")

    p = sub.add_parser("dims", parents=[common, xi_args], help="dimension of V(xi, N) three ways")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("char", parents=[common, xi_args], help="bigraded character of V(xi)")
    p.add_argument("--check", action="append", choices=["symmetry", "degree", "frobenius", "nindep"])
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("parking", parents=[common], help="rho-parking functions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rho", type=int_list)
    p.add_argument("--xi", type=int_list, help="use rho(xi)")
    p.add_argument("--histogram", action="store_true")
    p.add_argument("--orbits", action="store_true")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_parking)

    p = sub.add_parser("coinvariant-bound", parents=[common], help="tau-weight space of V(r e_1) vs (r+1)^(r-1)")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_coinvariant_bound)

    p = sub.add_parser("fock-verify", parents=[common], help="cocycle and current-identity sweeps")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--samples", type=int, default=None, help="random sample size for cocycle checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.set_defaults(func=cmd_fock_verify)

    p = sub.add_parser("limit-check", parents=[common], help="finite characters vs the limit series")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--Nmax", type=int, default=3)
    p.add_argument("--D", type=int, default=2)
    p.set_defaults(func=cmd_limit_check)

    p = sub.add_parser("alpha", parents=[common], help="alpha_{n,s} image experiment (report only)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--r", type=int, default=2)
    p.set_defaults(func=cmd_alpha)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"weylpark {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"weylpark {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
