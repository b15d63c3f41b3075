"""Command-line surface.

Subcommands: seq, pk, charpoly, vfactors, conjectures, verify, gf, paths.
Exit codes: 0 = all requested checks pass, 1 = at least one check failed
(witness printed), 2 = usage error, 3 = resource cap exceeded.  Output is
deterministic; there is no randomized behavior anywhere and no seed flags.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from binsum.errors import ResourceCapError, UsageError
from binsum.exactalg import canonical_text, to_json_dict
from binsum.seqgen import (
    DEFAULT_PATH_CAP,
    a_closed_i1,
    a_sum,
    binom_floor,
    enumerate_path_set,
    pathweight_report,
)
from binsum import charlab, verify
from binsum.recurrence import _GF_DATA, _gf_series, pk_family

FORMATS = ("text", "json", "csv", "markdown")


def _emit_rows(rows: list[dict], fmt: str, out) -> None:
    if not rows:
        if fmt == "json":
            print("[]", file=out)
        return
    headers = list(rows[0].keys())
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=headers)
        writer.writeheader()
        writer.writerows(rows)
    elif fmt == "markdown":
        out.write("| " + " | ".join(headers) + " |\n")
        out.write("|" + "|".join("---" for _ in headers) + "|\n")
        for r in rows:
            out.write("| " + " | ".join(str(r[h]) for h in headers) + " |\n")
    else:
        widths = {h: max(len(h), *(len(str(r[h])) for r in rows)) for h in headers}
        out.write("  ".join(h.ljust(widths[h]) for h in headers).rstrip() + "\n")
        for r in rows:
            out.write("  ".join(str(r[h]).ljust(widths[h]) for h in headers).rstrip() + "\n")


def _print_poly(p, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(to_json_dict(p), out, indent=2)
        out.write("\n")
    else:
        out.write(canonical_text(p) + "\n")


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_seq(args, out) -> int:
    n_hi = args.n_to if args.n_to is not None else args.n
    rows = []
    if args.what == "binom":
        if args.k_from is None or args.k_to is None:
            raise UsageError("binom tables need --k-from and --k-to")
        for k in range(args.k_from, args.k_to + 1):
            rows.append({"m": args.m, "n": args.n, "k": k,
                         "value": binom_floor(args.m, args.n, k)})
    else:
        for n in range(args.n, n_hi + 1):
            if args.what == "a":
                val = a_sum(n, args.i, args.l, args.m)
            else:
                val = a_closed_i1(n, args.m)
            rows.append({"n": n, "value": canonical_text(val)})
    _emit_rows(rows, args.format, out)
    return 0


def _cmd_pk(args, out) -> int:
    source = {"closed": "closed-form"}.get(args.source, args.source)
    if source == "closed-form" and args.k is not None and args.m not in (2, 3):
        from binsum.recurrence import pk_closed

        _print_poly(pk_closed(args.n, args.m, args.k), args.format, out)
        return 0
    fam = pk_family(args.n, args.m, source)
    ks = [args.k] if args.k is not None else list(range(1, args.m))
    if len(ks) == 1 and args.format == "text":
        _print_poly(fam.p(ks[0]), args.format, out)
        return 0
    rows = [{"k": k, "provenance": fam.provenance,
             "poly": canonical_text(fam.p(k))} for k in ks]
    if args.format == "json":
        payload = [{"k": k, "provenance": fam.provenance,
                    "poly": to_json_dict(fam.p(k))} for k in ks]
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        _emit_rows(rows, args.format, out)
    return 0


def _cmd_charpoly(args, out) -> int:
    c = charlab.charpoly(args.m, args.k)
    _print_poly(c, args.format, out)
    return 0


def _cmd_vfactors(args, out) -> int:
    v = charlab.extract_v_factors(args.m)
    rows = []
    for k in range(args.m + 1):
        poly = v.get(k)
        rows.append({"k": k,
                     "degree": int(poly.degree) if poly is not None else "-",
                     "factor": canonical_text(poly) if poly is not None else "-"})
    _emit_rows(rows, args.format, out)
    return 0


def _cmd_conjectures(args, out) -> int:
    if args.m_hi >= 7 and not args.acknowledge_long_run:
        raise UsageError(
            "m >= 7 is a long run; pass --acknowledge-long-run to proceed")
    budget = args.time_budget
    if budget is None:
        env = os.environ.get("BINSUM_TIME_BUDGET")
        budget = float(env) if env else None
    reports = charlab.conjecture_scan(args.m_lo, args.m_hi, time_budget=budget)
    if args.format == "json":
        json.dump([charlab.report_to_dict(r) for r in reports], out, indent=2)
        out.write("\n")
    else:
        out.write(charlab.report_to_markdown(reports) + "\n")
        for r in reports:
            out.write(f"m={r.m}: {'PASS' if r.all_passed else 'FAIL'}"
                      f"{' (budget exceeded)' if r.budget_exceeded else ''}\n")
    if any(r.budget_exceeded for r in reports):
        return 3
    return 0 if all(r.all_passed for r in reports) else 1


def _cmd_verify(args, out) -> int:
    checks = ["schur", "gf", "pathweight", "oeis"] if args.check == "all" \
        else [args.check]
    kwargs = {}
    if args.n_max is not None:
        kwargs = {"n_max_schur": args.n_max, "n_max_gf": args.n_max,
                  "n_max_paths": args.n_max}
    results = verify.run_suite(checks, cap=args.cap, **kwargs)
    if args.format == "json":
        json.dump([r.to_dict() for r in results], out, indent=2)
        out.write("\n")
    elif args.format == "markdown":
        out.write(verify.suite_to_markdown(results) + "\n")
    else:
        rows = [{"check": r.check_id, "params": str(r.params), "status": r.status,
                 "witness": "" if r.witness is None else str(r.witness)}
                for r in results]
        _emit_rows(rows, args.format, out)
    return 1 if any(r.status == "fail" for r in results) else 0


_GF_NAMES = ("a2", "a3", "a2-odd", "p1", "p2", "p3", "r", "s", "b", "c")


def _cmd_gf(args, out) -> int:
    from binsum.exactalg import IntPoly, series_coeffs

    n = args.terms
    rows = []
    if args.which in ("a2", "a3", "a2-odd"):
        if args.i is None:
            raise UsageError(f"--which {args.which} needs --i")
        if args.which == "a2-odd":
            if args.i % 2 == 0:
                raise UsageError("the z=-1 specialization needs odd i")
            big_m = (args.i - 1) // 2
            fm = verify._fib_at_1_minus_x2(big_m)
            fm1 = verify._fib_at_1_minus_x2(big_m + 1)
            vals = series_coeffs(list(fm.coeffs),
                                 list((fm1 - fm.shifted(1)).coeffs), n)
        else:
            num, den = (verify._gf_m2_lists(args.i) if args.which == "a2"
                        else verify._gf_m3_lists(args.i))
            vals = series_coeffs(num, den, n)
    elif args.which in ("p1", "p2", "p3"):
        if args.m is None:
            raise UsageError(f"--which {args.which} needs --m")
        k = int(args.which[1])
        if args.m not in _GF_DATA or k not in [kk for kk, _, _ in _GF_DATA[args.m]]:
            raise UsageError(
                f"no printed generating function for p_{k} at m={args.m}")
        vals = list(_gf_series(args.m, k, n))
    elif args.which in ("r", "s", "b", "c"):
        x = IntPoly.variable("x")
        x3 = IntPoly.monomial(1, 3, "x")
        fams = {
            "r": ([1], [1, -1, IntPoly.zero("x"), x3]),
            "s": ([1], [1, 0, -x, -x3]),
            "b": ([1, x, x * x], [1, -1, IntPoly.zero("x"), x3]),
            "c": ([1, 1 - x, 2 * x * x], [1, 0, -x, -x3]),
        }
        num, den = fams[args.which]
        vals = series_coeffs(num, den, n)
    else:
        raise UsageError(f"unknown generating function {args.which!r}")
    for idx, val in enumerate(vals):
        rows.append({"n": idx, "coefficient": canonical_text(val)})
    _emit_rows(rows, args.format, out)
    return 0


def _cmd_paths(args, out) -> int:
    rep = pathweight_report(args.n, args.m, args.cap)
    enum = rep["enumeration"]
    if enum is None:
        raise ResourceCapError(
            f"enumeration for n={args.n} exceeds the cap {args.cap}")
    rows = [{
        "n": args.n,
        "m": args.m,
        "paths": enum.path_count,
        "weight": canonical_text(enum.poly),
        "formula": canonical_text(rep["formula"].poly),
        "formula_comparison": rep["status"],
    }]
    _emit_rows(rows, args.format, out)
    if args.list:
        for p in enumerate_path_set(args.n, args.m, args.cap).paths:
            out.write(p + "\n")
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binsum",
        description="Exact computations on floored binomial-sum sequences, "
                    "their recurrence polynomials, and conjecture scans.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("seq", help="binomial-sum tables")
    p.add_argument("--what", choices=("a", "a-closed", "binom"), default="a")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n-to", type=int, default=None)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k-from", type=int, default=None)
    p.add_argument("--k-to", type=int, default=None)
    add_format(p)
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("pk", help="the recurrence polynomial family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--source", choices=("newton", "oracle", "closed", "gf"),
                   default="newton")
    add_format(p)
    p.set_defaults(func=_cmd_pk)

    p = sub.add_parser("charpoly", help="characteristic polynomial of one cell")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser("vfactors", help="peeled common factors for one m")
    p.add_argument("--m", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_vfactors)

    p = sub.add_parser("conjectures", help="factorization conjecture scan")
    p.add_argument("--m-lo", type=int, default=2)
    p.add_argument("--m-hi", type=int, default=6)
    p.add_argument("--time-budget", type=float, default=None,
                   help="seconds; cells beyond the budget are skipped")
    p.add_argument("--acknowledge-long-run", action="store_true")
    add_format(p)
    p.set_defaults(func=_cmd_conjectures)

    p = sub.add_parser("verify", help="named verification checks")
    p.add_argument("--check", choices=("schur", "gf", "pathweight", "oeis", "all"),
                   default="all")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--cap", type=int, default=DEFAULT_PATH_CAP)
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gf", help="series expansion of a printed generating function")
    p.add_argument("--which", choices=_GF_NAMES, required=True)
    p.add_argument("--terms", type=int, default=10)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    add_format(p)
    p.set_defaults(func=_cmd_gf)

    p = sub.add_parser("paths", help="strip-confined lattice paths and weights")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_PATH_CAP)
    p.add_argument("--list", action="store_true")
    add_format(p)
    p.set_defaults(func=_cmd_paths)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args, sys.stdout)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceCapError as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
