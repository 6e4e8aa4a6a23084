"""Command-line surface.

Subcommands: compute, family, a1-poly, find-s, cohomology, verify.  Every
numeric field in JSON/CSV output is an exact rational string 'num/den';
decimal renderings appear only alongside the exact values when --approx is
given.  Output is deterministic: identical config gives byte-identical
output.

Exit codes: 0 success, 1 invalid parameters or usage, 2 internal
consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .invariants import (
    AffinityViolation,
    FamilyParams,
    InvalidParams,
    a1_poly_in_s,
    family_scan,
    find_good_s,
    relative_eta,
)
from .verify import run_paper_suite
from .zcohomology import cohomology_Mbar, h4_M_order

CSV_COLUMNS = ["k", "c", "s", "t", "a_value", "eta_rel", "A0", "A1", "sign_convention"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="etainv",
        description="Exact relative eta-invariants for circle-bundle quotient families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, need_t=False):
        p.add_argument("-k", type=int, required=True, help="half-dimension parameter, k >= 2")
        p.add_argument("-c", type=int, required=True, help="twisting parameter, odd")
        p.add_argument("-s", type=int, required=True, help="Euler class u-coefficient, even nonzero")
        if need_t:
            p.add_argument("-t", type=int, required=True, help="Euler class v-coefficient, odd, coprime to s")
        p.add_argument("--order", type=int, default=None, help="series truncation override (default 4k+2)")
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--output", default=None, help="output path (default: stdout)")
        p.add_argument("--approx", action="store_true", help="add decimal renderings alongside exact values")

    p = sub.add_parser("compute", help="one eta report for (k, c, s, t)")
    add_common(p, need_t=True)

    p = sub.add_parser("family", help="sweep t over a range, report distinct count")
    add_common(p)
    p.add_argument("--t-min", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--t-step", type=int, default=2)

    p = sub.add_parser("a1-poly", help="the degree-one coefficient as a polynomial in s")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--output", default=None)

    p = sub.add_parser("find-s", help="filter candidate s values with A1(s) != 0")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--s-candidates", required=True, help="comma-separated even nonzero integers")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--output", default=None)

    p = sub.add_parser("cohomology", help="integer cohomology table of the bundle total space")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--output", default=None)

    p = sub.add_parser("verify", help="run the built-in verification suite")
    p.add_argument("--suite", choices=("paper",), default="paper")

    return parser


def _emit(text: str, output: str | None):
    if output is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(output, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


def _report_rows_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: row.get(key, "") for key in CSV_COLUMNS})
    return buf.getvalue()


def _report_text(d: dict) -> str:
    lines = [f"{key} = {value}" for key, value in d.items()]
    return "\n".join(lines)


def _cmd_compute(args) -> int:
    params = FamilyParams(k=args.k, c=args.c, s=args.s, t=args.t)
    report = relative_eta(params, args.order).to_dict(approx=args.approx)
    if args.format == "json":
        _emit(json.dumps(report, indent=2), args.output)
    elif args.format == "csv":
        _emit(_report_rows_csv([report]), args.output)
    else:
        _emit(_report_text(report), args.output)
    return 0


def _cmd_family(args) -> int:
    if args.t_step == 0 or args.t_max < args.t_min:
        raise InvalidParams("--t-min/--t-max/--t-step define an empty range")
    ts = list(range(args.t_min, args.t_max + 1, args.t_step))
    if not ts:
        raise InvalidParams("empty t range")
    result = family_scan(args.k, args.c, args.s, ts, args.order)
    d = result.to_dict(approx=args.approx)
    if args.format == "json":
        _emit(json.dumps(d, indent=2), args.output)
    elif args.format == "csv":
        rows = [row for row in d["rows"] if "error" not in row]
        _emit(_report_rows_csv(rows), args.output)
    else:
        lines = []
        for row in d["rows"]:
            if "error" in row:
                lines.append(f"t={row['t']}: INVALID ({row['error']})")
            else:
                lines.append(f"t={row['t']}: eta_rel = {row['eta_rel']}")
        lines.append(f"distinct_count = {d['distinct_count']}")
        _emit("\n".join(lines), args.output)
    return 0


def _cmd_a1_poly(args) -> int:
    poly = a1_poly_in_s(args.k)
    d = {"k": args.k, "variable": poly.variable, "coeffs": poly.to_strings()}
    if args.format == "json":
        _emit(json.dumps(d, indent=2), args.output)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["degree", "coeff"])
        for i, c in enumerate(poly.to_strings()):
            writer.writerow([i, c])
        _emit(buf.getvalue(), args.output)
    else:
        _emit(_report_text(d), args.output)
    return 0


def _cmd_find_s(args) -> int:
    try:
        candidates = [int(x) for x in args.s_candidates.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise InvalidParams(f"--s-candidates must be a comma list of integers: {exc}")
    good = find_good_s(args.k, candidates)
    d = {"k": args.k, "candidates": candidates, "good_s": good}
    if args.format == "json":
        _emit(json.dumps(d, indent=2), args.output)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["s", "a1_nonzero"])
        for s in candidates:
            writer.writerow([s, str(s in good).lower()])
        _emit(buf.getvalue(), args.output)
    else:
        _emit(_report_text(d), args.output)
    return 0


def _cmd_cohomology(args) -> int:
    table = cohomology_Mbar(args.k, args.s)
    d = {
        "k": args.k,
        "s": args.s,
        "h4_quotient_order": h4_M_order(args.s),
        "table": [g.to_dict() for g in table],
    }
    if args.format == "json":
        _emit(json.dumps(d, indent=2), args.output)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["degree", "free_rank", "torsion"])
        for degree, g in enumerate(table):
            writer.writerow([degree, g.free_rank, ";".join(str(x) for x in g.torsion)])
        _emit(buf.getvalue(), args.output)
    else:
        lines = [f"H^{degree} = {g}" for degree, g in enumerate(table)]
        lines.append(f"|H^4(quotient)| = {h4_M_order(args.s)}")
        _emit("\n".join(lines), args.output)
    return 0


def _cmd_verify(args) -> int:
    ok = run_paper_suite()
    return 0 if ok else 2


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "compute": _cmd_compute,
        "family": _cmd_family,
        "a1-poly": _cmd_a1_poly,
        "find-s": _cmd_find_s,
        "cohomology": _cmd_cohomology,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except InvalidParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AffinityViolation as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
