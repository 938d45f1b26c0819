"""Command line interface.

    alexentropy analyze 5_2
    alexentropy analyze --coeffs 2,-5,2
    alexentropy sequence 3_1 --rmax 12
    alexentropy growth 5_2 --rmax 400 --plot-data growth.csv
    alexentropy table-check builtin

Exit codes: 0 success, 1 input error, 2 an exact identity failed.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from . import arch, branched, knotdata, padic
from .intervals import INF
from .polycore import IntPoly, content, normalize, validate_alexander

RECONCILE_TOL = 1e-9
DIGITS = 20


class InputError(Exception):
    pass


class IdentityFailure(Exception):
    pass


def _num(x) -> str:
    return x.context.nstr(x, DIGITS)


def _interval(iv) -> dict:
    return {"lo": _num(iv.lo), "hi": _num(iv.hi), "mid": _num(iv.mid)}


def _parse_coeffs(text: str) -> IntPoly:
    try:
        return normalize([int(x) for x in text.replace(" ", "").split(",") if x])
    except ValueError as exc:
        raise InputError(f"cannot parse coefficients {text!r}: {exc}") from None


def _resolve(args) -> tuple[str | None, IntPoly]:
    if getattr(args, "coeffs", None):
        return None, _parse_coeffs(args.coeffs)
    if not args.target:
        raise InputError("give a knot name or --coeffs")
    table = knotdata.builtin_table()
    if args.table:
        table = _load_table(args.table)
    try:
        rec = knotdata.lookup(args.target, table)
    except KeyError:
        raise InputError(f"unknown knot {args.target!r}") from None
    return rec.name, rec.poly


def _load_table(path):
    try:
        return knotdata.load_csv(path)
    except OSError as exc:
        raise InputError(str(exc)) from None
    except knotdata.KnotTableError as exc:
        raise InputError(f"{path}: {exc}") from None


def _knot_like(f: IntPoly):
    if sum(f.coeffs) not in (1, -1):
        raise InputError(f"{f}: Δ(1)={sum(f.coeffs)}, not a knot polynomial")


def analysis_document(name, f: IntPoly, precision: int) -> dict:
    report = validate_alexander(f)
    spectrum = padic.entropy_spectrum(f, precision)
    mahler = arch.mahler_measure(f, precision)
    free, witnesses = padic.finitely_generated_obstruction(f)
    certificate = None
    if content(f) == 1:
        cert = padic.leading_decomposition(f)
        certificate = {
            "holds": cert.holds,
            "pairs": [
                {"prime": p, "entropy_exponent": str(e), "leading_valuation": v}
                for p, (e, v) in sorted(cert.pairs.items())
            ],
        }
    gap = abs(spectrum.grand_total.mid - mahler.mid)
    return {
        "knot": name,
        "coefficients": list(f.coeffs),
        "polynomial": str(f),
        "precision": precision,
        "validation": {
            "value_at_one": report.value_at_one,
            "is_knot_like": report.is_knot_like,
            "is_reciprocal": report.is_reciprocal,
            "content": report.content,
            "messages": list(report.messages),
        },
        "entropy_spectrum": {
            "finite": [
                {"prime": p, "exponent": str(e.exponent), "value": _num(e.value.mid)}
                for p, e in sorted(spectrum.finite.items())
            ],
            "infinite": _interval(spectrum.entries[INF].value),
            "finite_total": _num(spectrum.finite_total.mid),
            "grand_total": _interval(spectrum.grand_total),
        },
        "mahler_measure": _interval(mahler),
        "reconciliation_gap": _num(gap),
        "leading_decomposition": certificate,
        "finitely_generated_obstruction": {"no_obstruction": free, "primes": witnesses},
        "all_roots_of_unity": arch.all_roots_of_unity(f),
    }


def _dump(doc, out):
    json.dump(doc, out, sort_keys=True, indent=2)
    out.write("\n")


def cmd_analyze(args, out) -> int:
    name, f = _resolve(args)
    doc = analysis_document(name, f, args.precision)
    _dump(doc, out)
    cert = doc["leading_decomposition"]
    if (cert is not None and not cert["holds"]) or float(doc["reconciliation_gap"]) >= RECONCILE_TOL:
        raise IdentityFailure(f"identity check failed for {f}")
    return 0


def cmd_sequence(args, out) -> int:
    name, f = _resolve(args)
    _knot_like(f)
    seq = branched.homology_sequence(f, args.rmax, workers=args.workers)
    if args.json:
        _dump({"knot": name, "coefficients": list(f.coeffs), "orders": list(seq.orders)}, out)
        return 0
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["r", "order"])
    for r, order in seq.items():
        w.writerow([r, order])
    return 0


def _parse_window(text, r_max):
    if text is None:
        return max(1, r_max // 2), r_max
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise InputError(f"window must look like lo:hi, got {text!r}") from None
    return lo, hi


def _write_plot_data(path, seq, mahler_mid):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["r", "log_order_over_r", "mahler_midpoint"])
        for r, order in seq.items():
            if order:
                w.writerow([r, repr(math.log(order) / r), _num(mahler_mid)])


def cmd_growth(args, out) -> int:
    name, f = _resolve(args)
    _knot_like(f)
    window = _parse_window(args.window, args.rmax)
    mahler = arch.mahler_measure(f, args.precision)
    seq = branched.homology_sequence(f, args.rmax, workers=args.workers)
    doc = {
        "knot": name,
        "coefficients": list(f.coeffs),
        "r_max": args.rmax,
        "mahler_reference": _interval(mahler),
    }
    period = branched.periodicity_check(f, args.rmax)
    if period.periodic:
        doc.update(periodic=True, period=period.period, cyclotomic_lcm=period.cyclotomic_lcm)
    else:
        try:
            report = branched.growth_estimate(seq, window, mahler=mahler)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        doc.update(
            periodic=False,
            window=list(report.window),
            window_median=repr(report.window_median),
            deviation=repr(report.deviation),
            finite_orders_in_window=len(report.per_r),
        )
    if args.plot_data:
        _write_plot_data(args.plot_data, seq, mahler.mid)
    _dump(doc, out)
    return 0


def _check_record(rec, precision):
    f = rec.poly
    row = {"name": rec.name, "coefficients": list(f.coeffs), "leading": f.leading}
    cert = padic.leading_decomposition(f)
    spectrum = padic.entropy_spectrum(f, precision)
    mahler = arch.mahler_measure(f, precision)
    gap = abs(spectrum.grand_total.mid - mahler.mid)
    row.update(
        leading_identity=cert.holds,
        mahler=_num(mahler.mid),
        total_entropy=_num(spectrum.grand_total.mid),
        gap=_num(gap),
        reconciled=bool(gap < RECONCILE_TOL),
    )
    row["ok"] = row["leading_identity"] and row["reconciled"]
    return row


def cmd_table_check(args, out) -> int:
    source = args.source or "builtin"
    records = knotdata.builtin_table() if source == "builtin" else _load_table(source)
    if not records:
        raise InputError("no records")
    rows = [_check_record(rec, args.precision) for rec in records]
    if args.json:
        _dump({"source": source, "records": rows}, out)
    elif args.csv:
        fields = ["name", "leading", "leading_identity", "mahler", "total_entropy", "gap", "ok"]
        w = csv.DictWriter(out, fields, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    else:
        out.write(f"{'knot':<8}{'a_n':>5}  {'leading':<8}{'m(f)':<24}{'gap':<12}status\n")
        for row in rows:
            out.write(
                f"{row['name']:<8}{row['leading']:>5}  "
                f"{'ok' if row['leading_identity'] else 'FAIL':<8}"
                f"{row['mahler'][:22]:<24}{float(row['gap']):<12.1e}"
                f"{'pass' if row['ok'] else 'FAIL'}\n"
            )
        passed = sum(r["ok"] for r in rows)
        out.write(f"{passed}/{len(rows)} knots pass\n")
    if not all(r["ok"] for r in rows):
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alexentropy",
        description="Adelic entropy invariants of Alexander polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def target_args(p):
        p.add_argument("target", nargs="?", help="knot name, e.g. 5_2")
        p.add_argument("--coeffs", help="ascending coefficients, e.g. 2,-3,2")
        p.add_argument("--table", help="CSV knot table to resolve names against")
        p.add_argument("--precision", type=int, default=arch.DEFAULT_PRECISION)

    p = sub.add_parser("analyze", help="entropy spectrum, Mahler measure, identities")
    target_args(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sequence", help="orders |H_1(X_r)| for r = 1..rmax as CSV")
    target_args(p)
    p.add_argument("--rmax", type=int, default=branched.DEFAULT_RMAX)
    p.add_argument("--workers", type=int, default=None)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true", help="CSV output (default)")
    fmt.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("growth", help="growth of log|H_1(X_r)|/r against m(f)")
    target_args(p)
    p.add_argument("--rmax", type=int, default=branched.DEFAULT_RMAX)
    p.add_argument("--window", help="lo:hi (default rmax/2:rmax)")
    p.add_argument("--plot-data", help="write r,log_order_over_r,mahler_midpoint CSV here")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--json", action="store_true", help="JSON output (default)")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("table-check", help="verify the exact identities over a table")
    p.add_argument("source", nargs="?", help="'builtin' (default) or a CSV path")
    p.add_argument("--precision", type=int, default=arch.DEFAULT_PRECISION)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_table_check)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (IdentityFailure, padic.IdentityViolation) as exc:
        print(f"identity violation: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
