"""Command-line front end.

Exit codes: 0 success, 2 parse or index error, 3 inadmissible query,
4 verification failure, 1 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import verify
from .errors import InadmissibleQueryError, InvalidDegreeError, InvalidIndexError
from .lgbridge import LGQuery, lg_gw
from .ogring import GWQuery, gw_invariant, quantum_pieri, quantum_product
from .partitions import format_partition, parse_partition
from .qtilde import ptilde, qtilde_x

EXIT_OK, EXIT_IO, EXIT_PARSE, EXIT_INADMISSIBLE, EXIT_FAILED = 0, 1, 2, 3, 4


def _emit_class(cls, args):
    if args.json:
        print(json.dumps(cls.to_json()))
    else:
        print(cls.render())


def cmd_qprod(args):
    _emit_class(quantum_product(parse_partition(args.lhs), parse_partition(args.rhs), args.n),
                args)
    return EXIT_OK


def cmd_pieri(args):
    _emit_class(quantum_pieri(parse_partition(args.lam), args.k, args.n), args)
    return EXIT_OK


def cmd_gw(args):
    query = GWQuery(args.n, parse_partition(args.a), parse_partition(args.b),
                    parse_partition(args.c), args.d)
    value = gw_invariant(query)
    print(json.dumps({"n": args.n, "d": args.d, "value": value}) if args.json else value)
    return EXIT_OK


def cmd_lggw(args):
    query = LGQuery(args.n, parse_partition(args.a), parse_partition(args.b),
                    parse_partition(args.c), args.e)
    value = lg_gw(query)
    print(json.dumps({"n": args.n, "e": args.e, "value": value}) if args.json else value)
    return EXIT_OK


def cmd_poly(args):
    nu = parse_partition(args.nu)
    poly = ptilde(nu, args.n) if args.ptilde else qtilde_x(nu, args.n)
    print(poly.render())
    return EXIT_OK


def cmd_verify(args):
    suites = list(verify.SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in suites:
        reports += verify.run(verify.SUITES[name](args.n_max), workers=args.jobs)
    failed = [r for r in reports if not r.passed]
    if args.json:
        print(json.dumps([r.to_json() for r in reports]))
    else:
        for r in (reports if args.verbose else failed):
            print(r)
            if not r.passed and args.show_poly:
                print("  residual:", r.residual.render() if hasattr(r.residual, "render")
                      else r.residual)
        print(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_table(args):
    rows = verify.gw_table(args.n, args.d_max, workers=args.jobs)
    out = Path(args.out)
    try:
        if args.csv:
            with out.open("w", newline="") as fh:
                w = csv.writer(fh)
                w.writerow(["a", "b", "c", "d", "value"])
                for row in rows:
                    w.writerow([format_partition(row["a"]), format_partition(row["b"]),
                                format_partition(row["c"]), row["d"], row["value"]])
        else:
            out.write_text(json.dumps({"n": args.n, "d_max": args.d_max,
                                       "invariants": rows}, indent=1) + "\n")
    except OSError as exc:
        print(f"error: cannot write {out}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {len(rows)} invariants to {out}")
    return EXIT_OK


def load_table(path) -> dict:
    """Read a table written by ``table`` (JSON or CSV) back into JSON form."""
    path = Path(path)
    text = path.read_text()
    if text.lstrip().startswith("{"):
        return json.loads(text)
    rows = []
    for rec in csv.DictReader(text.splitlines()):
        rows.append({"a": list(parse_partition(rec["a"])), "b": list(parse_partition(rec["b"])),
                     "c": list(parse_partition(rec["c"])), "d": int(rec["d"]),
                     "value": int(rec["value"])})
    return {"invariants": rows}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ogqh",
                                description="Quantum cohomology of OG(n+1, 2n+2).")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        if name != "verify":
            sp.add_argument("--n", type=int, required=True)
        return sp

    sp = add("qprod", cmd_qprod, "quantum product of two Schubert classes")
    sp.add_argument("--lhs", required=True)
    sp.add_argument("--rhs", required=True)
    sp.add_argument("--json", action="store_true")

    sp = add("pieri", cmd_pieri, "quantum Pieri product tau_lam * tau_k")
    sp.add_argument("--lam", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--json", action="store_true")

    sp = add("gw", cmd_gw, "three-point Gromov-Witten invariant of OG")
    sp.add_argument("--d", type=int, required=True)
    for flag in ("--a", "--b", "--c"):
        sp.add_argument(flag, required=True)
    sp.add_argument("--json", action="store_true")

    sp = add("lggw", cmd_lggw, "Gromov-Witten invariant of LG(n-1, 2n-2)")
    sp.add_argument("--e", type=int, required=True)
    for flag in ("--a", "--b", "--c"):
        sp.add_argument(flag, required=True)
    sp.add_argument("--json", action="store_true")

    sp = add("poly", cmd_poly, "print Q~_nu (or P~_nu) as a polynomial")
    sp.add_argument("--nu", required=True)
    sp.add_argument("--ptilde", action="store_true")

    sp = add("verify", cmd_verify, "run verification suites")
    sp.add_argument("--suite", choices=[*verify.SUITES, "all"], default="all")
    sp.add_argument("--n-max", type=int, default=4)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--verbose", action="store_true")
    sp.add_argument("--show-poly", action="store_true",
                    help="print residual polynomials of failed checks")

    sp = add("table", cmd_table, "export every admissible GW invariant")
    sp.add_argument("--d-max", type=int, required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--csv", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InadmissibleQueryError as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except (InvalidIndexError, InvalidDegreeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
