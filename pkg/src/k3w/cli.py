"""Command-line front end.

    k3w verify all|golay|leech|fermat|quadric|abelian|kummer|iso [--jobs N] [--report PATH]
    k3w iso --left leech|fermat|kummer --right leech|fermat|kummer [--out PATH]
    k3w export --what octads|roots|lines|incidence|tables --format json|dot|csv --out PATH

Exit status: 0 when every requested check passes, 1 on a failed check, 2 on
usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .report import Report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SUITE_ORDER = ("golay", "leech", "fermat", "quadric", "abelian", "kummer", "iso")


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits with 2 already; keep the message terse
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("K3W_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="k3w", description="Verify the 112-curve configuration in characteristic 3.")
    p.add_argument("--version", action="version", version=f"k3w {__version__}")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suite", choices=("all",) + SUITE_ORDER)
    v.add_argument("--jobs", type=int, default=_default_jobs(), help="suites run in parallel (default 1 or $K3W_JOBS)")
    v.add_argument("--report", help="write the JSON report here")
    v.add_argument("--no-timings", action="store_true", help="omit elapsed times so reports are byte-stable")
    v.add_argument("--fault", choices=("octad", "line", "table-cell"), help="inject one corruption")
    v.add_argument("--tables", help="CSV of the 4-torsion tables to diff against (default: shipped fixture)")
    v.add_argument("--quiet", action="store_true", help="print failures only")

    i = sub.add_parser("iso", help="find an explicit isomorphism between two of the 112-vertex graphs")
    i.add_argument("--left", required=True, choices=("leech", "fermat", "kummer"))
    i.add_argument("--right", required=True, choices=("leech", "fermat", "kummer"))
    i.add_argument("--out", help="write the bijection as JSON")

    e = sub.add_parser("export", help="write a configuration to a file")
    e.add_argument("--what", required=True, choices=("octads", "roots", "lines", "incidence", "tables"))
    e.add_argument("--format", required=True, choices=("json", "dot", "csv"))
    e.add_argument("--out", required=True)
    return p


def _run_one(name: str, fault: str | None, tables: str | None, jobs: int) -> dict:
    from .suites import run_suite

    rep = run_suite(name, fault=fault, tables=tables, jobs=jobs)
    return {"suite": rep.suite, "checks": rep.checks, "elapsed_ms": rep.elapsed_ms}


def run_verify(names: list[str], fault: str | None = None, tables: str | None = None, jobs: int = 1) -> list[Report]:
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(min(jobs, len(names))) as ex:
            futs = [ex.submit(_run_one, n, fault, tables, 1) for n in names]
            parts = [f.result() for f in futs]
    else:
        parts = [_run_one(n, fault, tables, jobs) for n in names]
    return [Report(p["suite"], p["checks"], p["elapsed_ms"]) for p in parts]


def _print_report(rep: Report, quiet: bool, out) -> None:
    for c in rep.checks:
        if quiet and c.status != "fail":
            continue
        line = f"[{c.status.upper():>11}] {rep.suite}:{c.id}"
        if c.status != "pass":
            line += f"  expected={json.dumps(c.as_dict()['expected'])} actual={json.dumps(c.as_dict()['actual'])}"
        print(line, file=out)


def cmd_verify(args) -> int:
    if args.tables and not os.path.isfile(args.tables):
        print(f"k3w: tables file not found: {args.tables}", file=sys.stderr)
        return EXIT_USAGE
    names = list(SUITE_ORDER) if args.suite == "all" else [args.suite]
    t0 = time.perf_counter()
    reports = run_verify(names, args.fault, args.tables, max(1, args.jobs))
    for rep in reports:
        _print_report(rep, args.quiet, sys.stdout)
    ok = all(r.ok for r in reports)
    failing = [f"{r.suite}:{c.id}" for r in reports for c in r.failing()]
    timings = not args.no_timings
    if len(reports) == 1:
        doc = reports[0].as_dict(timings)
    else:
        doc = {
            "suite": "all",
            "version": __version__,
            "status": "pass" if ok else "fail",
            "checks": [dict(c.as_dict(), id=f"{r.suite}:{c.id}") for r in reports for c in r.checks],
        }
        if timings:
            doc["elapsed_ms"] = int((time.perf_counter() - t0) * 1000)
    if args.report:
        try:
            with open(args.report, "w") as fh:
                json.dump(doc, fh, indent=2)
                fh.write("\n")
        except OSError as e:
            print(f"k3w: cannot write report: {e}", file=sys.stderr)
            return EXIT_USAGE
    status = "PASS" if ok else "FAIL"
    print(f"{status}: {sum(len(r.checks) for r in reports)} checks" + ("" if ok else f"; failing: {', '.join(failing)}"))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_iso(args) -> int:
    from .graphs import GRAPHS, isomorphism

    g1, g2 = GRAPHS[args.left](), GRAPHS[args.right]()
    res = isomorphism(g1, g2)
    if not res.isomorphic:
        print(f"not isomorphic: {res.reason}")
        return EXIT_FAIL
    print(f"isomorphic ({res.reason}): {args.left} -> {args.right}, {g1.n} vertices, {len(g1.edges)} edges")
    if args.out:
        doc = {"left": args.left, "right": args.right, "mapping": {str(i): j for i, j in enumerate(res.mapping)}}
        try:
            with open(args.out, "w") as fh:
                json.dump(doc, fh, indent=1)
                fh.write("\n")
        except OSError as e:
            print(f"k3w: cannot write bijection: {e}", file=sys.stderr)
            return EXIT_USAGE
    return EXIT_OK


def cmd_export(args) -> int:
    from .export import EXPORTS, UnsupportedFormat

    try:
        text = EXPORTS[args.what](args.format)
    except UnsupportedFormat as e:
        print(f"k3w: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        with open(args.out, "w") as fh:
            fh.write(text)
    except OSError as e:
        print(f"k3w: cannot write {args.out}: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wrote {args.what} ({args.format}) to {args.out}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return {"verify": cmd_verify, "iso": cmd_iso, "export": cmd_export}[args.cmd](args)


if __name__ == "__main__":
    sys.exit(main())
