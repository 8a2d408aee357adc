"""Command-line interface.

Verbs: table, maximal, pchars, cdp, monomial, verify, scan.  Identical
inputs produce byte-identical output (reports carry no timestamps or
timings; --workers changes wall time only).

Exit codes: 0 success, 1 usage or unknown spec, 2 subgroup enumeration
incomplete, 3 conjecture counterexample found.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .chartable import character_table, render_table_text, table_json
from .numth import parse_pi
from .permgroup import EnumerationIncompleteError, OrderBoundExceeded
from .pchar import p_characters, p_pi_characters, report_json
from .subgroups import maximal_subgroups
from .verify import (Verdict, conjecture_scan, lemma_bijection,
                     nilpotency_criterion, render_verdict_text, theorem_a,
                     theorem_b, theorem_c)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCOMPLETE = 2
EXIT_COUNTEREXAMPLE = 3


def _dump(payload, args) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _emit(text: str, args):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)


def _cmd_table(args) -> int:
    G = catalog.build(args.spec)
    table = character_table(G)
    _emit(_dump(table_json(table), args) if args.json else render_table_text(table), args)
    return EXIT_OK


def _cmd_maximal(args) -> int:
    G = catalog.build(args.spec)
    classes = maximal_subgroups(G)
    if args.json:
        payload = {
            "group": G.name, "order": G.order,
            "maximal_classes": [
                {"index": c.index, "order": c.order, "length": c.length,
                 "generators": [g.cycle_string() for g in c.representative.gens]}
                for c in classes
            ],
        }
        _emit(_dump(payload, args), args)
    else:
        lines = [f"group {G.name}  order {G.order}"]
        for c in classes:
            gens = " ".join(g.cycle_string() for g in c.representative.gens)
            lines.append(f"index {c.index}  order {c.order}  classes {c.length}  gens {gens}")
        _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def _get_report(args):
    G = catalog.build(args.spec)
    if args.pi:
        return p_pi_characters(G, parse_pi(args.pi))
    return p_characters(G)


def _cmd_pchars(args) -> int:
    report = _get_report(args)
    if args.json:
        _emit(_dump(report_json(report), args), args)
    else:
        lines = [f"group {report.group.name}  order {report.group.order}"]
        if report.pi is not None:
            lines.append("pi " + ",".join(map(str, sorted(report.pi))))
        for e in report.entries:
            cons = "  ".join(f"row{i}(deg {report.table.degrees[i]}) x{m}"
                             for i, m in e.constituents)
            lines.append(f"maximal index {e.maximal.index} order {e.maximal.order}: {cons}")
        lines.append("irr_p rows: " + " ".join(map(str, report.irr_p)))
        lines.append("cd_p = {" + ", ".join(map(str, report.cd_p)) + "}")
        _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def _cmd_cdp(args) -> int:
    report = _get_report(args)
    if args.json:
        _emit(_dump({"group": report.group.name, "cd_p": list(report.cd_p)}, args), args)
    else:
        _emit("cd_p = {" + ", ".join(map(str, report.cd_p)) + "}\n", args)
    return EXIT_OK


def _cmd_monomial(args) -> int:
    report = _get_report(args)
    verdicts = report.monomial_verdicts
    if args.json:
        payload = report_json(report, include_monomial=True)
        _emit(_dump(payload, args), args)
    else:
        lines = [f"group {report.group.name}"]
        for i in report.irr_p:
            w = verdicts[i]
            if w is None:
                lines.append(f"row {i} (degree {report.table.degrees[i]}): nonmonomial")
            else:
                lines.append(f"row {i} (degree {report.table.degrees[i]}): monomial "
                             f"from subgroup of order {w.subgroup.order}")
        _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def _cmd_verify(args) -> int:
    G = catalog.build(args.spec)
    needs_pi = args.claim in ("b", "c")
    if needs_pi and not args.pi:
        sys.stderr.write(f"verify {args.claim} requires --pi\n")
        return EXIT_USAGE
    pi = parse_pi(args.pi) if args.pi else None
    if args.claim == "a":
        verdict = theorem_a(G)
    elif args.claim == "b":
        verdict = theorem_b(G, pi)
    elif args.claim == "c":
        verdict = theorem_c(G, pi)
    elif args.claim == "nilp":
        verdict = nilpotency_criterion(G)
    else:
        verdict = lemma_bijection(G)
    if args.json:
        _emit(json.dumps(verdict.to_json(), sort_keys=True) + "\n", args)
    else:
        _emit(render_verdict_text(verdict) + "\n", args)
    return EXIT_OK


def _cmd_scan(args) -> int:
    if not args.conjecture:
        sys.stderr.write("scan requires --conjecture\n")
        return EXIT_USAGE
    specs = args.specs or catalog.scan_specs(args.max_order)
    report = conjecture_scan(specs, workers=args.workers)
    if args.json:
        _emit(_dump(report.to_json(), args), args)
    else:
        lines = [f"scanned {report.scanned} groups",
                 f"candidates (|cd_p| <= 2): {len(report.candidates)}",
                 f"counterexamples: {len(report.counterexamples)}",
                 f"errors: {len(report.errors)}"]
        for c in report.counterexamples:
            lines.append(f"COUNTEREXAMPLE {c['spec']} cd_p={c['cd_p']}")
        for e in report.errors:
            lines.append(f"error {e['spec']}: {e['error']}")
        _emit("\n".join(lines) + "\n", args)
    return EXIT_COUNTEREXAMPLE if report.counterexamples else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permchar",
        description="Exact constituents of maximal-subgroup permutation characters.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, spec=True):
        if spec:
            p.add_argument("spec", help="group spec, e.g. sym:4, alt:5, psl2:27, file:PATH")
        p.add_argument("--json", action="store_true")
        p.add_argument("--out", default=None)
        p.add_argument("--pi", default=None, help="comma-separated primes, e.g. 2,3")
        p.add_argument("--max-order", type=int, default=60)
        p.add_argument("--workers", type=int, default=1)

    for verb, fn in [("table", _cmd_table), ("maximal", _cmd_maximal),
                     ("pchars", _cmd_pchars), ("cdp", _cmd_cdp),
                     ("monomial", _cmd_monomial)]:
        p = sub.add_parser(verb)
        common(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("verify")
    p.add_argument("claim", choices=["a", "b", "c", "nilp", "lemma"])
    common(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("scan")
    p.add_argument("specs", nargs="*", default=None)
    p.add_argument("--conjecture", action="store_true")
    common(p, spec=False)
    p.set_defaults(fn=_cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except EnumerationIncompleteError as exc:
        sys.stderr.write(f"enumeration incomplete: {exc}\n")
        return EXIT_INCOMPLETE
    except (ValueError, OrderBoundExceeded, FileNotFoundError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
