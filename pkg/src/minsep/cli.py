"""Command line entry point: ``minsep <command> ...``."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from collections.abc import Sequence

from minsep.dichotomy import check_survey, classify, survey_all_families
from minsep.errors import ConsistencyError, FamilyError, GraphError, GraphFormatError, MinsepError, OutOfScopeError
from minsep.generators import build, certified_family, verify_certificates
from minsep.graphio import format_graph, read_graph
from minsep.growth import CERTIFIED_FAMILIES, EXACT_MAX_N, growth, rows_to_csv
from minsep.patterns import parse_family
from minsep.separators import minimal_ab_separators, minimal_separators, minimal_separators_brute
from minsep.suites import SUITES, run_suites

EX_USAGE = 64
EX_DATAERR = 65
EX_SOFTWARE = 70
EX_TRUNCATED = 3

GEN_FAMILIES = ("theta", "line-theta", "wall", "line-wall", "grid", "c5blowup", "named")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _split_params(tokens: Sequence[str]) -> list[str]:
    return [t for tok in tokens for t in tok.split(",") if t]


def _format_set(s) -> str:
    return " ".join(str(v + 1) for v in sorted(s))


# -- commands -----------------------------------------------------------------------


def cmd_gen(args, out) -> int:
    params = _split_params(args.params)
    g = build(args.family, params)
    comments = [f"{args.family} {' '.join(params)}".rstrip()]
    if args.certify:
        if args.family not in CERTIFIED_FAMILIES:
            raise GraphError(f"family {args.family!r} has no certificate construction")
        _, sets = certified_family(args.family, [int(p) for p in params])
        chk = verify_certificates(g, sets, args.family, params)
        comments.append(f"certificates {chk.verified}/{chk.claimed} verified, distinct={str(chk.distinct).lower()}")
        comments.extend(f"sep {_format_set(s)}".rstrip() for s in sets)
        if not chk.ok:
            raise ConsistencyError(f"certificate check failed for {args.family} {params}", counterexample=chk)
    text = format_graph(g, comments)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def cmd_enumerate(args, out) -> int:
    g = read_graph(args.input)
    if args.pair:
        a, b = (x - 1 for x in args.pair)
        if not (0 <= a < g.n and 0 <= b < g.n):
            raise GraphError(f"pair vertices must be in 1..{g.n}")
        report = minimal_ab_separators(g, a, b, method=args.method)
    elif args.method == "brute":
        report = minimal_separators_brute(g)
    else:
        report = minimal_separators(g, count_only=args.count_only, limit=args.limit)
    seps = report.separators
    truncated = report.truncated
    if args.limit is not None and seps is not None and len(seps) > args.limit:
        seps, truncated = seps[: args.limit], True
    if args.count_only:
        out.write(f"{report.count}\n")
    else:
        for s in seps:
            out.write(_format_set(s) + "\n")
    if truncated:
        print(f"truncated after {args.limit} separators", file=sys.stderr)
        return EX_TRUNCATED
    return 0


def cmd_classify(args, out) -> int:
    result = classify(parse_family(args.family))
    out.write(f"{result}\n")
    return result.exit_code


def cmd_survey(args, out) -> int:
    report = survey_all_families()
    check_survey(report)
    if args.csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["family", "verdict", "witness", "rule"])
        for r in report.rows:
            witness = "{" + ",".join(r.witness) + "}" if r.witness else ""
            rule = f"{'tame' if r.theorem == 1 else 'nontame'}-{r.rule}" if r.rule else ""
            w.writerow(["{" + ",".join(r.family) + "}", r.verdict, witness, rule])
        return 0
    total = sum(report.counts.values())
    out.write(f"families: {total}\n")
    for verdict, count in report.counts.items():
        out.write(f"{str(verdict):<8} {count}\n")
    out.write("open: " + "  ".join("{" + ",".join(f) + "}" for f in report.open_families) + "\n")
    out.write("conflicts: 0\n")
    return 0


def cmd_verify(args, out) -> int:
    report = run_suites(args.suite, max_n=args.max_n, seed=args.seed)
    if args.json:
        json.dump([r.as_dict() for r in report.results], out, indent=2)
        out.write("\n")
    else:
        width = max(len(r.check_id) for r in report.results)
        for r in report.results:
            out.write(f"{r.suite:<13} {r.check_id:<{width}} {r.status.upper():<4} {r.checked:>7}\n")
            if r.counterexample:
                out.write(f"    counterexample: {r.counterexample}\n")
        out.write(f"{'all checks passed' if report.ok else f'{len(report.failures())} check(s) failed'}\n")
    return 0 if report.ok else 1


def cmd_growth(args, out) -> int:
    param_list = [tuple(int(x) for x in p.split(",")) for p in args.params]
    rows = growth(args.family, param_list, args.mode, args.max_n)
    out.write(rows_to_csv(rows, timing=not args.no_timing))
    return 0


# -- parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="minsep", description="Minimal separators: enumeration, extremal families, classification.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate a graph in the text format")
    g.add_argument("--family", required=True, choices=GEN_FAMILIES)
    g.add_argument("--params", nargs="*", default=[], help="parameters, space or comma separated")
    g.add_argument("--certify", action="store_true", help="also emit and verify the separator certificates")
    g.add_argument("--output", "-o", help="write to a file instead of stdout")
    g.set_defaults(func=cmd_gen)

    e = sub.add_parser("enumerate", help="list minimal separators of a graph file")
    e.add_argument("--input", "-i", required=True)
    e.add_argument("--pair", nargs=2, type=int, metavar=("A", "B"), help="only minimal A,B-separators (1-indexed)")
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--limit", type=int, help="stop after N separators (exit code 3 if more exist)")
    e.add_argument("--method", choices=("brute", "delay"), default="delay")
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("classify", help="tame / not-tame verdict for a forbidden family")
    c.add_argument("--family", required=True, help='comma-separated names, e.g. "4P1,C4"')
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("survey", help="classify every family over the 18 small graphs")
    s.add_argument("--csv", action="store_true", help="per-family rows instead of the summary")
    s.set_defaults(func=cmd_survey)

    v = sub.add_parser("verify", help="run the lemma verification suites")
    v.add_argument("--suite", choices=("all", *SUITES), default="all")
    v.add_argument("--max-n", type=int, default=6)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("growth", help="separator counts along a parameter sweep (CSV)")
    w.add_argument("--family", required=True, choices=GEN_FAMILIES[:-1])
    w.add_argument("--params", nargs="+", required=True, help='one tuple per row, e.g. "2,3" "3,3"')
    w.add_argument("--mode", choices=("exact", "certify"), default="exact")
    w.add_argument("--max-n", type=int, default=EXACT_MAX_N, help="vertex ceiling for exact mode")
    w.add_argument("--no-timing", action="store_true", help="write 0 for elapsed_ms (byte-stable output)")
    w.set_defaults(func=cmd_growth)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EX_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        if exc.counterexample is not None:
            print(f"counterexample: {exc.counterexample}", file=sys.stderr)
        return EX_SOFTWARE
    except (GraphFormatError, FamilyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DATAERR
    except (OutOfScopeError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    except MinsepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_SOFTWARE


if __name__ == "__main__":
    sys.exit(main())
