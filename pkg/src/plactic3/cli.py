"""Command-line interface: ``plactic3 <command> ...``.

Exit codes: 0 success (or "true"), 1 a negative answer or a failed check,
2 bad input, unsupported operation, or an exceeded cap.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .identities import (
    FAILS,
    HOLDS,
    compare_monoids,
    enumerate_identities,
    format_table,
    holds_at_bound,
)
from .limits import CapExceeded, StrategyError
from .localization import LocalizationError, delta, loc_mul, parse_localized, z_element
from .presentations import catalog, central_witness, get_monoid, load_presentations
from .reports import dumps
from .suites import SUITES, SuiteConfig, run_suite
from .tableau import normal_form
from .words import Identity, WordError, format_substitution, format_word, parse_word

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _monoid(args, name: str):
    extra = load_presentations(args.config) if args.config else None
    return get_monoid(name, extra)


def _write_json(path: str | None, payload) -> None:
    if path:
        Path(path).write_text(dumps(payload), encoding="utf-8")


def _answer(value: bool) -> int:
    print("true" if value else "false")
    return EXIT_TRUE if value else EXIT_FALSE


# -- commands ---------------------------------------------------------------


def cmd_normalize(args) -> int:
    h = _monoid(args, args.monoid)
    w = parse_word(args.word, h.rank)
    print(format_word(h.canonical(w)))
    if args.grid and h.strategy == "schensted":
        print(normal_form(w, h.rank).grid())
    return EXIT_TRUE


def cmd_eq(args) -> int:
    h = _monoid(args, args.monoid)
    return _answer(h.equal(parse_word(args.u, h.rank), parse_word(args.v, h.rank)))


def cmd_mul(args) -> int:
    h = _monoid(args, args.monoid)
    product: tuple = ()
    for w in args.words:
        product = h.mul(product, parse_word(w, h.rank))
    print(format_word(product))
    return EXIT_TRUE


def cmd_central(args) -> int:
    h = _monoid(args, args.monoid)
    g = central_witness(h, parse_word(args.word, h.rank))
    if g is not None:
        print(f"false (does not commute with {format_word((g,))})")
        return EXIT_FALSE
    return _answer(True)


def cmd_loc(args) -> int:
    h = _monoid(args, args.monoid)
    product = z_element(h, 0)
    for s in args.elements:
        product = loc_mul(product, parse_localized(s, h))
    print(product)
    if args.delta:
        print(f"delta = {delta(product)}")
    return EXIT_TRUE


def cmd_check_id(args) -> int:
    h = _monoid(args, args.monoid)
    ident = Identity.parse(args.identity)
    verdict = holds_at_bound(h, ident, args.bound)
    print(f"{h.name}: {ident}: {verdict.status} (bound {verdict.bound})")
    if verdict.fails:
        print("  " + " ".join(f"{k}↦{v}" for k, v in
                              format_substitution(verdict.witness).items()))
    _write_json(args.json, verdict.to_json())
    return EXIT_FALSE if verdict.status == FAILS else EXIT_TRUE


def cmd_scan_ids(args) -> int:
    names = args.monoid or list(catalog())
    handles = [_monoid(args, n) for n in names]
    ids = list(enumerate_identities(args.vars, args.sides, balanced_only=args.balanced))
    rows = compare_monoids(handles, ids, args.bound)
    if args.disagree:
        rows = [r for r in rows if not r.agreement]
    print(format_table(rows))
    holds = {n.name: sum(r.verdicts[n.name].status == HOLDS for r in rows) for n in handles}
    print("holding up to bound: " + ", ".join(f"{k}={v}" for k, v in holds.items()))
    _write_json(args.json, {"bound": args.bound, "rows": [r.to_json() for r in rows]})
    return EXIT_TRUE


def cmd_verify(args) -> int:
    cfg = SuiteConfig(length=args.len, exp=args.exp, bound=args.bound, sides=args.sides,
                      escalate=args.escalate, count=args.count)
    report = run_suite(args.suite, cfg)
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        extra = f", {len(c.findings)} findings" if c.findings else ""
        print(f"[{status}] {c.check}: checked {c.checked}, "
              f"{c.violation_count} violations{extra} ({c.elapsed_ms:.0f} ms)")
        for e in c.errors:
            print(f"    error: {e}")
    print(f"{report.suite}: pass {report.pass_count}, fail {report.fail_count}, "
          f"findings {report.finding_count}")
    _write_json(args.json, report)
    return report.exit_code(args.strict)


def cmd_catalog(args) -> int:
    pool = dict(catalog())
    if args.config:
        pool.update(load_presentations(args.config))
    for name, h in pool.items():
        p = h.presentation
        base = f", base {h.base.name}" if h.base is not None else ""
        print(f"{name:<6} alphabet {p.alphabet}  relations {len(p.relations):<2} "
              f"strategy = {h.strategy}{base}")
    if args.json:
        _write_json(args.json, [h.presentation.to_json() for h in pool.values()])
    return EXIT_TRUE


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="FILE",
                        help="JSON file with extra presentations (one object or a list)")

    parser = argparse.ArgumentParser(
        prog="plactic3",
        description="Compute in the rank-3 plactic monoid, its quotients and localizations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="canonical word of an element")
    p.add_argument("monoid")
    p.add_argument("word")
    p.add_argument("--grid", action="store_true", help="also print the tableau (M only)")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("eq", parents=[common], help="decide u = v (exit 0 true, 1 false)")
    p.add_argument("monoid")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("mul", parents=[common], help="canonical word of a product")
    p.add_argument("monoid")
    p.add_argument("words", nargs="+")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("central", parents=[common], help="does the element commute with a, b, c")
    p.add_argument("monoid")
    p.add_argument("word")
    p.set_defaults(func=cmd_central)

    p = sub.add_parser("loc", parents=[common],
                       help="multiply elements v·z^m of a localization M(z), N1(z), N2(z)")
    p.add_argument("monoid", help="the base: M, N1 or N2")
    p.add_argument("elements", nargs="+", help="elements like 'ba·z^-1' ('*' or '.' also work)")
    p.add_argument("--delta", action="store_true", help="also print the image in M' x Z (M only)")
    p.set_defaults(func=cmd_loc)

    p = sub.add_parser("check-id", parents=[common], help="bounded identity search")
    p.add_argument("monoid")
    p.add_argument("identity", help="e.g. 'xyx=xxy'; variables x, y, z1, z2, ...")
    p.add_argument("--bound", "--len", type=_nonneg, default=3,
                   help="longest substituted word (default 3)")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_check_id)

    p = sub.add_parser("scan-ids", parents=[common], help="compare monoids on an identity stream")
    p.add_argument("--monoid", action="append", help="repeatable; default: whole catalog")
    p.add_argument("--vars", type=_positive, default=2)
    p.add_argument("--sides", type=_positive, default=4, help="longest identity side")
    p.add_argument("--bound", "--len", type=_nonneg, default=2)
    p.add_argument("--balanced", action="store_true", help="balanced identities only")
    p.add_argument("--disagree", action="store_true", help="only rows where monoids disagree")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_scan_ids)

    d = SuiteConfig()
    p = sub.add_parser("verify", parents=[common], help="run a named verification suite")
    p.add_argument("suite", choices=["all", *SUITES])
    p.add_argument("--len", type=_nonneg, default=d.length, help="word length for scans")
    p.add_argument("--exp", type=_nonneg, default=d.exp, help="exponents range over [-exp, exp]")
    p.add_argument("--bound", type=_nonneg, default=d.bound, help="substitution length")
    p.add_argument("--sides", type=_positive, default=d.sides, help="longest identity side")
    p.add_argument("--escalate", type=_nonneg, default=d.escalate,
                   help="extra substitution length tried before reporting a finding")
    p.add_argument("--count", type=_positive, default=d.count,
                   help="identities per quotient in localization-lemma")
    p.add_argument("--strict", action="store_true", help="findings also fail the run")
    p.add_argument("--json", metavar="PATH", help="write the report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", parents=[common], help="list the built-in monoids")
    p.add_argument("--json", metavar="PATH", help="write the presentations here")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (WordError, StrategyError, LocalizationError, CapExceeded,
            ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
