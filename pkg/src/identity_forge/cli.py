"""Command-line surface: evaluate, generate, verify, fuzz, and cross-check.

Exit codes are a stable scripting contract: 0 success, 1 verification or
term mismatch, 2 usage or generator-hypothesis error, 3 external resource
unavailable.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from fractions import Fraction
from pathlib import Path

from .catalog import all_entries, catalog_ids, entry
from .engine import (
    DegenerateRatioError,
    OffsetInvalidError,
    rewrite_scale,
    theorem1_descriptor,
    theorem2_descriptor,
)
from .numeric import format_rational, parse_rational
from .oeis import (
    FAMILY_TO_OEIS,
    OeisUnavailableError,
    bundled_fixtures_dir,
    compare_terms,
    get_terms,
)
from .sequences import SequenceDef, named_def, term
from .serialize import ParseError, from_json, to_json, to_latex
from .verifier import (
    FuzzConfig,
    fuzz_theorem1,
    fuzz_theorem2,
    report_line,
    verify,
    verify_catalog,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _add_sequence_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--family", help="named family (fibonacci, lucas, pell, pelllucas, bronze, a015530)")
    parser.add_argument("--c1", help="recurrence coefficient c1 as p/q")
    parser.add_argument("--c2", help="recurrence coefficient c2 as p/q (nonzero)")
    parser.add_argument("--x0", help="initial value X_0 as p/q")
    parser.add_argument("--x1", help="initial value X_1 as p/q")
    parser.add_argument("--label", default="custom", help="label for a custom sequence")


def _sequence_from_args(args) -> SequenceDef:
    if args.family:
        return named_def(args.family)
    custom = (args.c1, args.c2, args.x0, args.x1)
    if any(flag is None for flag in custom):
        raise ValueError("provide either --family or all of --c1 --c2 --x0 --x1")
    c1, c2, x0, x1 = (parse_rational(flag) for flag in custom)
    if c2 == 0:
        raise ValueError("c2 must be nonzero")
    return SequenceDef(c1, c2, x0, x1, label=args.label)


def _cmd_seq_eval(args) -> int:
    seq = _sequence_from_args(args)
    print(format_rational(term(seq, args.n)))
    return EXIT_OK


def _cmd_generate(args) -> int:
    seq = _sequence_from_args(args)
    if args.theorem1:
        descriptor = theorem1_descriptor(seq)
        t = seq.c1 - seq.x1
    else:
        if args.k is None:
            raise ValueError("provide --k for the offset generator, or --theorem1")
        descriptor = theorem2_descriptor(seq, args.k)
        t = descriptor.rhs.outer_ratio
    if args.reduced:
        front = seq.x0 * term(seq, 2) - seq.x1 * seq.x1
        if front == 0:
            raise ValueError("--reduced is unavailable: X_0*X_2 - X_1^2 = 0")
        descriptor = rewrite_scale(descriptor, Fraction(1) / front, 1)
    print(f"id: {descriptor.id}")
    print(f"t = {format_rational(t)}")
    print(f"coefficient = {format_rational(descriptor.rhs.outer_coef)}")
    print(f"identity: {to_latex(descriptor)}")
    if args.json:
        print(to_json(descriptor))
    return EXIT_OK


def _parse_param(text: str):
    if "=" not in text:
        raise ValueError(f"bad --param {text!r}: expected key=value")
    key, raw = text.split("=", 1)
    try:
        value: object = int(raw)
    except ValueError:
        try:
            value = parse_rational(raw)
        except ValueError:
            value = raw
    return key.strip(), value


def _cmd_verify(args) -> int:
    if args.json:
        try:
            descriptor = from_json(Path(args.json).read_text())
        except OSError as exc:
            print(f"error: cannot read {args.json}: {exc}", file=sys.stderr)
            return EXIT_RESOURCE
    elif args.id:
        params = dict(_parse_param(p) for p in args.param or [])
        descriptor = entry(args.id, **params).descriptor
    else:
        raise ValueError("provide --id or --json")
    n_lo = args.n_min if args.n_min is not None else descriptor.n_min
    report = verify(descriptor, n_lo, args.n_max)
    print(report_line(report))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _cmd_catalog_list(args) -> int:
    del args
    for e in all_entries():
        print(f"{e.label:24s} {e.citation}")
    return EXIT_OK


def _cmd_catalog_verify_all(args) -> int:
    reports = verify_catalog(args.n_max)
    failures = 0
    for report in reports:
        print(report_line(report))
        if not report.passed:
            failures += 1
    print(f"{len(reports) - failures}/{len(reports)} entries verified on [0, {args.n_max}]")
    return EXIT_OK if failures == 0 else EXIT_VERIFY_FAILED


def _summarize(name: str, reports) -> tuple[int, int, int]:
    passed = sum(1 for r in reports if r.status == "pass")
    skipped = sum(1 for r in reports if r.status == "skipped")
    failed = sum(1 for r in reports if r.status == "fail")
    print(f"{name}: {passed} pass, {skipped} skipped, {failed} fail "
          f"({len(reports)} instances)")
    for report in reports:
        if report.status == "fail":
            print(f"  {report_line(report)}")
    return passed, skipped, failed


def _cmd_fuzz(args) -> int:
    seed = args.seed
    if seed is None:
        seed = random.SystemRandom().randrange(2 ** 63)
    print(f"seed = {seed}")
    failures = 0
    if args.theorem in ("2", "both"):
        cfg = FuzzConfig(seed=seed, instance_count=args.count)
        failures += _summarize("theorem2", fuzz_theorem2(cfg))[2]
    if args.theorem in ("1", "both"):
        cfg = FuzzConfig(seed=seed, instance_count=args.count)
        failures += _summarize("theorem1", fuzz_theorem1(cfg))[2]
    return EXIT_OK if failures == 0 else EXIT_VERIFY_FAILED


def _fixtures_dir(args) -> tuple[Path, Path]:
    """(read_dir, cache_dir): explicit flag wins; else ./fixtures, else bundled."""
    if args.fixtures:
        chosen = Path(args.fixtures)
        return chosen, chosen
    local = Path("fixtures")
    if local.is_dir():
        return local, local
    return bundled_fixtures_dir(), local


def _cmd_oeis_check(args) -> int:
    family = args.family.lower().replace("-", "").replace("_", "")
    oeis_id = FAMILY_TO_OEIS.get(family)
    if oeis_id is None:
        raise ValueError(f"no OEIS mapping for family {args.family!r}")
    offline = args.offline or os.environ.get("IDENTITY_FORGE_OFFLINE") == "1"
    read_dir, cache_dir = _fixtures_dir(args)
    try:
        fixture = get_terms(oeis_id, offline, read_dir, None if offline else cache_dir)
    except OeisUnavailableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    available = len(fixture.terms)
    count = min(args.count, available)
    if args.count > available:
        print(f"note: only {available} fixture terms available", file=sys.stderr)
    mismatch = compare_terms(family, fixture, count)
    if mismatch is not None:
        index, expected, computed = mismatch
        print(
            f"{oeis_id} ({family}): MISMATCH at n={index}: "
            f"b-file has {expected}, recurrence gives {format_rational(computed)}"
        )
        return EXIT_VERIFY_FAILED
    print(f"{oeis_id} ({family}): {count}/{count} terms match [{fixture.source}]")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="identity-forge",
        description="Generate and verify weighted-sum identities for "
                    "second-order linear recurrences, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq-eval", help="evaluate a sequence at any integer index")
    _add_sequence_flags(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_seq_eval)

    p = sub.add_parser("generate", help="generate an identity for a sequence")
    _add_sequence_flags(p)
    p.add_argument("--k", type=int, help="summand offset for the general generator")
    p.add_argument("--theorem1", action="store_true",
                   help="use the normalized-sequence generator (requires X_0 = 1)")
    p.add_argument("--reduced", action="store_true",
                   help="scale by 1/(X_0*X_2 - X_1^2) so the coefficient is 1/X_k")
    p.add_argument("--json", action="store_true", help="also print the JSON document")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("verify", help="verify one identity over an n-range")
    p.add_argument("--id", help="catalog id (see 'catalog list')")
    p.add_argument("--param", action="append", help="catalog parameter key=value")
    p.add_argument("--json", help="path to a descriptor JSON document")
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--n-max", type=int, default=32)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("catalog", help="catalog operations")
    catalog_sub = p.add_subparsers(dest="catalog_command", required=True)
    pl = catalog_sub.add_parser("list", help="list every catalog entry")
    pl.set_defaults(func=_cmd_catalog_list)
    pv = catalog_sub.add_parser("verify-all", help="verify every catalog entry")
    pv.add_argument("--n-max", type=int, default=64)
    pv.set_defaults(func=_cmd_catalog_verify_all)

    p = sub.add_parser("fuzz", help="run the seeded generator fuzzers")
    p.add_argument("--seed", type=int, default=None,
                   help="instance-stream seed (random and printed when omitted)")
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--theorem", choices=("1", "2", "both"), default="both")
    p.set_defaults(func=_cmd_fuzz)

    p = sub.add_parser("oeis-check", help="compare a family against its OEIS b-file")
    p.add_argument("--family", required=True)
    p.add_argument("--count", type=int, default=30)
    p.add_argument("--offline", action="store_true",
                   help="use bundled/local fixtures only (also IDENTITY_FORGE_OFFLINE=1)")
    p.add_argument("--fixtures", help="fixtures directory (default ./fixtures, "
                                      "falling back to the bundled copies)")
    p.set_defaults(func=_cmd_oeis_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OffsetInvalidError, DegenerateRatioError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry():
    sys.exit(main())


# keep the catalog id list importable for shell completion scripts
CATALOG_IDS = tuple(catalog_ids())
