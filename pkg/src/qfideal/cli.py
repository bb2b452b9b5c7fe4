"""Command-line front end.

Data goes to stdout (or --out files); diagnostics go to stderr.  Exit codes:
0 for success / zero violations, 1 when violations were found (including a
false answer from ``check``), 2 for malformed input.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .enumeration import OrderTooLarge, build_corpus
from .harness import (
    SampleConfig,
    UnknownHypothesisLabel,
    reports_to_doc,
    search_counterexample,
    verify_all,
)
from .qfuzzy import GradeOutOfRange, QFuzzyKind, parse_grade, q_predicate
from .semigroups import classify
from .serialization import (
    LoadError,
    corpus_to_list,
    dumps,
    fuzzy_to_dict,
    load_corpus_file,
    load_fuzzy_file,
    load_semigroup_file,
    semigroup_to_dict,
)
from .theorems import TheoremId
from .transforms import (
    AlphaOutOfRange,
    BetaOutOfRange,
    extension,
    magnified_translation,
)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_INPUT = 2


def _ceiling() -> int | None:
    raw = os.environ.get("QFIDEAL_MAX_ORDER")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise LoadError(f"QFIDEAL_MAX_ORDER must be an integer, got {raw!r}")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_enumerate(args) -> int:
    flag_filter = args.filter.split(",") if args.filter else None
    corpus = build_corpus(
        args.order,
        dedup="up_to_iso" if args.iso else "labeled",
        flag_filter=flag_filter,
        min_order=args.order if args.single_order else 1,
        ceiling=_ceiling(),
    )
    _emit(dumps(corpus_to_list(corpus)), args.out)
    print(f"enumerated {len(corpus)} semigroups", file=sys.stderr)
    return EXIT_OK


def _cmd_classify(args) -> int:
    s = load_semigroup_file(args.semigroup)
    flags = classify(s)
    doc = {name: getattr(flags, name) for name in flags.FLAG_NAMES}
    _emit(dumps(doc), None)
    return EXIT_OK


def _cmd_check(args) -> int:
    s = load_semigroup_file(args.semigroup)
    mu = load_fuzzy_file(s, args.fuzzy)
    try:
        kind = QFuzzyKind(args.kind)
    except ValueError:
        raise LoadError(
            f"unknown kind {args.kind!r}; expected one of "
            f"{', '.join(k.value for k in QFuzzyKind)}"
        )
    result = q_predicate(mu, kind)
    print("true" if result else "false")
    return EXIT_OK if result else EXIT_VIOLATIONS


def _cmd_extend(args) -> int:
    s = load_semigroup_file(args.semigroup)
    mu = load_fuzzy_file(s, args.fuzzy)
    try:
        x = s.index_of(args.by)
    except KeyError as exc:
        raise LoadError(str(exc.args[0]))
    if args.beta is not None or args.alpha is not None:
        beta = parse_grade(args.beta) if args.beta is not None else Fraction(1)
        alpha = parse_grade(args.alpha) if args.alpha is not None else Fraction(0)
        mu = magnified_translation(mu, beta, alpha)
    _emit(dumps(fuzzy_to_dict(extension(mu, x))), args.out)
    return EXIT_OK


def _parse_pool(raw: str) -> tuple[Fraction, ...]:
    return tuple(parse_grade(part) for part in raw.split(","))


def _config_from(args) -> SampleConfig:
    kwargs = {"seed": args.seed, "samples_per_semigroup": args.samples}
    if args.pool:
        kwargs["grade_pool"] = _parse_pool(args.pool)
    if args.q_sizes:
        kwargs["q_sizes"] = tuple(int(part) for part in args.q_sizes.split(","))
    return SampleConfig(**kwargs)


def _cmd_verify(args) -> int:
    items = load_corpus_file(args.corpus)
    config = _config_from(args)
    reports = verify_all(items, config)
    _emit(dumps(reports_to_doc(reports)), args.out)
    bad = 0
    for report in reports:
        status = "ok" if report.ok else f"{len(report.violations)} violation(s)"
        print(
            f"{report.theorem}: {status} "
            f"(instances={report.instances_checked}, hits={report.hypothesis_hits}, "
            f"anomalies={len(report.anomalies)})",
            file=sys.stderr,
        )
        bad += len(report.violations)
    return EXIT_OK if bad == 0 else EXIT_VIOLATIONS


def _cmd_search(args) -> int:
    items = load_corpus_file(args.corpus)
    config = _config_from(args)
    try:
        tid = TheoremId(args.theorem)
    except ValueError:
        raise LoadError(
            f"unknown theorem id {args.theorem!r}; expected one of "
            f"{', '.join(t.value for t in TheoremId)}"
        )
    report = search_counterexample(tid, items, config, args.drop)
    _emit(dumps([report_doc for report_doc in reports_to_doc([report])]), args.out)
    print(
        f"{report.theorem}: {len(report.violations)} violation(s) with "
        f"drop={args.drop or 'nothing'}",
        file=sys.stderr,
    )
    return EXIT_OK if not report.violations else EXIT_VIOLATIONS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfideal",
        description="Finite semigroups, fuzzy ideals, extensions, and claim verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="generate a corpus of small semigroups")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--iso", action="store_true", help="deduplicate up to isomorphism")
    p.add_argument("--filter", help="comma-separated class flags that must hold")
    p.add_argument("--single-order", action="store_true",
                   help="only the given order, not all orders up to it")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("classify", help="compute structural class flags")
    p.add_argument("--semigroup", required=True)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("check", help="evaluate a fuzzy predicate")
    p.add_argument("--semigroup", required=True)
    p.add_argument("--fuzzy", required=True)
    p.add_argument("--kind", required=True)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("extend", help="extend a fuzzy subset by an element")
    p.add_argument("--semigroup", required=True)
    p.add_argument("--fuzzy", required=True)
    p.add_argument("--by", required=True, help="element label")
    p.add_argument("--beta", help="optional rescale factor in [0,1]")
    p.add_argument("--alpha", help="optional shift in [0, 1 - sup]")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_extend)

    for name, fn in (("verify", _cmd_verify), ("search", _cmd_search)):
        p = sub.add_parser(name, help=f"{name} claims over a corpus")
        p.add_argument("--corpus", required=True)
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--samples", type=int, default=200)
        p.add_argument("--pool", help="comma-separated grade pool, e.g. 0,1/2,1")
        p.add_argument("--q-sizes", dest="q_sizes", help="comma-separated Q sizes, e.g. 1,2")
        p.add_argument("--out")
        if name == "search":
            p.add_argument("--theorem", required=True)
            p.add_argument("--drop", help="hypothesis label to stop enforcing")
        p.set_defaults(fn=fn)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (LoadError, OrderTooLarge, GradeOutOfRange, AlphaOutOfRange,
            BetaOutOfRange, UnknownHypothesisLabel, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
