"""Command-line interface.

Subcommands: compute, classify-pair, search, verify-tables, factor.
Exit codes: 0 success, 1 verification mismatch, 2 invalid input or flags.
All big integers are rendered as decimal strings; --format machine emits
JSON records that round-trip bit-exactly.
"""

import argparse
import json
import sys
from typing import List, Optional

from . import corpus as corpus_mod
from .classify import classify_pair
from .factor import factorize_multidegree, format_factorization, padic_valuation
from .invariants import canonicalize, profile
from .search import (
    KeyMode,
    PairReport,
    SearchConfig,
    SearchLimitExceeded,
    search_pairs,
)


def _parse_degrees(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"cannot parse degree list {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="citopo",
        description="Exact invariants, classification and degree-space search "
        "for complete intersections.",
    )
    parser.add_argument(
        "--format", choices=["text", "machine"], default="text",
        help="output format (machine = JSON with decimal-string integers)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="invariant profile of one multidegree")
    p.add_argument("--dim", type=int, required=True, metavar="N")
    p.add_argument("--degrees", required=True, help="comma-separated, e.g. 6,5,3")

    p = sub.add_parser("classify-pair", help="classification verdict for two multidegrees")
    p.add_argument("--dim", type=int, required=True, metavar="N")
    p.add_argument("first", help="comma-separated degree list")
    p.add_argument("second", help="comma-separated degree list")

    p = sub.add_parser("search", help="find multidegree groups with matching keys")
    p.add_argument("--dim", type=int, required=True, metavar="N")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--max-codim", type=int, required=True)
    p.add_argument("--min-codim", type=int, default=1)
    p.add_argument("--max-total-degree", type=int, default=None)
    p.add_argument(
        "--mode", choices=[m.value for m in KeyMode], default=KeyMode.INVARIANT.value,
    )
    group = p.add_mutually_exclusive_group()
    group.add_argument("--distinct-c1", action="store_true")
    group.add_argument("--equal-c1", action="store_true")
    p.add_argument("--rigidity-pruning", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-table-size", type=int, default=5_000_000)

    p = sub.add_parser("verify-tables", help="recompute the embedded regression corpus")
    p.add_argument("--corpus", default=None, help="external corpus TOML (default: embedded)")

    p = sub.add_parser("factor", help="merged factorization of a degree product")
    p.add_argument("--degrees", required=True, help="comma-separated degree list")

    return parser


def _emit(payload: dict, fmt: str, text_lines: List[str]) -> None:
    if fmt == "machine":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_compute(args) -> int:
    md = canonicalize(_parse_degrees(args.degrees))
    pr = profile(args.dim, md, with_chern=True)
    rec = pr.to_record()
    rec["degrees"] = list(md)
    lines = [
        f"X_{pr.n}({','.join(map(str, md))})" if md else f"CP^{pr.n}",
        f"  r   = {pr.r}",
        f"  d   = {pr.d}",
        f"  c_1 = {pr.c1}",
    ]
    lines += [f"  p_{k} = {v}" for k, v in enumerate(pr.p, start=1)]
    lines.append(f"  e   = {pr.e}")
    if pr.n == 2:
        lines.append(f"  d*p_1 = {pr.d_p1}")
    _emit(rec, args.format, lines)
    return 0


def _cmd_classify(args) -> int:
    a = canonicalize(_parse_degrees(args.first))
    b = canonicalize(_parse_degrees(args.second))
    verdict = classify_pair(args.dim, a, b)
    rec = verdict.to_record()
    rec["a"] = list(a)
    rec["b"] = list(b)
    lines = [f"{verdict.relation}" + (f" [{verdict.criterion}]" if verdict.criterion else "")]
    if verdict.notes:
        lines.append(f"  {verdict.notes}")
    for name, (va, vb) in verdict.compared.items():
        marker = "=" if va == vb else "!"
        lines.append(f"  {marker} {name}: {va} vs {vb}")
    _emit(rec, args.format, lines)
    return 0


def _render_report(rep: PairReport) -> List[str]:
    lines = [f"group of {len(rep.members)} (mode={rep.key.mode.value}):"]
    for md in rep.members:
        lines.append(f"  ({','.join(map(str, md))})  c_1={rep.c1[md]}")
    fields = rep.key.to_record()["fields"]
    lines.append("  key: " + ", ".join(f"{k}={v}" for k, v in fields.items()))
    for a, b, verdict in rep.verdicts:
        lines.append(
            f"  ({','.join(map(str, a))}) vs ({','.join(map(str, b))}): "
            f"{verdict.relation}" + (f" -- {verdict.notes}" if verdict.notes else "")
        )
    return lines


def _cmd_search(args) -> int:
    config = SearchConfig(
        n=args.dim,
        max_degree=args.max_degree,
        max_codim=args.max_codim,
        min_codim=args.min_codim,
        max_total_degree=args.max_total_degree,
        mode=KeyMode(args.mode),
        require_distinct_c1=args.distinct_c1,
        require_equal_c1=args.equal_c1,
        apply_rigidity_pruning=args.rigidity_pruning,
        worker_count=args.workers,
        max_table_size=args.max_table_size,
    )
    reports = search_pairs(config)
    payload = {"groups": [rep.to_record() for rep in reports]}
    if not reports:
        _emit(payload, args.format, ["no pairs found"])
        return 0
    lines: List[str] = []
    for rep in reports:
        lines.extend(_render_report(rep))
    _emit(payload, args.format, lines)
    return 0


def _cmd_verify(args) -> int:
    report = corpus_mod.verify_corpus(args.corpus)
    lines = []
    for rec in report.records:
        status = "PASS" if rec.passed else "FAIL"
        lines.append(f"{status} {rec.id}")
        for diff in rec.failures:
            lines.append(f"    {diff.name}: expected {diff.expected}, computed {diff.computed}")
        for diff, ok in rec.informational:
            note = "matches" if ok else "differs from"
            lines.append(
                f"    info {diff.name}: computed {diff.computed} {note} recorded {diff.expected}"
            )
    for pair in report.pairs:
        status = "PASS" if pair.ok else "FAIL"
        lines.append(f"{status} pair {pair.a} / {pair.b}: claimed {pair.claim}, got {pair.relation}")
    counts = report.counts
    lines.append(
        f"{counts['records']} records ({counts['records_failed']} failed), "
        f"{counts['pairs']} pairs ({counts['pairs_failed']} failed)"
    )
    _emit(report.to_record(), args.format, lines)
    return 0 if report.passed else 1


def _cmd_factor(args) -> int:
    degrees = canonicalize(_parse_degrees(args.degrees))
    f = factorize_multidegree(degrees)
    rec = {
        "degrees": list(degrees),
        "factorization": {str(p): a for p, a in sorted(f.items())},
        "nu2": padic_valuation(f, 2),
        "nu3": padic_valuation(f, 3),
    }
    lines = [
        format_factorization(f),
        f"nu_2 = {rec['nu2']}",
        f"nu_3 = {rec['nu3']}",
    ]
    _emit(rec, args.format, lines)
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "compute": _cmd_compute,
        "classify-pair": _cmd_classify,
        "search": _cmd_search,
        "verify-tables": _cmd_verify,
        "factor": _cmd_factor,
    }
    try:
        return handlers[args.command](args)
    except corpus_mod.CorpusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SearchLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
