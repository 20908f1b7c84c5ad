"""Command line surface.

Subcommands: info, aut, decompose, bounds (single group each), classify
(finiteness snapshot over a corpus), verify (property suites).  A group
argument is either a name from the bundled catalog, a catalog file with
one record, or a Cayley-table file.  AUTBOUND_MAX_ORDER overrides the
order cap; AUTBOUND_BACKEND picks the compute backend.

Exit codes: 0 all checks pass, 1 a check failed, 2 input error.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from pathlib import Path

from . import errors
from .aut import automorphism_count, inner_automorphism_group
from .bounds import bound_report
from .core import FiniteGroup, read_cayley_table
from .corpus import classify_by_aut, load_standard_catalog, parse_catalog, realize_record
from .decomp import primary_decomposition
from .verify import (
    SUITE_IDS,
    bound_report_to_dict,
    bound_report_to_rows,
    emit_report,
    render_report,
    rows_to_dicts,
    run_suites,
)


def _looks_like_catalog(path: Path) -> bool:
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if line:
                return line.split()[0] == "group"
    return False


def _resolve_group(target: str) -> FiniteGroup:
    path = Path(target)
    if path.exists():
        if _looks_like_catalog(path):
            records = parse_catalog(path)
            if len(records) != 1:
                names = ", ".join(r.name for r in records) or "none"
                raise errors.CatalogError(
                    f"{target} holds {len(records)} records ({names}); name one group"
                )
            return realize_record(records[0], base_dir=path.parent)
        return read_cayley_table(path, name=path.stem)
    for record in load_standard_catalog():
        if record.name == target:
            return realize_record(record)
    raise errors.CatalogError(
        f"{target!r} is neither a file nor a bundled group name"
    )


def _profile(G: FiniteGroup) -> str:
    counts = Counter(G.element_orders)
    return " ".join(f"{order}^{counts[order]}" for order in sorted(counts))


def _cmd_info(args) -> int:
    G = _resolve_group(args.group)
    print(f"name: {G.name}")
    print(f"order: {G.order}")
    print(f"abelian: {'yes' if G.is_abelian else 'no'}")
    print(f"exponent: {G.exponent}")
    print(f"center order: {G.center.order}")
    print(f"derived order: {G.commutator_subgroup.order}")
    print(f"min generators: {G.min_generating_size()}")
    print(f"element orders: {_profile(G)}")
    return 0


def _cmd_aut(args) -> int:
    G = _resolve_group(args.group)
    n = automorphism_count(G)
    print(f"group: {G.name}")
    print(f"aut order: {n}")
    print(f"method: {'abelian formula' if G.is_abelian else 'enumeration'}")
    print(f"inner order: {inner_automorphism_group(G).order}")
    return 0


def _cmd_decompose(args) -> int:
    G = _resolve_group(args.group)
    print(f"group: {G.name}")
    if G.is_abelian:
        dec = primary_decomposition(G)
        shape = " x ".join(f"C{f.order}" for f in dec.factors) or "C1"
        print(f"primary decomposition: {shape}")
        for f in dec.factors:
            print(f"  factor: generator {f.generator}, order {f.order}")
        return 0
    print("abelian: no")
    print(f"center order: {G.center.order}")
    print(f"derived order: {G.commutator_subgroup.order}")
    ab, _ = G.quotient(G.commutator_subgroup)
    shape = " x ".join(f"C{f.order}" for f in primary_decomposition(ab).factors) or "C1"
    print(f"abelianization: {shape}")
    return 0


def _cmd_bounds(args) -> int:
    G = _resolve_group(args.group)
    report = bound_report(G, automorphism_count(G))
    if args.format == "json":
        text = render_report([bound_report_to_dict(report)], "json")
    else:
        text = render_report(bound_report_to_rows(report), "tsv")
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0 if report.all_hold else 1


def _load_corpus(corpus_arg):
    if corpus_arg is None:
        return load_standard_catalog(), None
    path = Path(corpus_arg)
    return parse_catalog(path), path.parent


def _cmd_classify(args) -> int:
    records, base_dir = _load_corpus(args.corpus)
    rows = classify_by_aut(records, args.max_aut, base_dir=base_dir)
    print("aut_order\tgroup_order\tname")
    for r in rows:
        print(f"{r.aut_order}\t{r.group_order}\t{r.name}")
    return 0


def _cmd_verify(args) -> int:
    records, base_dir = _load_corpus(args.corpus)
    suites = tuple(args.suite) if args.suite else SUITE_IDS
    rows = run_suites(records, suites, base_dir=base_dir)
    failures = [r for r in rows if not r.ok]
    if args.out:
        emit_report(
            rows_to_dicts(rows), args.format, args.out,
            fields=["suite", "group", "check", "ok", "detail"],
        )
    by_suite = Counter(r.suite for r in rows)
    fail_by_suite = Counter(r.suite for r in failures)
    for suite in SUITE_IDS:
        if suite in by_suite:
            print(f"suite {suite}: {by_suite[suite]} checks, {fail_by_suite[suite]} failures")
    print(f"total: {len(rows)} checks, {len(failures)} failures")
    for r in failures[:20]:
        print(f"FAIL {r.suite} {r.group} {r.check} {r.detail}", file=sys.stderr)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="autbound",
        description="Finite group automorphism bounds: reports, witnesses, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="structural summary of one group")
    p.add_argument("group", help="bundled name, catalog file, or Cayley-table file")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("aut", help="automorphism count of one group")
    p.add_argument("group")
    p.set_defaults(func=_cmd_aut)

    p = sub.add_parser("decompose", help="primary decomposition (abelianization if nonabelian)")
    p.add_argument("group")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("bounds", help="full inequality report for one group")
    p.add_argument("group")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("classify", help="groups with at most N automorphisms")
    p.add_argument("--max-aut", type=int, required=True)
    p.add_argument("--corpus", help="catalog file (default: bundled corpus)")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="run property suites over a corpus")
    p.add_argument(
        "--suite", action="append", choices=SUITE_IDS,
        help="suite to run (repeatable; default: all)",
    )
    p.add_argument("--corpus", help="catalog file (default: bundled corpus)")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--out", help="write all result rows here")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (errors.AutboundError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
