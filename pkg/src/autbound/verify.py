"""Property suites over a catalog plus TSV/JSON report emission.

Each suite replays one layer of the library's promises on every realized
group and emits one row per (group, check).  A false row is a defect:
everything checked here is either proved in general or frozen from an
independent oracle.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, fields as dataclass_fields
from pathlib import Path

import numpy as np

from . import config, intarith
from .aut import (
    abelian_automorphism_order,
    automorphism_count,
    automorphism_group,
    endomorphism_count,
    inner_automorphism_group,
    naive_automorphism_group,
    stretch_automorphism,
    unpruned_automorphism_group,
)
from .bounds import (
    BoundReport,
    bound_report,
    central_p_complement,
    equality_classifier,
    exp_factor_divisibility,
    schur_data,
    theorem_a_witness,
)
from .core import FiniteGroup
from .corpus import CatalogRecord, realize_record
from .decomp import (
    internal_product_bijective,
    primary_decomposition,
    split_cyclic_containing,
    split_over_subgroup,
)

SUITE_IDS = ("core", "abelian", "aut", "bounds", "theorem_a", "conjectures")

EXHAUSTIVE_SPLIT_MAX_ORDER = 32
NAIVE_ORACLE_MAX_ORDER = 8
UNPRUNED_ORACLE_MAX_ORDER = 16


@dataclass(frozen=True)
class VerifyRow:
    suite: str
    group: str
    check: str
    ok: bool
    detail: str = ""


def _str_capacity(digits: int) -> None:
    """Lift the interpreter's int-to-decimal guard up to the given need."""
    if digits > 0 and hasattr(sys, "set_int_max_str_digits"):
        if digits > sys.get_int_max_str_digits():
            sys.set_int_max_str_digits(digits + 16)


def _decimal(value: int) -> str:
    """Decimal text for arbitrarily large report integers."""
    _str_capacity(abs(value).bit_length() // 3 + 4)
    return str(value)


def _max_int_bits(obj) -> int:
    if isinstance(obj, bool):
        return 0
    if isinstance(obj, int):
        return obj.bit_length()
    if isinstance(obj, dict):
        return max((_max_int_bits(v) for v in obj.values()), default=0)
    if isinstance(obj, (list, tuple)):
        return max((_max_int_bits(v) for v in obj), default=0)
    return 0


def _row(suite: str, G: FiniteGroup, check: str, ok: bool, detail: str = "") -> VerifyRow:
    return VerifyRow(suite, G.name, check, bool(ok), detail)


def _suite_core(G: FiniteGroup, record: CatalogRecord) -> list[VerifyRow]:
    rows = [_row("core", G, "realized", True, f"order {G.order}")]
    if record.expected_order is not None:
        rows.append(
            _row("core", G, "order_expected", G.order == record.expected_order)
        )
    orders = G.element_orders
    rows.append(
        _row("core", G, "exponent_lcm", G.exponent == intarith.lcm_all(orders))
    )
    t = G.table
    z = np.array(G.center.members)
    rows.append(
        _row("core", G, "center_commutes", bool((t[z, :] == t[:, z].T).all()))
    )
    rows.append(_row("core", G, "derived_normal", G.commutator_subgroup.is_normal))
    ab, _ = G.quotient(G.commutator_subgroup)
    rows.append(_row("core", G, "abelianization_abelian", ab.is_abelian))
    inv = np.array(G.inverses)
    rows.append(
        _row(
            "core", G, "inverses",
            bool((t[np.arange(G.order), inv] == G.identity).all()),
        )
    )
    return rows


def _suite_abelian(G: FiniteGroup) -> list[VerifyRow]:
    if not G.is_abelian:
        return []
    rows = []
    dec = primary_decomposition(G)
    product = intarith.product(f.order for f in dec.factors)
    rows.append(_row("abelian", G, "primary_decomposition", product == G.order))
    per_prime: dict[int, int] = {}
    for f in dec.factors:
        per_prime[f.prime] = per_prime.get(f.prime, 0) + 1
    rows.append(
        _row(
            "abelian", G, "min_generators",
            G.min_generating_size() == max(per_prime.values(), default=0),
        )
    )
    if G.order <= EXHAUSTIVE_SPLIT_MAX_ORDER:
        orders = G.element_orders
        ok = True
        tried = 0
        for a in range(G.order):
            if not intarith.is_prime(orders[a]):
                continue
            tried += 1
            factor, comp = split_cyclic_containing(G, a)
            b_members = G.subgroup_generated([factor.generator]).members
            ok = ok and a in b_members
            ok = ok and internal_product_bijective(G, b_members, comp.members)
        rows.append(
            _row("abelian", G, "split_cyclic_all", ok, f"{tried} prime-order elements")
        )
        ok = True
        subs = G.all_subgroups()
        for B in subs:
            C, D = split_over_subgroup(G, B)
            ok = ok and set(B.members) <= set(C.members)
            ok = ok and C.as_group()[0].min_generating_size() <= B.order
            ok = ok and internal_product_bijective(G, C.members, D.members)
        rows.append(
            _row("abelian", G, "split_subgroups_all", ok, f"{len(subs)} subgroups")
        )
    return rows


def _suite_aut(G: FiniteGroup, record: CatalogRecord, n: int) -> list[VerifyRow]:
    rows = []
    if record.expected_aut_order is not None:
        rows.append(
            _row(
                "aut", G, "count_expected",
                n == record.expected_aut_order,
                f"expected {record.expected_aut_order}, got {n}",
            )
        )
    if (
        G.is_abelian
        and G.order <= config.AUT_MAX_GROUP_ORDER
        and n <= config.AUT_MAX_ELEMENTS
    ):
        enumerated = automorphism_group(G).order
        rows.append(
            _row(
                "aut", G, "formula_vs_enumeration",
                enumerated == abelian_automorphism_order(G),
                f"enumerated {enumerated}",
            )
        )
    inn = inner_automorphism_group(G)
    rows.append(
        _row("aut", G, "inner_index", inn.order == G.order // G.center.order)
    )
    if G.order <= NAIVE_ORACLE_MAX_ORDER:
        rows.append(_row("aut", G, "naive_agree", naive_automorphism_group(G).order == n))
    if G.order <= UNPRUNED_ORACLE_MAX_ORDER:
        rows.append(
            _row("aut", G, "unpruned_agree", unpruned_automorphism_group(G).order == n)
        )
    data = stretch_automorphism(G, aut_order=n)
    rows.append(
        _row(
            "aut", G, "stretch", n % data.automorphism.order() == 0,
            f"N={data.shift}",
        )
    )
    return rows


def _suite_bounds(G: FiniteGroup, n: int) -> list[VerifyRow]:
    rows = []
    report = bound_report(G, n)
    for e in report.entries:
        check = f"bound_{e.bound_id}" + (f"_p{e.param}" if e.param is not None else "")
        rhs = e.rhs_note if e.rhs is None else _decimal(e.rhs)
        rows.append(_row("bounds", G, check, e.holds, f"{e.lhs} <= {rhs}"))
    cls = equality_classifier(G, report)
    rows.append(
        _row(
            "bounds", G, "reverse_equality_class", True,
            f"equality={cls.reverse_equality} prime={cls.prime_order} boolean={cls.boolean}",
        )
    )
    gamma_size, width, m = schur_data(G)
    all_pairs = {G.commutator(a, b) for a in range(G.order) for b in range(G.order)}
    reps_pairs = gamma_size
    rows.append(
        _row(
            "bounds", G, "commutators_coset_invariant",
            len(all_pairs) == reps_pairs,
            f"|Gamma|={gamma_size} width={width} m={m}",
        )
    )
    for i, (order, ok) in enumerate(exp_factor_divisibility(G, n)):
        rows.append(_row("bounds", G, f"exp_divides[{i}]", ok, f"factor order {order}"))
    for p in intarith.prime_divisors(G.order):
        if intarith.p_part(G.order, p) == intarith.p_part(G.center.order, p):
            result = central_p_complement(G, p)
            rows.append(
                _row(
                    "bounds", G, f"sz_complement_p{p}", result is not None,
                    "" if result is None else f"|Q|={result[1].order}",
                )
            )
    return rows


def _suite_theorem_a(G: FiniteGroup, n: int) -> list[VerifyRow]:
    w = theorem_a_witness(G, n)
    detail = f"m={w.m} |U|={w.U.order} |C|={w.C.order} |D|={w.D.order}"
    return [_row("theorem_a", G, check, ok, detail) for check, ok in w.checks]


def _suite_conjectures(G: FiniteGroup, n: int) -> list[VerifyRow]:
    rows = [
        _row(
            "conjectures", G, "phi_le_aut",
            intarith.totient(G.order) <= n,
            f"phi={intarith.totient(G.order)} n={n}",
        )
    ]
    if G.order <= config.END_MAX_GROUP_ORDER:
        end = endomorphism_count(G)
        rows.append(
            _row("conjectures", G, "order_le_end", G.order <= end, f"|End|={end}")
        )
    return rows


def run_suites(
    records,
    suites=SUITE_IDS,
    *,
    max_order: int | None = None,
    base_dir: str | Path | None = None,
) -> list[VerifyRow]:
    """Run the named suites over realized records, in canonical suite order."""
    chosen = tuple(suites)
    unknown = [s for s in chosen if s not in SUITE_IDS]
    if unknown:
        raise ValueError(f"unknown suite ids {unknown}; valid: {list(SUITE_IDS)}")
    realized = [
        (r, realize_record(r, max_order=max_order, base_dir=base_dir)) for r in records
    ]
    needs_n = {"aut", "bounds", "theorem_a", "conjectures"} & set(chosen)
    counts = {id(G): automorphism_count(G) for _, G in realized} if needs_n else {}
    rows: list[VerifyRow] = []
    for suite in SUITE_IDS:
        if suite not in chosen:
            continue
        for record, G in realized:
            if suite == "core":
                rows.extend(_suite_core(G, record))
            elif suite == "abelian":
                rows.extend(_suite_abelian(G))
            elif suite == "aut":
                rows.extend(_suite_aut(G, record, counts[id(G)]))
            elif suite == "bounds":
                rows.extend(_suite_bounds(G, counts[id(G)]))
            elif suite == "theorem_a":
                rows.extend(_suite_theorem_a(G, counts[id(G)]))
            elif suite == "conjectures":
                rows.extend(_suite_conjectures(G, counts[id(G)]))
    return rows


def rows_to_dicts(rows) -> list[dict]:
    """Dataclass rows to dicts, keys in field declaration order."""
    out = []
    for r in rows:
        out.append({f.name: getattr(r, f.name) for f in dataclass_fields(r)})
    return out


def bound_report_to_dict(report: BoundReport) -> dict:
    """Nested JSON object for one report, field names verbatim."""
    return {
        "group_name": report.group_name,
        "order": report.order,
        "n": report.n,
        "entries": [
            {
                "bound_id": e.bound_id,
                "param": e.param,
                "lhs": e.lhs,
                "rhs": e.rhs,
                "rhs_note": e.rhs_note,
                "holds": e.holds,
                "equality": e.equality,
            }
            for e in report.entries
        ],
        "phi_value": report.phi_value,
        "end_count": report.end_count,
    }


def bound_report_to_rows(report: BoundReport) -> list[dict]:
    """Flat per-entry dicts for TSV emission."""
    return [
        {
            "group": report.group_name,
            "order": report.order,
            "n": report.n,
            "bound_id": e.bound_id,
            "param": e.param,
            "lhs": e.lhs,
            "rhs": e.rhs,
            "rhs_note": e.rhs_note,
            "holds": e.holds,
            "equality": e.equality,
        }
        for e in report.entries
    ]


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)  # capacity lifted once per emission


def render_report(rows, format: str, *, fields=None) -> str:
    """Rows (mappings) as TSV or JSON text; byte-deterministic.

    TSV: header then one tab-separated line per row, LF endings, big
    integers in decimal, booleans as true/false, None as empty.  JSON:
    the rows array verbatim with insertion-ordered keys.  fields names
    the TSV columns; inferred from the first row when omitted.
    """
    rows = list(rows)
    _str_capacity(_max_int_bits(rows) // 3 + 4)
    if format == "json":
        return json.dumps(rows, indent=2, ensure_ascii=False) + "\n"
    if format == "tsv":
        if fields is None:
            if not rows:
                raise ValueError("empty TSV report needs explicit fields")
            fields = list(rows[0].keys())
        lines = ["\t".join(fields)]
        for r in rows:
            lines.append("\t".join(_cell(r.get(f)) for f in fields))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {format!r}; expected tsv or json")


def emit_report(rows, format: str, path, *, fields=None) -> None:
    """Write render_report output to a file."""
    text = render_report(rows, format, fields=fields)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
