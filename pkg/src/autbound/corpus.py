"""Catalog of small groups: text format, bundled corpus, classification.

Catalog records name a group and say how to build it: explicit generator
permutations, a Cayley-table file, or a builtin constructor.  The bundled
corpus covers every abelian group of order at most 64, the dihedral,
generalized quaternion, and semidihedral 2-families up to order 64, the
small symmetric and alternating groups, and assorted direct products.
Each bundled record carries its expected order and automorphism count,
so parsing the file back doubles as a regression suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

import numpy as np

from . import errors, intarith
from .aut import automorphism_count
from .core import (
    FiniteGroup,
    _order_guard,
    abelian,
    dicyclic,
    dihedral,
    direct_product,
    find_isomorphism,
    from_generators,
    quaternion8,
    read_cayley_table,
    standard_group,
    symmetric,
)


@dataclass(frozen=True)
class GeneratorSource:
    """Permutations of 0..degree-1 generating the group."""

    degree: int
    generators: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CayleySource:
    """Path to a whitespace Cayley-table file, relative to the catalog."""

    path: str


@dataclass(frozen=True)
class BuiltinSource:
    """Named constructor with integer arguments."""

    kind: str
    args: tuple[int, ...]


@dataclass(frozen=True)
class CatalogRecord:
    name: str
    source: GeneratorSource | CayleySource | BuiltinSource
    expected_order: int | None = None
    expected_aut_order: int | None = None


def _alternating4(*, name: str = "A4") -> FiniteGroup:
    return from_generators([(1, 2, 0, 3), (1, 0, 3, 2)], name=name)


def _semidihedral(k: int, *, name: str | None = None) -> FiniteGroup:
    """Semidihedral group of order 2^k, k >= 4: s r s = r^(2^(k-2) - 1)."""
    if k < 4:
        raise ValueError(f"semidihedral groups need order >= 16, got 2^{k}")
    n = 1 << (k - 1)
    _order_guard(2 * n)
    twist = (n >> 1) - 1  # r -> r^twist under conjugation by s
    idx = np.arange(2 * n, dtype=np.int32)
    i1, j1 = (idx % n)[:, None], (idx // n)[:, None]
    i2, j2 = (idx % n)[None, :], (idx // n)[None, :]
    scale = np.where(j1 == 1, twist, 1)
    table = (i1 + scale * i2) % n + n * (j1 ^ j2)
    return FiniteGroup(table, name=name or f"SD{2 * n}")


_EXTRA_BUILTINS = {
    "semidihedral": _semidihedral,
    "alternating4": _alternating4,
}


def realize_record(
    record: CatalogRecord,
    *,
    max_order: int | None = None,
    base_dir: str | Path | None = None,
) -> FiniteGroup:
    """Build the group a record describes and check its expectations.

    base_dir anchors relative Cayley-table paths (defaults to cwd).
    """
    src = record.source
    if isinstance(src, GeneratorSource):
        for g in src.generators:
            if len(g) != src.degree:
                raise errors.InvalidPermutation(
                    f"{record.name}: generator length {len(g)} != degree {src.degree}"
                )
        G = from_generators(src.generators, max_order=max_order, name=record.name)
    elif isinstance(src, CayleySource):
        path = Path(src.path)
        if not path.is_absolute() and base_dir is not None:
            path = Path(base_dir) / path
        G = read_cayley_table(path, name=record.name)
    elif isinstance(src, BuiltinSource):
        builder = _EXTRA_BUILTINS.get(src.kind)
        if builder is not None:
            G = builder(*src.args, name=record.name)
        else:
            G = standard_group(src.kind, *src.args)
            G.name = record.name
    else:
        raise TypeError(f"unknown source type {type(src).__name__}")
    if record.expected_order is not None and G.order != record.expected_order:
        raise errors.ExpectationMismatch(
            f"{record.name}: expected order {record.expected_order}, got {G.order}"
        )
    return G


def parse_catalog(path: str | Path) -> list[CatalogRecord]:
    """Read a catalog file; records come back in file order."""
    records: list[CatalogRecord] = []
    seen: set[str] = set()
    name: str | None = None
    degree: int | None = None
    gens: list[tuple[int, ...]] = []
    cayley: str | None = None
    builtin: tuple[str, tuple[int, ...]] | None = None
    expect_order: int | None = None
    expect_aut: int | None = None

    def fail(lineno: int, msg: str) -> None:
        raise errors.CatalogError(f"{path}:{lineno}: {msg}")

    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            key = fields[0]
            if key == "group":
                if name is not None:
                    fail(lineno, f"record {name!r} not closed with 'end'")
                if len(fields) != 2:
                    fail(lineno, "expected: group <name>")
                name = fields[1]
                if name in seen:
                    raise errors.DuplicateName(f"{path}:{lineno}: duplicate group {name!r}")
                continue
            if name is None:
                fail(lineno, f"{key!r} outside a group record")
            if key == "degree":
                if len(fields) != 2 or not fields[1].isdigit():
                    fail(lineno, "expected: degree <d>")
                degree = int(fields[1])
            elif key == "gen":
                try:
                    gens.append(tuple(int(v) for v in fields[1:]))
                except ValueError:
                    fail(lineno, "gen images must be integers")
                if not gens[-1]:
                    fail(lineno, "gen needs at least one image")
            elif key == "cayley":
                if len(fields) != 2:
                    fail(lineno, "expected: cayley <path>")
                cayley = fields[1]
            elif key == "builtin":
                if len(fields) < 2:
                    fail(lineno, "expected: builtin <kind> [args]")
                try:
                    builtin = (fields[1], tuple(int(v) for v in fields[2:]))
                except ValueError:
                    fail(lineno, "builtin args must be integers")
            elif key == "expect":
                if len(fields) != 3 or fields[1] not in ("order", "aut"):
                    fail(lineno, "expected: expect order|aut <k>")
                try:
                    value = int(fields[2])
                except ValueError:
                    fail(lineno, "expect value must be an integer")
                if fields[1] == "order":
                    expect_order = value
                else:
                    expect_aut = value
            elif key == "end":
                bodies = [gens or None, cayley, builtin]
                if sum(b is not None for b in bodies) != 1:
                    fail(lineno, f"record {name!r} needs exactly one of gen/cayley/builtin")
                if gens:
                    if degree is None:
                        fail(lineno, f"record {name!r} has gen lines but no degree")
                    source: GeneratorSource | CayleySource | BuiltinSource
                    source = GeneratorSource(degree, tuple(gens))
                elif cayley is not None:
                    source = CayleySource(cayley)
                else:
                    source = BuiltinSource(*builtin)
                records.append(CatalogRecord(name, source, expect_order, expect_aut))
                seen.add(name)
                name = degree = cayley = builtin = None
                gens = []
                expect_order = expect_aut = None
            else:
                fail(lineno, f"unknown directive {key!r}")
    if name is not None:
        raise errors.CatalogError(f"{path}: record {name!r} not closed at end of file")
    return records


def serialize_catalog(records) -> str:
    """Render records in the catalog text format (inverse of parse_catalog)."""
    out: list[str] = []
    for r in records:
        out.append(f"group {r.name}")
        src = r.source
        if isinstance(src, GeneratorSource):
            out.append(f"degree {src.degree}")
            for g in src.generators:
                out.append("gen " + " ".join(str(v) for v in g))
        elif isinstance(src, CayleySource):
            out.append(f"cayley {src.path}")
        elif isinstance(src, BuiltinSource):
            out.append(f"builtin {src.kind}" + "".join(f" {a}" for a in src.args))
        else:
            raise TypeError(f"unknown source type {type(src).__name__}")
        if r.expected_order is not None:
            out.append(f"expect order {r.expected_order}")
        if r.expected_aut_order is not None:
            out.append(f"expect aut {r.expected_aut_order}")
        out.append("end")
        out.append("")
    return "\n".join(out)


def write_catalog(records, path: str | Path) -> None:
    Path(path).write_text(serialize_catalog(records), encoding="utf-8")


def record_for_group(G: FiniteGroup, *, with_aut: bool = True) -> CatalogRecord:
    """Generator record for G via its left-regular representation.

    Row g of the Cayley table is the permutation x -> gx; the rows of a
    minimal generating set generate an isomorphic copy inside Sym(|G|).
    """
    gens = G.minimal_generating_tuple() or (G.identity,)
    rows = tuple(tuple(int(v) for v in G.table[g]) for g in gens)
    return CatalogRecord(
        G.name,
        GeneratorSource(G.order, rows),
        expected_order=G.order,
        expected_aut_order=automorphism_count(G) if with_aut else None,
    )


def _partitions(n: int) -> list[tuple[int, ...]]:
    def rec(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for k in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - k, k):
                yield (k,) + rest

    return list(rec(n, n))


def _invariant_name(factors) -> str:
    """Canonical name from prime-power factors via invariant factors.

    Largest prime powers across primes multiply into the first invariant
    factor, the next largest into the second, and so on: [4,3,2] -> C12xC2.
    """
    per_prime: dict[int, list[int]] = {}
    for q in factors:
        p = intarith.prime_divisors(q)[0]
        per_prime.setdefault(p, []).append(q)
    for qs in per_prime.values():
        qs.sort(reverse=True)
    depth = max((len(qs) for qs in per_prime.values()), default=0)
    invariants = [
        intarith.product(qs[i] for qs in per_prime.values() if i < len(qs))
        for i in range(depth)
    ]
    if not invariants:
        return "C1"
    return "x".join(f"C{d}" for d in invariants)


def abelian_groups_of_order(n: int) -> list[FiniteGroup]:
    """One group per isomorphism class, named by invariant factors."""
    choices = [
        [tuple(p**e for e in part) for part in _partitions(mult)]
        for p, mult in sorted(intarith.prime_factorization(n).items())
    ]
    out = []
    for combo in itertools.product(*choices) if n > 1 else [()]:
        factors = [q for qs in combo for q in qs]
        out.append(abelian(factors, name=_invariant_name(factors)))
    return out


def _standard_groups() -> list[FiniteGroup]:
    groups: list[FiniteGroup] = []
    for n in range(1, 65):
        groups.extend(abelian_groups_of_order(n))
    for n in range(3, 33):
        groups.append(dihedral(n))
    for m in (4, 8, 16):
        groups.append(dicyclic(m, name=f"Q{4 * m}"))
    groups.append(quaternion8())
    for k in (4, 5, 6):
        groups.append(_semidihedral(k))
    groups.append(symmetric(3))
    groups.append(symmetric(4))
    groups.append(_alternating4())
    pairs = [
        ("C2xS3", cyclic_named(2), symmetric(3)),
        ("C3xS3", cyclic_named(3), symmetric(3)),
        ("C5xS3", cyclic_named(5), symmetric(3)),
        ("C2xA4", cyclic_named(2), _alternating4()),
        ("C2xD4", cyclic_named(2), dihedral(4)),
        ("C3xD4", cyclic_named(3), dihedral(4)),
        ("C2xQ8", cyclic_named(2), quaternion8()),
        ("C3xQ8", cyclic_named(3), quaternion8()),
    ]
    for name, A, B in pairs:
        G, _, _ = direct_product(A, B, name=name)
        groups.append(G)
    return groups


def cyclic_named(n: int) -> FiniteGroup:
    return abelian([n], name=f"C{n}")


@lru_cache(maxsize=1)
def standard_corpus() -> tuple[CatalogRecord, ...]:
    """Bundled corpus as generator records with frozen expectations."""
    return tuple(record_for_group(G) for G in _standard_groups())


def write_standard_catalog(path: str | Path) -> None:
    write_catalog(standard_corpus(), path)


def standard_catalog_text() -> str:
    """Contents of the bundled catalog file."""
    return (
        resources.files("autbound").joinpath("data/standard.catalog").read_text("utf-8")
    )


def load_standard_catalog() -> list[CatalogRecord]:
    """Parse the bundled catalog shipped inside the package."""
    with resources.as_file(
        resources.files("autbound").joinpath("data/standard.catalog")
    ) as p:
        return parse_catalog(p)


@dataclass(frozen=True)
class ClassificationRow:
    aut_order: int
    group_order: int
    name: str


def classify_by_aut(
    records,
    max_aut: int,
    *,
    max_order: int | None = None,
    base_dir: str | Path | None = None,
) -> tuple[ClassificationRow, ...]:
    """Groups with at most max_aut automorphisms, one per isomorphism class.

    Sorted by (aut order, group order, name); the first name in that order
    represents each class, so the output is stable under corpus reshuffling.
    """
    candidates = []
    for record in records:
        G = realize_record(record, max_order=max_order, base_dir=base_dir)
        n = automorphism_count(G)
        if record.expected_aut_order is not None and n != record.expected_aut_order:
            raise errors.ExpectationMismatch(
                f"{record.name}: expected {record.expected_aut_order} automorphisms, got {n}"
            )
        if n <= max_aut:
            candidates.append((n, G.order, G.name, G))
    candidates.sort(key=lambda t: t[:3])
    kept: list[tuple[int, int, str, FiniteGroup]] = []
    for n, order, name, G in candidates:
        duplicate = any(
            n == kn and order == korder and find_isomorphism(G, kG) is not None
            for kn, korder, _, kG in kept
        )
        if not duplicate:
            kept.append((n, order, name, G))
    return tuple(ClassificationRow(n, o, name) for n, o, name, _ in kept)
