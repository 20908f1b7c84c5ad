"""Catalog parsing, the bundled corpus, and classification by Aut order."""

from __future__ import annotations

import pytest

from autbound import core, corpus, errors
from autbound.corpus import (
    BuiltinSource,
    CatalogRecord,
    CayleySource,
    GeneratorSource,
    abelian_groups_of_order,
    classify_by_aut,
    load_standard_catalog,
    parse_catalog,
    realize_record,
    record_for_group,
    serialize_catalog,
    standard_catalog_text,
    standard_corpus,
    write_catalog,
)


# -- naming ---------------------------------------------------------------------


def test_invariant_names():
    assert corpus._invariant_name([4, 3, 2]) == "C12xC2"
    assert corpus._invariant_name([2, 3]) == "C6"
    assert corpus._invariant_name([8]) == "C8"
    assert corpus._invariant_name([2, 2, 2]) == "C2xC2xC2"
    assert corpus._invariant_name([]) == "C1"
    assert corpus._invariant_name([9, 3, 2]) == "C18xC3"


def test_abelian_groups_of_order_counts():
    # Number of isomorphism classes = product of partition counts.
    assert len(abelian_groups_of_order(1)) == 1
    assert len(abelian_groups_of_order(16)) == 5
    assert len(abelian_groups_of_order(36)) == 4
    assert len(abelian_groups_of_order(64)) == 11
    names = {G.name for G in abelian_groups_of_order(8)}
    assert names == {"C8", "C4xC2", "C2xC2xC2"}
    for G in abelian_groups_of_order(24):
        assert G.order == 24 and G.is_abelian


def test_abelian_groups_pairwise_nonisomorphic():
    groups = abelian_groups_of_order(16)
    for i, G in enumerate(groups):
        for H in groups[i + 1 :]:
            assert core.find_isomorphism(G, H) is None


# -- record realization ------------------------------------------------------------


def test_realize_builtin_sources():
    rec = CatalogRecord("C10", BuiltinSource("cyclic", (10,)), 10, 4)
    G = realize_record(rec)
    assert G.order == 10 and G.name == "C10"
    sd = realize_record(CatalogRecord("SD16", BuiltinSource("semidihedral", (4,)), 16, None))
    assert sd.order == 16
    a4 = realize_record(CatalogRecord("A4", BuiltinSource("alternating4", ()), 12, None))
    assert core.find_isomorphism(a4, core.symmetric(4).commutator_subgroup.as_group()[0])


def test_realize_generator_source(s3):
    rec = record_for_group(s3)
    assert isinstance(rec.source, GeneratorSource)
    assert rec.expected_order == 6
    assert rec.expected_aut_order == 6
    G = realize_record(rec)
    assert core.find_isomorphism(G, s3) is not None


def test_realize_cayley_source(tmp_path, q8):
    path = tmp_path / "q8.cayley"
    core.write_cayley_table(q8, path)
    rec = CatalogRecord("Q8file", CayleySource("q8.cayley"), 8, None)
    G = realize_record(rec, base_dir=tmp_path)
    assert G.order == 8 and G.name == "Q8file"
    abs_rec = CatalogRecord("Q8abs", CayleySource(str(path)), 8, None)
    assert realize_record(abs_rec).order == 8


def test_realize_order_expectation_mismatch():
    rec = CatalogRecord("C10", BuiltinSource("cyclic", (10,)), 11, None)
    with pytest.raises(errors.ExpectationMismatch):
        realize_record(rec)


def test_realize_rejects_bad_generator_degree():
    rec = CatalogRecord("bad", GeneratorSource(3, ((1, 0),)), None, None)
    with pytest.raises(errors.InvalidPermutation):
        realize_record(rec)


def test_semidihedral_structure():
    # Order 16: one order-8 rotation subgroup, s r s = r^3.
    G = corpus._semidihedral(4)
    assert G.order == 16
    # r^4 and the four even reflections square to e; odd reflections hit r^4.
    assert G.order_profile == ((1, 1), (2, 5), (4, 6), (8, 4))
    for other in (core.dihedral(8), core.dicyclic(4), core.abelian([16])):
        assert core.find_isomorphism(G, other) is None
    bigger = corpus._semidihedral(5)
    assert bigger.order == 32 and bigger.center.order == 2


# -- catalog file format --------------------------------------------------------------


SAMPLE = """\
# sample catalog
group S3
degree 3
gen 1 0 2
gen 0 2 1
expect order 6
expect aut 6
end

group K4
builtin abelian 2 2
expect order 4
end
"""


def test_parse_catalog_round_trip(tmp_path):
    path = tmp_path / "sample.catalog"
    path.write_text(SAMPLE)
    records = parse_catalog(path)
    assert [r.name for r in records] == ["S3", "K4"]
    assert records[0].expected_aut_order == 6
    assert isinstance(records[0].source, GeneratorSource)
    assert records[0].source.generators == ((1, 0, 2), (0, 2, 1))
    assert isinstance(records[1].source, BuiltinSource)
    assert realize_record(records[0]).order == 6

    out = tmp_path / "copy.catalog"
    write_catalog(records, out)
    assert parse_catalog(out) == records
    # Serialization is a fixed point once parsed.
    assert serialize_catalog(parse_catalog(out)) == out.read_text()


@pytest.mark.parametrize(
    "body,fragment",
    [
        ("gen 0 1\n", "gen"),
        ("group A\ngroup B\n", "not closed"),
        ("group A\nbuiltin cyclic 3\nexpect order x\nend\n", "x"),
        ("group A\nend\n", "exactly one"),
        ("group A\nbuiltin cyclic 3\n", "end of file"),
        ("group A\nbuiltin cyclic 3\nend\ngroup A\nbuiltin cyclic 3\nend\n", "A"),
        ("group A\ndegree 3\ngen 1 0 2\nbuiltin cyclic 3\nend\n", "exactly one"),
        ("group A\nwobble 3\nend\n", "wobble"),
    ],
)
def test_parse_catalog_errors(tmp_path, body, fragment):
    path = tmp_path / "bad.catalog"
    path.write_text(body)
    with pytest.raises(errors.CatalogError) as exc:
        parse_catalog(path)
    text = str(exc.value)
    assert "bad.catalog" in text  # every message carries its path:lineno
    assert fragment in text


def test_duplicate_name_is_catalog_error_subclass(tmp_path):
    path = tmp_path / "dup.catalog"
    path.write_text("group A\nbuiltin cyclic 2\nend\ngroup A\nbuiltin cyclic 2\nend\n")
    with pytest.raises(errors.DuplicateName):
        parse_catalog(path)
    assert issubclass(errors.DuplicateName, errors.CatalogError)


def test_parse_error_carries_line_number(tmp_path):
    path = tmp_path / "lined.catalog"
    path.write_text("group A\nbuiltin cyclic 2\nend\n\nbogus line\n")
    with pytest.raises(errors.CatalogError, match=r"lined\.catalog:5"):
        parse_catalog(path)


# -- the bundled corpus ------------------------------------------------------------------


def test_standard_corpus_shape():
    records = standard_corpus()
    assert len(records) == 165
    names = [r.name for r in records]
    assert len(set(names)) == 165
    for r in records:
        assert r.expected_order is not None
        assert r.expected_aut_order is not None
        assert isinstance(r.source, GeneratorSource)
    assert "C1" in names and "Q8" in names and "SD16" in names and "S4" in names


def test_standard_corpus_covers_all_abelian_through_64():
    records = standard_corpus()
    names = {r.name for r in records}
    total = 0
    for n in range(1, 65):
        for A in abelian_groups_of_order(n):
            assert A.name in names, A.name
            total += 1
    assert total == 117


def test_bundled_catalog_matches_generated():
    assert standard_catalog_text() == serialize_catalog(standard_corpus())
    records = load_standard_catalog()
    assert list(records) == list(standard_corpus())


def test_corpus_realizes_with_correct_orders():
    for rec in standard_corpus()[:30]:
        G = realize_record(rec)
        assert G.order == rec.expected_order


def test_semidihedral_and_quaternion_records_differ():
    by_name = {r.name: r for r in standard_corpus()}
    sd = realize_record(by_name["SD16"])
    q16 = realize_record(by_name["Q16"])
    d8 = realize_record(by_name["D8"])
    assert core.find_isomorphism(sd, q16) is None
    assert core.find_isomorphism(sd, d8) is None
    assert core.find_isomorphism(q16, d8) is None


# -- classification -------------------------------------------------------------------------


def test_classification_matches_classical_table():
    rows = classify_by_aut(standard_corpus(), 6)
    table = [(r.aut_order, r.name) for r in rows]
    assert table == [
        (1, "C1"),
        (1, "C2"),
        (2, "C3"),
        (2, "C4"),
        (2, "C6"),
        (4, "C5"),
        (4, "C8"),
        (4, "C10"),
        (4, "C12"),
        (6, "C2xC2"),
        (6, "D3"),
        (6, "C7"),
        (6, "C9"),
        (6, "C14"),
        (6, "C18"),
    ]


def test_classification_dedupes_isomorphic_entries():
    # S3 and D3 are the same group under different construction routes.
    recs = [
        record_for_group(core.symmetric(3)),
        record_for_group(core.dihedral(3, name="D3")),
    ]
    rows = classify_by_aut(recs, 10)
    assert len(rows) == 1
    assert rows[0].group_order == 6


def test_classification_max_aut_one():
    rows = classify_by_aut(standard_corpus(), 1)
    assert [(r.name, r.group_order) for r in rows] == [("C1", 1), ("C2", 2)]


def test_classification_rejects_wrong_expectation():
    bad = CatalogRecord("C9", BuiltinSource("cyclic", (9,)), 9, 5)
    with pytest.raises(errors.ExpectationMismatch):
        classify_by_aut([bad], 100)
