"""The autbound CLI: subcommands, group resolution, exit codes."""

from __future__ import annotations

import json

import pytest

from autbound import core
from autbound.cli import main


SMALL_CATALOG = """\
group S3cat
builtin symmetric 3
expect order 6
expect aut 6
end
"""

TWO_RECORDS = SMALL_CATALOG + """
group C5cat
builtin cyclic 5
end
"""


def test_info_bundled_name(capsys):
    assert main(["info", "Q8"]) == 0
    out = capsys.readouterr().out
    assert "name: Q8" in out
    assert "order: 8" in out
    assert "abelian: no" in out
    assert "element orders: 1^1 2^1 4^6" in out


def test_info_cayley_file(tmp_path, capsys):
    path = tmp_path / "k4.cayley"
    core.write_cayley_table(core.elementary_abelian(2, 2), path)
    assert main(["info", str(path)]) == 0
    out = capsys.readouterr().out
    assert "name: k4" in out
    assert "order: 4" in out


def test_info_catalog_file(tmp_path, capsys):
    path = tmp_path / "one.catalog"
    path.write_text(SMALL_CATALOG)
    assert main(["info", str(path)]) == 0
    assert "name: S3cat" in capsys.readouterr().out


def test_info_multi_record_catalog_is_an_error(tmp_path, capsys):
    path = tmp_path / "two.catalog"
    path.write_text(TWO_RECORDS)
    assert main(["info", str(path)]) == 2
    err = capsys.readouterr().err
    assert "S3cat" in err and "C5cat" in err


def test_info_unknown_name(capsys):
    assert main(["info", "M11"]) == 2
    assert "neither a file nor a bundled group name" in capsys.readouterr().err


def test_aut_abelian_and_not(capsys):
    assert main(["aut", "C6"]) == 0
    out = capsys.readouterr().out
    assert "aut order: 2" in out
    assert "method: abelian formula" in out
    assert "inner order: 1" in out

    assert main(["aut", "S3"]) == 0
    out = capsys.readouterr().out
    assert "aut order: 6" in out
    assert "method: enumeration" in out
    assert "inner order: 6" in out


def test_decompose_abelian(capsys):
    assert main(["decompose", "C12"]) == 0
    out = capsys.readouterr().out
    assert "primary decomposition: C4 x C3" in out


def test_decompose_nonabelian(capsys):
    assert main(["decompose", "Q8"]) == 0
    out = capsys.readouterr().out
    assert "abelian: no" in out
    assert "abelianization: C2 x C2" in out


def test_bounds_stdout_and_exit(capsys):
    assert main(["bounds", "C3"]) == 0
    out = capsys.readouterr().out
    header = out.splitlines()[0]
    assert header.split("\t") == [
        "group",
        "order",
        "n",
        "bound_id",
        "param",
        "lhs",
        "rhs",
        "rhs_note",
        "holds",
        "equality",
    ]
    assert "\teasy\t" in out


def test_bounds_json_out(tmp_path):
    out = tmp_path / "q8.json"
    assert main(["bounds", "Q8", "--format", "json", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload[0]["group_name"] == "Q8"
    assert payload[0]["n"] == 24
    ids = [e["bound_id"] for e in payload[0]["entries"]]
    assert "reverse" in ids and "schur" in ids


def test_classify_table(capsys):
    assert main(["classify", "--max-aut", "2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "aut_order\tgroup_order\tname"
    assert lines[1:] == ["1\t1\tC1", "1\t2\tC2", "2\t3\tC3", "2\t4\tC4", "2\t6\tC6"]


def test_classify_custom_corpus(tmp_path, capsys):
    path = tmp_path / "mini.catalog"
    path.write_text(TWO_RECORDS)
    assert main(["classify", "--max-aut", "100", "--corpus", str(path)]) == 0
    out = capsys.readouterr().out
    assert "S3cat" in out and "C5cat" in out


def test_verify_single_suite(tmp_path, capsys):
    path = tmp_path / "mini.catalog"
    path.write_text(TWO_RECORDS)
    assert main(["verify", "--corpus", str(path), "--suite", "core", "--suite", "aut"]) == 0
    out = capsys.readouterr().out
    assert "suite core:" in out
    assert "suite aut:" in out
    assert "suite bounds:" not in out
    assert ", 0 failures" in out.strip().splitlines()[-1]


def test_verify_writes_rows(tmp_path):
    catalog = tmp_path / "mini.catalog"
    catalog.write_text(SMALL_CATALOG)
    out = tmp_path / "rows.tsv"
    code = main(
        ["verify", "--corpus", str(catalog), "--suite", "theorem_a", "--out", str(out)]
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "suite\tgroup\tcheck\tok\tdetail"
    assert len(lines) == 6  # five pipeline checks
    assert all(line.split("\t")[3] == "true" for line in lines[1:])


def test_verify_catches_expectation_failures(tmp_path, capsys):
    catalog = tmp_path / "wrong.catalog"
    catalog.write_text("group C9\nbuiltin cyclic 9\nexpect aut 5\nend\n")
    assert main(["verify", "--corpus", str(catalog), "--suite", "aut"]) == 1
    captured = capsys.readouterr()
    assert "1 failures" in captured.out
    assert "FAIL" in captured.err


def test_bad_cayley_file(tmp_path, capsys):
    path = tmp_path / "junk.cayley"
    path.write_text("0 1\n1 1\n")
    assert main(["info", str(path)]) == 2
    assert "error:" in capsys.readouterr().err


def test_argparse_rejects_unknown_suite():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2


def test_missing_subcommand_exits():
    with pytest.raises(SystemExit):
        main([])
