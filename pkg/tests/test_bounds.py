"""Bound reports, equality classification, splits, and the proof pipeline."""

from __future__ import annotations

import math

import pytest

from autbound import aut, bounds, core, errors, intarith


def report_for(G: core.FiniteGroup, **kw) -> bounds.BoundReport:
    return bounds.bound_report(G, aut.automorphism_count(G), **kw)


# -- report structure -----------------------------------------------------------


def test_report_fields_s3(s3):
    r = report_for(s3)
    assert r.group_name == "S3"
    assert r.order == 6 and r.n == 6
    assert r.phi_value == 2
    assert r.end_count == 10
    assert r.all_hold
    ids = [e.bound_id for e in r.entries]
    assert ids.count("aut_prime") == 2
    assert "dG" not in ids  # abelian-only entry


def test_entry_lookup(s3):
    r = report_for(s3)
    assert r.entry("aut_prime", 3).lhs == 2
    with pytest.raises(KeyError):
        r.entry("dG")
    with pytest.raises(KeyError):
        r.entry("aut_prime", 5)
    with pytest.raises(KeyError):
        r.entry("no_such_bound")


def test_aut_accepts_group_or_count(s3):
    via_group = bounds.bound_report(s3, aut.automorphism_group(s3))
    via_count = bounds.bound_report(s3, 6)
    assert via_group.entries == via_count.entries
    with pytest.raises(ValueError):
        bounds.bound_report(s3, 0)


# -- individual bounds, frozen values ----------------------------------------------


def test_easy_bound_equality_on_c3():
    e = report_for(core.cyclic(3)).entry("easy")
    assert (e.lhs, e.rhs, e.holds, e.equality) == (2, 2, True, True)


def test_inn_bound_equality_on_s3(s3):
    e = report_for(s3).entry("inn")
    assert (e.lhs, e.rhs, e.equality) == (6, 6, True)


def test_dG_bound_on_boolean_cube():
    e = report_for(core.elementary_abelian(2, 3)).entry("dG")
    assert (e.lhs, e.rhs, e.equality) == (8, 8, True)
    e = report_for(core.abelian([4, 2])).entry("dG")
    assert (e.lhs, e.rhs) == (8, 16)


def test_aut_prime_per_prime(c12):
    r = report_for(c12)
    assert r.entry("aut_prime", 2).lhs == 1
    assert r.entry("aut_prime", 3).lhs == 2
    assert all(
        e.rhs == r.n for e in r.entries if e.bound_id == "aut_prime"
    )


def test_primes_bound(s3):
    e = report_for(s3).entry("primes")
    assert (e.lhs, e.rhs) == (3, 7)


def test_herstein_adney_entries():
    r = report_for(core.cyclic(4))
    e = r.entry("herstein_adney", 2)
    assert (e.lhs, e.rhs, e.holds) == (0, 0, True)
    squarefree = report_for(core.cyclic(6))
    assert all(e.bound_id != "herstein_adney" for e in squarefree.entries)
    only_two = report_for(core.cyclic(12))
    assert only_two.entry("herstein_adney", 2).holds
    with pytest.raises(KeyError):
        only_two.entry("herstein_adney", 3)


def test_schur_bound_materialized_small(s3):
    e = report_for(s3).entry("schur")
    assert e.lhs == 3
    assert e.rhs == 6 ** (2 * 6**3)
    assert e.holds and not e.equality and e.rhs_note == ""


def test_width_bound(s3, q8):
    e = report_for(s3).entry("width")
    assert (e.lhs, e.rhs) == (1, 216)
    e = report_for(q8).entry("width")
    assert (e.lhs, e.rhs) == (1, 64)


def test_exp_bound_small(s3):
    e = report_for(s3).entry("exp_bound")
    assert e.lhs == 2  # exponent of S3/A3
    assert e.rhs == 109**6 - 1
    assert e.holds


def test_reverse_bounds_boolean_cube():
    r = report_for(core.elementary_abelian(2, 3))
    e = r.entry("reverse")
    assert (e.lhs, e.rhs, e.equality) == (168, 168, True)
    assert r.entry("reverse_refined").rhs == 168


def test_reverse_bounds_q8(q8):
    r = report_for(q8)
    e = r.entry("reverse")
    assert (e.lhs, e.rhs, e.holds, e.equality) == (24, 42, True, False)
    assert r.entry("reverse_refined").rhs == 42
    assert r.entry("deaconescu").lhs == 4
    assert r.entry("deaconescu").rhs == 24


def test_refined_tightens_at_odd_primes():
    # C3 x C3: reverse gives (9-1)(9-2) = 56, the refined form lands exactly
    # on |GL(2,3)| = 48.
    r = report_for(core.elementary_abelian(3, 2))
    assert r.n == 48
    assert r.entry("reverse").rhs == 56
    assert not r.entry("reverse").equality
    refined = r.entry("reverse_refined")
    assert (refined.rhs, refined.equality) == (48, True)


def test_log2_d_bound():
    e = report_for(core.elementary_abelian(2, 4)).entry("log2_d")
    assert (e.lhs, e.rhs, e.equality) == (16, 16, True)
    e = report_for(core.quaternion8()).entry("log2_d")
    assert (e.lhs, e.rhs) == (4, 8)


def test_end_conj_only_small():
    assert report_for(core.symmetric(4)).entry("end_conj").rhs == 58
    big = bounds.bound_report(core.dihedral(16), aut.automorphism_count(core.dihedral(16)))
    assert big.end_count is None
    with pytest.raises(KeyError):
        big.entry("end_conj")


# -- giant right-hand sides ----------------------------------------------------------


@pytest.fixture(scope="module")
def boolean_six_report() -> bounds.BoundReport:
    G = core.elementary_abelian(2, 6)
    return bounds.bound_report(G, aut.abelian_automorphism_order(G))


def test_giant_schur_short_circuit(boolean_six_report):
    e = boolean_six_report.entry("schur")
    n = boolean_six_report.n
    assert n == 20158709760
    assert e.rhs is None
    assert e.rhs_note == f">=2^{intarith.pow_bits_lower(n, 2 * n**3)}"
    assert e.holds and not e.equality


def test_giant_exp_bound_offset_note(boolean_six_report):
    e = boolean_six_report.entry("exp_bound")
    n = boolean_six_report.n
    assert e.lhs == 2
    assert e.rhs is None
    assert e.rhs_note == f">=2^{n}-1"  # (1+2)^n - 1, and 3 holds one certified bit
    assert e.holds and not e.equality
    assert boolean_six_report.all_hold


def test_q8_schur_materializes_within_lazy_cap(q8):
    # 24^(2*24^3) is a 138k-bit integer, inside the default ceiling.
    e = report_for(q8).entry("schur")
    assert e.rhs == 24 ** (2 * 24**3)
    assert e.rhs_note == ""


def test_materialize_all_matches_short_circuit():
    # n = 40 pushes the schur rhs to ~7.7e5 bits: lazily a note, audited exact.
    G = core.cyclic(55)
    lazy = bounds.bound_report(G, 40)
    eager = bounds.bound_report(G, 40, materialize_all=True)
    for le, ee in zip(lazy.entries, eager.entries):
        assert (le.bound_id, le.param, le.holds, le.equality) == (
            ee.bound_id,
            ee.param,
            ee.holds,
            ee.equality,
        )
    assert lazy.entry("schur").rhs is None
    assert lazy.entry("schur").rhs_note.startswith(">=2^")
    assert eager.entry("schur").rhs == 40 ** (2 * 40**3)


def test_materialize_all_audit_ceiling():
    G = core.elementary_abelian(2, 4)
    n = aut.abelian_automorphism_order(G)  # 20160: schur rhs needs ~2.5e14 bits
    assert bounds.bound_report(G, n).all_hold
    with pytest.raises(errors.OrderTooLarge):
        bounds.bound_report(G, n, materialize_all=True)


# -- equality classification -----------------------------------------------------------


@pytest.mark.parametrize(
    "make,expected",
    [
        (lambda: core.cyclic(1), (True, False, True)),
        (lambda: core.cyclic(7), (True, True, False)),
        (lambda: core.cyclic(2), (True, True, True)),
        (lambda: core.cyclic(4), (False, False, False)),
        (lambda: core.elementary_abelian(2, 3), (True, False, True)),
        (lambda: core.symmetric(3), (False, False, False)),
    ],
)
def test_equality_classifier(make, expected):
    G = make()
    r = report_for(G)
    assert bounds.equality_classifier(G, r) == expected


# -- schur data -------------------------------------------------------------------------


@pytest.mark.parametrize(
    "make,expected",
    [
        (lambda: core.symmetric(3), (3, 1, 6)),
        (lambda: core.quaternion8(), (2, 1, 4)),
        (lambda: core.dihedral(4), (2, 1, 4)),
        (lambda: core.cyclic(12), (1, 0, 1)),
        (lambda: core.symmetric(4), (12, 1, 24)),
    ],
)
def test_schur_data_frozen(make, expected):
    assert bounds.schur_data(make()) == expected


def test_schur_data_invariants(small_pool):
    for G in small_pool:
        gamma, width, m = bounds.schur_data(G)
        assert m == G.order // G.center.order
        assert gamma <= m * m
        assert width <= m**3
        if G.is_abelian:
            assert (gamma, width, m) == (1, 0, 1)


# -- central complements ------------------------------------------------------------------


def test_central_complement_found():
    G = core.direct_product(core.cyclic(3), core.quaternion8(), name="C3xQ8")[0]
    got = bounds.central_p_complement(G, 3)
    assert got is not None
    Zp, Q = got
    assert Zp.order == 3 and Q.order == 8
    assert Zp.intersection(Q).order == 1
    assert bounds._bijective_product(G, Zp, Q)


def test_central_complement_abelian():
    got = bounds.central_p_complement(core.cyclic(6), 2)
    assert got is not None
    Zp, Q = got
    assert (Zp.order, Q.order) == (2, 3)


def test_central_complement_absent(q8):
    assert bounds.central_p_complement(q8, 2) is None
    G = core.direct_product(core.cyclic(2), core.symmetric(3), name="C2xS3")[0]
    assert bounds.central_p_complement(G, 2) is None
    assert bounds.central_p_complement(G, 3) is None


def test_central_complement_foreign_prime(s3):
    got = bounds.central_p_complement(s3, 5)
    assert got is not None
    Zp, Q = got
    assert Zp.order == 1 and Q.order == 6
    with pytest.raises(errors.NotPrime):
        bounds.central_p_complement(s3, 4)


# -- exponent-shift divisibility -------------------------------------------------------------


def test_exp_factor_divisibility_values(s3, c12):
    assert bounds.exp_factor_divisibility(s3, 6) == ((2, True),)
    rows = bounds.exp_factor_divisibility(c12, aut.automorphism_count(c12))
    assert sorted(o for o, _ in rows) == [3, 4]
    assert all(flag for _, flag in rows)
    assert bounds.exp_factor_divisibility(core.cyclic(1), 1) == ()


def test_exp_factor_divisibility_holds_everywhere(small_pool):
    for G in small_pool:
        rows = bounds.exp_factor_divisibility(G, aut.automorphism_count(G))
        assert all(flag for _, flag in rows), G.name


# -- the proof pipeline ------------------------------------------------------------------------


def witness_for(G: core.FiniteGroup) -> bounds.TheoremAWitness:
    return bounds.theorem_a_witness(G, aut.automorphism_count(G))


def test_witness_s3(s3):
    w = witness_for(s3)
    assert w.all_true
    assert w.m == 2  # Z(S3)G' = A3 has index 2
    assert w.U.order == 6  # the representatives already generate S3
    assert w.D.order == 1
    assert w.N == 108
    assert [cid for cid, _ in w.checks] == [
        "d_U_quotient_le_n",
        "U_order_bound",
        "Z_splits",
        "product_split",
        "D_abelian_bounded",
    ]
    assert w.check("product_split") is True
    with pytest.raises(KeyError):
        w.check("bogus")


def test_witness_central_direction():
    # C4: everything is central, U is cyclic, D absorbs nothing.
    w = witness_for(core.cyclic(4))
    assert w.all_true and w.m == 1
    assert w.U.order * w.D.order >= 4


def test_witness_all_true_across_shapes(small_pool):
    for G in small_pool:
        w = witness_for(G)
        assert w.all_true, (G.name, w.checks)
        # U C and D really factor the group.
        UC = G.subgroup_generated(list(w.U.members) + list(w.C.members))
        assert UC.order * w.D.order == G.order


def test_witness_giant_n_short_circuit():
    G = core.elementary_abelian(2, 6)
    w = bounds.theorem_a_witness(G, aut.abelian_automorphism_order(G))
    assert w.all_true
    assert w.m == 1


def test_witness_rejects_bad_n(s3):
    with pytest.raises(ValueError):
        bounds.theorem_a_witness(s3, -3)
