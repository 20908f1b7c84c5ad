"""Abelian primary decompositions and the two splitting constructions."""

from __future__ import annotations

import math
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from autbound import core, errors, intarith
from autbound.decomp import (
    AbelianDecomposition,
    CyclicFactor,
    internal_product_bijective,
    primary_component,
    primary_decomposition,
    split_cyclic_containing,
    split_over_subgroup,
)


def abelian_pool() -> list[core.FiniteGroup]:
    shapes = [
        [1],
        [2],
        [5],
        [8],
        [2, 2],
        [4, 2],
        [2, 2, 2],
        [9, 3],
        [3, 3],
        [12],
        [6, 2],
        [4, 3, 2],
        [16],
        [25],
    ]
    return [core.abelian(s) for s in shapes]


def test_cyclic_factor_prime():
    assert CyclicFactor(0, 9).prime == 3
    assert CyclicFactor(0, 8).prime == 2
    assert CyclicFactor(0, 5).prime == 5


@pytest.mark.parametrize(
    "shape,orders",
    [
        ([12], [4, 3]),
        ([6], [2, 3]),
        ([8], [8]),
        ([2, 2, 2], [2, 2, 2]),
        ([9, 3], [9, 3]),
        ([4, 6], [4, 2, 3]),
        ([1], []),
    ],
)
def test_primary_decomposition_factor_orders(shape, orders):
    A = core.abelian(shape)
    dec = primary_decomposition(A)
    assert Counter(f.order for f in dec.factors) == Counter(orders)
    for f in dec.factors:
        assert A.element_order(f.generator) == f.order


def test_decomposition_coordinates_bijective():
    for A in (core.abelian([4, 2]), core.abelian([9, 3]), core.cyclic(30)):
        dec = primary_decomposition(A)
        coords = dec.coordinates
        assert len(coords) == A.order
        for x, tup in coords.items():
            assert dec.element_of(tup) == x
            assert len(tup) == len(dec.factors)


def test_generator_count_matches_min_generating():
    for A in abelian_pool():
        dec = primary_decomposition(A)
        per_prime = Counter(f.prime for f in dec.factors)
        want = max(per_prime.values(), default=0)
        assert A.min_generating_size() == want


def test_decomposition_rejects_nonabelian(s3):
    with pytest.raises(errors.NotAbelian):
        primary_decomposition(s3)
    with pytest.raises(errors.NotAbelian):
        AbelianDecomposition(s3, ())


def test_decomposition_validation():
    A = core.abelian([2, 2])
    a = next(x for x in range(4) if A.element_order(x) == 2)
    # Same generator twice: right product order, but the map collides.
    with pytest.raises(ValueError, match="not independent"):
        AbelianDecomposition(A, ((a, 2), (a, 2)))
    with pytest.raises(ValueError, match="prime power"):
        AbelianDecomposition(core.cyclic(6), ((1, 6),))
    with pytest.raises(ValueError, match="factor says"):
        AbelianDecomposition(A, ((A.identity, 2), (a, 2)))
    with pytest.raises(ValueError, match="multiply"):
        AbelianDecomposition(A, ((a, 2),))


def test_primary_component():
    A = core.cyclic(12)
    assert primary_component(A, 2).order == 4
    assert primary_component(A, 3).order == 3
    assert primary_component(A, 5).order == 1
    with pytest.raises(errors.NotPrime):
        primary_component(A, 4)
    with pytest.raises(errors.NotAbelian):
        primary_component(core.symmetric(3), 2)


def test_split_cyclic_every_prime_order_element():
    for A in abelian_pool():
        for a in range(A.order):
            o = A.element_order(a)
            if len(set(intarith.prime_divisors(o))) != 1 or o == 1:
                continue
            if o != min(intarith.prime_divisors(o)):
                continue  # prime order only
            factor, C = split_cyclic_containing(A, a)
            b_members = [A.power(factor.generator, k) for k in range(factor.order)]
            assert len(set(b_members)) == factor.order
            assert a in b_members
            assert factor.order * C.order == A.order
            assert internal_product_bijective(A, b_members, C.members)


def test_split_cyclic_rejections(s3):
    with pytest.raises(errors.NotAbelian):
        split_cyclic_containing(s3, 1)
    A = core.cyclic(12)
    four = next(x for x in range(12) if A.element_order(x) == 4)
    with pytest.raises(errors.NotPrime):
        split_cyclic_containing(A, four)
    with pytest.raises(errors.NotPrime):
        split_cyclic_containing(A, A.identity)


def test_split_over_subgroup_exhaustive_small():
    for A in abelian_pool():
        if A.order > 16:
            continue
        for B in A.all_subgroups():
            C, D = split_over_subgroup(A, B)
            assert all(x in C for x in B.members)
            assert internal_product_bijective(A, C.members, D.members)
            c_grp, _ = C.as_group()
            assert c_grp.min_generating_size() <= B.order


def test_split_over_subgroup_edges():
    A = core.abelian([4, 2])
    C, D = split_over_subgroup(A, A.trivial_subgroup())
    assert C.order == 1 and D.order == A.order
    C, D = split_over_subgroup(A, A.full_subgroup())
    assert C.order == A.order and D.order == 1


def test_split_over_rejections(s3, q8):
    with pytest.raises(errors.NotAbelian):
        split_over_subgroup(s3, s3.trivial_subgroup())
    A = core.abelian([4, 2])
    with pytest.raises(errors.NotSubgroup):
        split_over_subgroup(A, q8.center)


@given(
    st.lists(st.sampled_from([2, 3, 4, 5, 8, 9]), min_size=1, max_size=3).filter(
        lambda s: 1 < math.prod(s) <= 64
    )
)
@settings(max_examples=40, deadline=None)
def test_decomposition_invariants_random_shapes(shape):
    A = core.abelian(shape)
    dec = primary_decomposition(A)
    assert intarith.product(f.order for f in dec.factors) == A.order
    assert intarith.lcm_all(f.order for f in dec.factors) == A.exponent
    # Per prime, the factor orders descend.
    for p in intarith.prime_divisors(A.order):
        orders = [f.order for f in dec.factors if f.prime == p]
        assert orders == sorted(orders, reverse=True)
