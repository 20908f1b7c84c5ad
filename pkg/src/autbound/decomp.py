"""Abelian structure: primary decompositions and direct-factor splits.

A decomposition is a list of (generator, prime-power order) factors whose
internal direct product is the whole group; the exponent-tuple bijection is
checked at construction, so a decomposition in hand is always valid.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from . import _kernels, errors, intarith
from .core import FiniteGroup, Subgroup


class CyclicFactor(NamedTuple):
    """One cyclic direct factor, as a generator index and its order."""

    generator: int
    order: int

    @property
    def prime(self) -> int:
        p = min(intarith.prime_divisors(self.order))
        return p


@dataclass(frozen=True)
class AbelianDecomposition:
    """Verified internal direct product of cyclic prime-power factors."""

    parent: FiniteGroup
    factors: tuple[CyclicFactor, ...]

    def __post_init__(self) -> None:
        A = self.parent
        if not A.is_abelian:
            raise errors.NotAbelian("decomposition requires an abelian parent")
        factors = tuple(CyclicFactor(int(f[0]), int(f[1])) for f in self.factors)
        object.__setattr__(self, "factors", factors)
        for gen, order in factors:
            if order < 2:
                raise ValueError(f"factor order must be >= 2, got {order}")
            if len(intarith.prime_divisors(order)) != 1:
                raise ValueError(f"factor order {order} is not a prime power")
            if A.element_order(gen) != order:
                raise ValueError(
                    f"generator {gen} has order {A.element_order(gen)}, factor says {order}"
                )
        if intarith.product(f.order for f in factors) != A.order:
            raise ValueError("factor orders do not multiply to the group order")
        # exponent tuples must hit every element exactly once
        coords: dict[int, tuple[int, ...]] = {A.identity: ()}
        for gen, order in factors:
            nxt: dict[int, tuple[int, ...]] = {}
            for elem, tup in coords.items():
                x = elem
                for e in range(order):
                    nxt[x] = tup + (e,)
                    x = int(A.table[x, gen])
            if len(nxt) != len(coords) * order:
                raise ValueError("factors are not independent: product map collides")
            coords = nxt
        assert len(coords) == A.order
        object.__setattr__(self, "_coords", coords)

    @property
    def coordinates(self) -> dict[int, tuple[int, ...]]:
        """Element index -> exponent tuple over the factors."""
        return self._coords

    def element_of(self, exponents) -> int:
        A = self.parent
        x = A.identity
        for (gen, order), e in zip(self.factors, exponents):
            x = int(A.table[x, A.power(gen, e % order)])
        return x

    def factors_for_prime(self, p: int) -> tuple[CyclicFactor, ...]:
        return tuple(f for f in self.factors if f.order % p == 0)


def primary_component(A: FiniteGroup, p: int) -> Subgroup:
    """Subgroup of elements whose order is a power of p."""
    if not A.is_abelian:
        raise errors.NotAbelian("primary components require an abelian group")
    if not intarith.is_prime(p):
        raise errors.NotPrime(f"{p} is not prime")
    members = []
    for x, o in enumerate(A.element_orders):
        while o % p == 0:
            o //= p
        if o == 1:
            members.append(x)
    return Subgroup(A, tuple(members))


def _max_order_element(P: FiniteGroup, members) -> int:
    """Least index among the maximum-order elements of the member list."""
    return min(members, key=lambda x: (-P.element_order(x), x))


def _p_group_factors(P: FiniteGroup) -> list[CyclicFactor]:
    """Peel cyclic factors off an abelian p-group, largest order first.

    Complement search is a single ascending greedy pass; once a candidate is
    rejected it stays rejected (the running subgroup only grows), so the pass
    ends maximal, which suffices for a complement of a maximal-order cyclic
    subgroup.  The size assertion rechecks that on every run.
    """
    K = _kernels.get()
    remaining = list(range(P.order))
    factors: list[CyclicFactor] = []
    while len(remaining) > 1:
        x = _max_order_element(P, remaining)
        order = P.element_order(x)
        factors.append(CyclicFactor(x, order))
        target = len(remaining) // order
        bset = set()
        y = P.identity
        while True:
            bset.add(y)
            y = int(P.table[y, x])
            if y == P.identity:
                break
        comp = [P.identity]
        comp_set = {P.identity}
        for g in remaining:
            if len(comp) == target:
                break
            if g in comp_set:
                continue
            grown = K.closure(P._t32, P.identity, comp + [g])
            if sum(1 for m in grown if m in bset) == 1:
                comp = grown
                comp_set = set(grown)
        assert len(comp) == target, "greedy complement pass fell short"
        remaining = comp
    return factors


def primary_decomposition(A: FiniteGroup) -> AbelianDecomposition:
    """Cyclic prime-power factors, primes ascending, orders descending."""
    if not A.is_abelian:
        raise errors.NotAbelian("primary decomposition requires an abelian group")
    factors: list[CyclicFactor] = []
    for p in intarith.prime_divisors(A.order):
        component = primary_component(A, p)
        P, to_parent = component.as_group()
        for gen, order in _p_group_factors(P):
            factors.append(CyclicFactor(to_parent[gen], order))
    return AbelianDecomposition(A, tuple(factors))


def internal_product_bijective(A: FiniteGroup, left, right) -> bool:
    """Whether (l, r) -> l*r hits every element of A exactly once."""
    products = {int(A.table[l, r]) for l in left for r in right}
    return len(products) == len(left) * len(right) == A.order


def split_cyclic_containing(A: FiniteGroup, a: int) -> tuple[CyclicFactor, Subgroup]:
    """Direct factor A = <b> x C with the prime-order element a inside <b>.

    b is assembled from the primary factors that a touches, scaled so the
    smallest touched factor's order becomes ord(b); the remaining basis
    generators span C.
    """
    if not A.is_abelian:
        raise errors.NotAbelian("cyclic splitting requires an abelian group")
    p = A.element_order(a)
    if not intarith.is_prime(p):
        raise errors.NotPrime(f"element {a} has order {p}, which is not prime")
    decomp = primary_decomposition(A)
    coords = decomp.coordinates[a]
    kept: list[tuple[int, CyclicFactor, int]] = []  # (factor position, factor, exponent)
    for pos, (factor, e) in enumerate(zip(decomp.factors, coords)):
        if e == 0:
            continue
        assert factor.order % p == 0, "prime-order element leaked into a foreign component"
        kept.append((pos, factor, e))
    assert kept, "non-identity element must touch some factor"
    alpha_min_order = kept[-1][1].order  # factors descend within the prime
    b = A.identity
    for _, factor, e in kept:
        beta = e // (factor.order // p)
        assert e % (factor.order // p) == 0 and 0 < beta < p
        exponent = beta * (factor.order // alpha_min_order)
        b = int(A.table[b, A.power(factor.generator, exponent)])
    assert A.element_order(b) == alpha_min_order
    assert A.power(b, alpha_min_order // p) == a, "a must be a power of b"
    c_gens = [
        factor.generator
        for pos, factor in enumerate(decomp.factors)
        if pos != kept[-1][0]
    ]
    C = A.subgroup_generated(c_gens)
    b_members = sorted(A.power(b, k) for k in range(alpha_min_order))
    assert len(set(b_members) & set(C.members)) == 1
    assert internal_product_bijective(A, b_members, C.members)
    return CyclicFactor(b, alpha_min_order), C


def _maximal_subgroup_member_lists(G: FiniteGroup) -> list[tuple[int, ...]]:
    """Member tuples of every index-p subgroup, p over the primes of |G|."""
    out: list[tuple[int, ...]] = []
    for p in intarith.prime_divisors(G.order):
        powers = sorted({G.power(x, p) for x in range(G.order)})
        W = G.subgroup_generated(powers)
        Q, proj = G.quotient(W)
        qdec = primary_decomposition(Q)
        r = len(qdec.factors)
        assert all(f.order == p for f in qdec.factors), "quotient by p-th powers must be elementary"
        qcoords = qdec.coordinates
        for lam in itertools.product(range(p), repeat=r):
            nz = next((i for i, v in enumerate(lam) if v), None)
            if nz is None or lam[nz] != 1:
                continue  # one functional per kernel: first nonzero pinned to 1
            kernel_q = {
                q for q in range(Q.order) if sum(l * c for l, c in zip(lam, qcoords[q])) % p == 0
            }
            members = tuple(x for x in range(G.order) if proj.mapping[x] in kernel_q)
            out.append(members)
    return sorted(set(out))


def split_over_subgroup(A: FiniteGroup, B: Subgroup) -> tuple[Subgroup, Subgroup]:
    """A = C x D with B inside C and C generated by at most |B| elements.

    Recursion over a maximal subgroup B0 < B: split over B0 first, factor
    the leftover generator b = c*d across that split, then absorb the cyclic
    factor around d into C.
    """
    if not A.is_abelian:
        raise errors.NotAbelian("splitting requires an abelian group")
    if B.parent is not A:
        raise errors.NotSubgroup("B must be a subgroup of A")
    if B.order == 1:
        return A.trivial_subgroup(), A.full_subgroup()
    B_grp, to_parent = B.as_group()
    maximal = _maximal_subgroup_member_lists(B_grp)
    assert maximal, "nontrivial group must have a maximal subgroup"
    b0_members = tuple(sorted(to_parent[i] for i in maximal[0]))
    B0 = Subgroup(A, b0_members)
    index = B.order // B0.order
    assert intarith.is_prime(index)
    C0, D0 = split_over_subgroup(A, B0)
    b = min(set(B.members) - set(B0.members))
    decode = {}
    for c in C0.members:
        for d in D0.members:
            decode[int(A.table[c, d])] = (c, d)
    c_part, d_part = decode[b]
    if d_part == A.identity:
        result = (C0, D0)
    else:
        assert A.power(d_part, index) == A.identity, "leftover must die at the index prime"
        D0_grp, d_back = D0.as_group()
        d_local = D0.members.index(d_part)
        dfac, comp_local = split_cyclic_containing(D0_grp, d_local)
        b_d = d_back[dfac.generator]
        C = A.subgroup_generated(list(C0.members) + [b_d])
        D = Subgroup(A, tuple(sorted(d_back[i] for i in comp_local.members)))
        result = (C, D)
    C, D = result
    assert all(x in C for x in B.members), "B must land inside C"
    assert internal_product_bijective(A, C.members, D.members)
    c_grp, _ = C.as_group()
    assert c_grp.min_generating_size() <= B.order, "C must stay |B|-generated"
    return result
