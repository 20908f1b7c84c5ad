"""Automorphisms: verified maps, enumeration, counting, and the explicit
constructions used by the bound machinery (exponent stretch, primitive-root
action, factor mixing).

Enumeration is a pruned backtracking search over images of a minimum
generating tuple.  Two independent slow routes exist as oracles: all
identity-fixing bijections, and unpruned generator-image enumeration.
For abelian groups the exact count also comes from the classical product
formula over primary types, which covers groups whose automorphism group
is far too large to enumerate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from . import _kernels, config, errors, intarith
from .core import FiniteGroup, Homomorphism, Subgroup
from .decomp import AbelianDecomposition, CyclicFactor, primary_decomposition


@dataclass(frozen=True)
class Automorphism:
    """Verified bijective homomorphism of a group onto itself."""

    group: FiniteGroup
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        mapping = tuple(int(v) for v in self.mapping)
        object.__setattr__(self, "mapping", mapping)
        G = self.group
        if len(mapping) != G.order or sorted(mapping) != list(range(G.order)):
            raise errors.NotInvertibleMap("mapping is not a bijection on the elements")
        bad = _kernels.get().hom_violation(G._t32, G._t32, list(mapping))
        if bad is not None:
            x, y = bad
            raise errors.NotHomomorphism(f"f({x}*{y}) != f({x})*f({y})")

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def compose(self, other: Automorphism) -> Automorphism:
        """(self.compose(other))(x) = self(other(x))."""
        if other.group is not self.group:
            raise ValueError("composition requires automorphisms of one group")
        m = self.mapping
        return Automorphism(self.group, tuple(m[v] for v in other.mapping))

    def inverse(self) -> Automorphism:
        inv = [0] * len(self.mapping)
        for x, y in enumerate(self.mapping):
            inv[y] = x
        return Automorphism(self.group, tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.mapping))

    def order(self) -> int:
        """Order as a permutation: lcm of cycle lengths."""
        seen = [False] * len(self.mapping)
        result = 1
        for start in range(len(self.mapping)):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                x = self.mapping[x]
                length += 1
            result = math.lcm(result, length)
        return result


@dataclass(frozen=True)
class AutGroup:
    """Fully enumerated automorphism group."""

    group: FiniteGroup
    elements: tuple[Automorphism, ...]

    def __post_init__(self) -> None:
        maps = [a.mapping for a in self.elements]
        if len(set(maps)) != len(maps):
            raise ValueError("duplicate automorphisms")
        if tuple(range(self.group.order)) not in set(maps):
            raise ValueError("identity automorphism missing")

    @property
    def order(self) -> int:
        return len(self.elements)

    def mappings(self) -> list[tuple[int, ...]]:
        return [a.mapping for a in self.elements]


def automorphism_group(G: FiniteGroup, *, element_cap: int | None = None) -> AutGroup:
    """Enumerate Aut(G) by pruned generator-image backtracking."""
    if G.order > config.AUT_MAX_GROUP_ORDER:
        raise errors.OrderTooLarge(
            f"|G| = {G.order} exceeds the enumeration cap {config.AUT_MAX_GROUP_ORDER}"
        )
    cap = config.AUT_MAX_ELEMENTS if element_cap is None else element_cap
    maps = _kernels.get().aut_enumeration(
        G._t32, G.identity, list(G.element_orders), list(G.minimal_generating_tuple()), cap
    )
    if maps is None:
        raise errors.AutEnumerationTooLarge(f"more than {cap} automorphisms")
    return AutGroup(G, tuple(Automorphism(G, m) for m in maps))


def naive_automorphism_group(G: FiniteGroup) -> AutGroup:
    """Oracle: filter all identity-fixing bijections through the table."""
    if G.order > config.NAIVE_AUT_MAX_ORDER:
        raise errors.OrderTooLarge(
            f"naive oracle is factorial-time; |G| = {G.order} > {config.NAIVE_AUT_MAX_ORDER}"
        )
    maps = _kernels.get().bijection_automorphisms(G._t32, G.identity)
    return AutGroup(G, tuple(Automorphism(G, m) for m in maps))


def unpruned_automorphism_group(G: FiniteGroup) -> AutGroup:
    """Oracle: every generator-image tuple, no order or membership pruning."""
    gens = G.minimal_generating_tuple()
    if G.order ** len(gens) > (1 << 24):
        raise errors.OrderTooLarge(
            f"unpruned enumeration would try {G.order}^{len(gens)} image tuples"
        )
    maps = _kernels.get().generator_image_automorphisms(G._t32, G.identity, list(gens))
    return AutGroup(G, tuple(Automorphism(G, m) for m in maps))


def inner_automorphism_group(G: FiniteGroup) -> AutGroup:
    """Conjugation maps; their number must be |G| / |Z(G)|."""
    t = G.table
    inv = G.inverses
    seen: dict[tuple[int, ...], None] = {}
    for g in range(G.order):
        m = tuple(int(t[int(t[g, x]), inv[g]]) for x in range(G.order))
        seen.setdefault(m, None)
    assert len(seen) * G.center.order == G.order
    return AutGroup(G, tuple(Automorphism(G, m) for m in sorted(seen)))


def abelian_automorphism_order(A: FiniteGroup) -> int:
    """|Aut(A)| for abelian A via the product formula over primary types.

    For each prime, with exponents e_1 <= ... <= e_n (ascending),
    d_k = max{l : e_l = e_k} and c_k = min{l : e_l = e_k}:

        prod_k (p^d_k - p^(k-1)) * prod_j p^(e_j (n - d_j))
                                 * prod_i p^((e_i - 1)(n - c_i + 1))
    """
    decomp = primary_decomposition(A)
    total = 1
    for p in sorted({f.prime for f in decomp.factors}):
        exps = sorted(_p_valuation(f.order, p) for f in decomp.factors if f.prime == p)
        n = len(exps)
        d = [max(l for l in range(n) if exps[l] == exps[k]) + 1 for k in range(n)]
        c = [min(l for l in range(n) if exps[l] == exps[k]) + 1 for k in range(n)]
        for k in range(1, n + 1):
            total *= p ** d[k - 1] - p ** (k - 1)
        for j in range(1, n + 1):
            total *= p ** (exps[j - 1] * (n - d[j - 1]))
        for i in range(1, n + 1):
            total *= p ** ((exps[i - 1] - 1) * (n - c[i - 1] + 1))
    return total


def _p_valuation(order: int, p: int) -> int:
    v = 0
    while order % p == 0:
        order //= p
        v += 1
    return v


def automorphism_count(G: FiniteGroup) -> int:
    """|Aut(G)|: formula for abelian groups, enumeration otherwise."""
    if G.is_abelian:
        return abelian_automorphism_order(G)
    return automorphism_group(G).order


def endomorphism_count(G: FiniteGroup, *, order_cap: int | None = None) -> int:
    """|End(G)| by generator-image backtracking over divisor-order images."""
    cap = config.END_MAX_GROUP_ORDER if order_cap is None else order_cap
    if G.order > cap:
        raise errors.OrderTooLarge(f"|G| = {G.order} exceeds the endomorphism cap {cap}")
    return _kernels.get().endomorphism_count(
        G._t32, G.identity, list(G.element_orders), list(G.minimal_generating_tuple())
    )


def primitive_root_automorphism(
    A: FiniteGroup, factor: CyclicFactor, decomp: AbelianDecomposition | None = None
) -> Automorphism:
    """Scale one odd prime-power factor by the least primitive root mod p.

    The resulting automorphism has order divisible by p - 1 (asserted).
    """
    if decomp is None:
        decomp = primary_decomposition(A)
    if decomp.parent is not A:
        raise ValueError("decomposition belongs to a different group")
    try:
        pos = decomp.factors.index(factor)
    except ValueError:
        raise ValueError(f"{factor} is not a factor of the decomposition") from None
    p = factor.prime
    if p == 2:
        raise errors.NoPrimitiveRoot("no primitive root action on 2-power factors")
    r = intarith.least_primitive_root(p)
    coords = decomp.coordinates
    mapping = [0] * A.order
    for x, tup in coords.items():
        scaled = list(tup)
        scaled[pos] = (scaled[pos] * r) % factor.order
        mapping[x] = decomp.element_of(scaled)
    alpha = Automorphism(A, tuple(mapping))
    want = intarith.multiplicative_order(r, factor.order)
    assert alpha.order() == want
    assert want % (p - 1) == 0, "order must be divisible by p - 1"
    return alpha


def factor_mixing_automorphism(decomp: AbelianDecomposition, l: int) -> Automorphism:
    """x_1 -> x_1 x_l on a primary decomposition of a p-group (l >= 2, 1-based)."""
    A = decomp.parent
    primes = {f.prime for f in decomp.factors}
    if len(primes) != 1:
        raise errors.NotPrime("factor mixing needs a decomposition at a single prime")
    k = len(decomp.factors)
    if not 2 <= l <= k:
        raise ValueError(f"factor index must lie in 2..{k}, got {l}")
    first = decomp.factors[0]
    target = decomp.factors[l - 1]
    if target.order > first.order:
        raise errors.BadFactorOrder(
            f"target order {target.order} exceeds the leading order {first.order}"
        )
    coords = decomp.coordinates
    mapping = [0] * A.order
    for x, tup in coords.items():
        mixed = list(tup)
        mixed[l - 1] = (mixed[l - 1] + tup[0]) % target.order
        mapping[x] = decomp.element_of(mixed)
    return Automorphism(A, tuple(mapping))


class StretchData(NamedTuple):
    """Exponent-stretching automorphism with its shift and split data."""

    automorphism: Automorphism
    shift: int  # N = |G/Z| * |G'| * (product of the primes dividing |G|)
    generator: int
    complement: Subgroup


def exponent_shift(G: FiniteGroup) -> int:
    """N = |G/Z(G)| * |G'| * prod(p dividing |G|); 1 + N is coprime to |G|."""
    primes = intarith.product(intarith.prime_divisors(G.order))
    return (G.order // G.center.order) * G.commutator_subgroup.order * primes


def stretch_automorphism(G: FiniteGroup, aut_order: int | None = None) -> StretchData:
    """x = h g^i -> h g^(i(1+N)) along the largest factor of G/G'.

    N is a multiple of |G'| and of every prime dividing |G|, which makes the
    map a well-defined automorphism; g^N lands in the center (asserted).
    When aut_order is supplied, ord(g G') | (1+N)^aut_order - 1 is asserted.
    """
    Z = G.center
    Gp = G.commutator_subgroup
    N = exponent_shift(G)
    Q, proj = G.quotient(Gp)
    decomp = primary_decomposition(Q)
    if not decomp.factors:
        alpha = Automorphism(G, tuple(range(G.order)))
        return StretchData(alpha, N, G.identity, G.full_subgroup())
    pos, factor = max(
        enumerate(decomp.factors), key=lambda pf: (pf[1].order, -pf[1].generator)
    )
    g = min(x for x in range(G.order) if proj.mapping[x] == factor.generator)
    ord_q = factor.order
    comp_members = [
        x
        for x in range(G.order)
        if decomp.coordinates[proj.mapping[x]][pos] == 0
    ]
    H = Subgroup(G, tuple(comp_members))
    assert H.order * ord_q == G.order
    powers = [G.power(g, (i * N) % G.element_order(g)) for i in range(ord_q)]
    mapping = [0] * G.order
    t = G.table
    for x in range(G.order):
        i = decomp.coordinates[proj.mapping[x]][pos]
        mapping[x] = int(t[x, powers[i]])
    alpha = Automorphism(G, tuple(mapping))
    gN = G.power(g, N)
    assert gN in Z, "g^N must be central"
    if aut_order is not None:
        assert pow(1 + N, aut_order, ord_q) == 1 % ord_q, (
            "ord(g G') must divide (1+N)^n - 1"
        )
    return StretchData(alpha, N, g, H)
