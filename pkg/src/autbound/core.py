"""Concrete finite groups as dense Cayley tables, with structural primitives.

Element are integer indices into an order x order multiplication table of
16-bit values; the identity is located by scanning, never assumed to sit at
index 0.  Every construction path funnels through FiniteGroup.__init__,
which validates the Latin-square property, the identity, and associativity,
so a FiniteGroup in hand is always a group.

Composition convention throughout the package: (f.compose(g))(x) = f(g(x)),
and table closure multiplies new elements on the right by the generators.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from . import _kernels, config, errors, intarith


@dataclass(frozen=True)
class Permutation:
    """Bijection on 0..degree-1, stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0 or sorted(images) != list(range(n)):
            raise errors.InvalidPermutation(f"images {images!r} are not a bijection on 0..{n - 1}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> Permutation:
        images = list(range(degree))
        for cycle in cycles:
            for i, a in enumerate(cycle):
                images[a] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    def compose(self, other: Permutation) -> Permutation:
        """(self o other)(x) = self(other(x))."""
        if self.degree != other.degree:
            raise errors.InvalidPermutation(
                f"degree mismatch: {self.degree} vs {other.degree}"
            )
        o = other.images
        s = self.images
        return Permutation(tuple(s[o[x]] for x in range(self.degree)))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def __call__(self, x: int) -> int:
        return self.images[x]


class FiniteGroup:
    """A finite group given by its full multiplication table."""

    def __init__(
        self,
        table,
        *,
        name: str | None = None,
        perm_rep: tuple[Permutation, ...] | None = None,
        generator_indices: tuple[int, ...] | None = None,
    ) -> None:
        raw = np.asarray(table)
        if raw.ndim != 2 or raw.shape[0] != raw.shape[1]:
            raise errors.NotLatinSquare(f"table must be square, got shape {raw.shape}")
        n = int(raw.shape[0])
        if n == 0:
            raise errors.NoIdentity("empty table has no identity")
        cap = config.max_order()
        if n > cap:
            raise errors.OrderTooLarge(f"order {n} exceeds the cap {cap}")
        if raw.size and (raw.min() < 0 or raw.max() >= n):
            raise errors.NotLatinSquare(
                f"table entries must lie in 0..{n - 1}, found {int(raw.min())}..{int(raw.max())}"
            )
        tbl = np.ascontiguousarray(raw, dtype=np.uint16)
        tbl.setflags(write=False)
        self.table = tbl
        self.order = n
        self.name = name
        self.perm_rep = perm_rep
        self.generator_indices = generator_indices
        K = _kernels.get()
        t32 = np.ascontiguousarray(tbl, dtype=np.int32)
        t32.setflags(write=False)
        self._t32 = t32
        bad = K.latin_violation(t32)
        if bad is not None:
            kind, idx = bad
            raise errors.NotLatinSquare(f"{kind} {idx} is not a permutation of 0..{n - 1}")
        e = K.find_identity(t32)
        if e < 0:
            raise errors.NoIdentity("table has no two-sided identity")
        self.identity = int(e)
        trip = K.assoc_violation(t32)
        if trip is not None:
            i, j, k = trip
            raise errors.NotAssociative(f"({i}*{j})*{k} != {i}*({j}*{k})")

    def __repr__(self) -> str:
        label = self.name or "group"
        return f"<{label}: order {self.order}>"

    # -- element arithmetic ------------------------------------------------

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        inv = [0] * self.order
        eq = np.argwhere(self._t32 == self.identity)
        for x, y in eq:
            inv[int(x)] = int(y)
        return tuple(inv)

    def inverse(self, x: int) -> int:
        return self.inverses[x]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverses[x], -k)
        acc = self.identity
        base = x
        while k:
            if k & 1:
                acc = int(self.table[acc, base])
            k >>= 1
            if k:
                base = int(self.table[base, base])
        return acc

    def conjugate(self, x: int, by: int) -> int:
        """by * x * by^-1."""
        t = self.table
        return int(t[t[by, x], self.inverses[by]])

    def commutator(self, x: int, y: int) -> int:
        """x * y * x^-1 * y^-1."""
        t = self.table
        return int(t[t[t[x, y], self.inverses[x]], self.inverses[y]])

    def element_order(self, x: int) -> int:
        return self.element_orders[x]

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(_kernels.get().element_orders(self._t32, self.identity))

    @cached_property
    def exponent(self) -> int:
        return intarith.lcm_all(self.element_orders)

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self._t32, self._t32.T))

    @cached_property
    def order_profile(self) -> tuple[tuple[int, int], ...]:
        """Sorted (element order, count) pairs; an isomorphism invariant."""
        return tuple(sorted(Counter(self.element_orders).items()))

    # -- structural subgroups ----------------------------------------------

    @cached_property
    def center(self) -> Subgroup:
        commutes = (self._t32 == self._t32.T).all(axis=1)
        members = tuple(int(i) for i in np.flatnonzero(commutes))
        return Subgroup(self, members)

    @cached_property
    def commutator_subgroup(self) -> Subgroup:
        t = self._t32
        inv = np.asarray(self.inverses, dtype=np.int32)
        xy = t
        step = t[xy, inv[:, None]]  # [x, y] -> (xy) x^-1
        comms = t[step, inv[None, :]]  # [x, y] -> (xy) x^-1 y^-1
        gens = sorted(set(int(v) for v in np.unique(comms)))
        sub = self.subgroup_generated(gens)
        assert sub.is_normal(), "commutator subgroup must be normal"
        return sub

    def subgroup_generated(self, seed) -> Subgroup:
        members = _kernels.get().closure(self._t32, self.identity, list(seed))
        return Subgroup(self, tuple(members))

    def trivial_subgroup(self) -> Subgroup:
        return Subgroup(self, (self.identity,))

    def full_subgroup(self) -> Subgroup:
        return Subgroup(self, tuple(range(self.order)))

    def all_subgroups(self) -> list[Subgroup]:
        """Every subgroup, by closure-extension search from the trivial one."""
        K = _kernels.get()
        trivial = (self.identity,)
        seen = {trivial}
        work = [trivial]
        while work:
            base = work.pop()
            inbase = set(base)
            for g in range(self.order):
                if g in inbase:
                    continue
                grown = tuple(K.closure(self._t32, self.identity, list(base) + [g]))
                if grown not in seen:
                    seen.add(grown)
                    work.append(grown)
        return [Subgroup(self, members) for members in sorted(seen, key=lambda m: (len(m), m))]

    # -- quotients ----------------------------------------------------------

    def quotient(self, sub: Subgroup) -> tuple[FiniteGroup, Homomorphism]:
        """Factor group G/N with its projection; N must be normal."""
        if sub.parent is not self:
            raise errors.NotSubgroup("subgroup belongs to a different parent group")
        t = self._t32
        marr = np.asarray(sub.members, dtype=np.int32)
        inv = np.asarray(self.inverses, dtype=np.int32)
        conj = t[t[:, marr], inv[:, None]]  # [g, x] -> g x g^-1
        inside = np.zeros(self.order, dtype=bool)
        inside[marr] = True
        if not inside[conj].all():
            g, x = (int(v) for v in np.argwhere(~inside[conj])[0])
            raise errors.NotNormal(
                f"{g}*{sub.members[x]}*{g}^-1 = {int(conj[g, x])} escapes the subgroup"
            )
        coset_id = [-1] * self.order
        reps: list[int] = []
        for x in range(self.order):
            if coset_id[x] >= 0:
                continue
            cid = len(reps)
            reps.append(x)
            for m in sub.members:
                coset_id[int(t[x, m])] = cid
        q = len(reps)
        qtable = [[coset_id[int(t[reps[a], reps[b]])] for b in range(q)] for a in range(q)]
        quotient_group = FiniteGroup(
            qtable, name=f"{self.name}/N{sub.order}" if self.name else None
        )
        projection = Homomorphism(self, quotient_group, tuple(coset_id))
        return quotient_group, projection

    # -- generation ---------------------------------------------------------

    @cached_property
    def _min_generating(self) -> tuple[int, tuple[int, ...]]:
        d, gens = _kernels.get().min_generating(
            self._t32, self.identity, list(self.element_orders), self.is_abelian
        )
        assert (1 << d) <= self.order or d == 0, "d(G) must satisfy 2^d <= |G|"
        return d, tuple(gens)

    def min_generating_size(self) -> int:
        return self._min_generating[0]

    def minimal_generating_tuple(self) -> tuple[int, ...]:
        return self._min_generating[1]


@dataclass(frozen=True)
class Subgroup:
    """Sorted member list of a verified subgroup of a parent group."""

    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        members = tuple(sorted(int(m) for m in self.members))
        object.__setattr__(self, "members", members)
        if len(set(members)) != len(members):
            raise errors.NotSubgroup("duplicate members")
        G = self.parent
        if not members or members[0] < 0 or members[-1] >= G.order:
            raise errors.NotSubgroup("members out of range or empty")
        if G.identity not in set(members):
            raise errors.NotSubgroup("identity missing")
        marr = np.asarray(members, dtype=np.int32)
        inside = np.zeros(G.order, dtype=bool)
        inside[marr] = True
        if not inside[np.asarray(G.inverses, dtype=np.int32)[marr]].all():
            raise errors.NotSubgroup("not closed under inverses")
        products = G._t32[np.ix_(marr, marr)]
        if not inside[products].all():
            x, y = (int(v) for v in np.argwhere(~inside[products])[0])
            raise errors.NotSubgroup(
                f"product {members[x]}*{members[y]} escapes the member list"
            )
        if G.order % len(members) != 0:
            raise errors.NotSubgroup("order does not divide the group order")

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self._member_set

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def is_normal(self) -> bool:
        G = self.parent
        t = G.table
        inv = G.inverses
        inside = self._member_set
        return all(
            int(t[int(t[g, x]), inv[g]]) in inside
            for g in range(G.order)
            for x in self.members
        )

    def intersection(self, other: Subgroup) -> Subgroup:
        if other.parent is not self.parent:
            raise errors.NotSubgroup("intersection requires a common parent")
        return Subgroup(self.parent, tuple(sorted(self._member_set & other._member_set)))

    def as_group(self) -> tuple[FiniteGroup, tuple[int, ...]]:
        """Standalone group on the members, with the index-back map."""
        G = self.parent
        members = np.asarray(self.members, dtype=np.int32)
        pos = np.zeros(G.order, dtype=np.int32)
        pos[members] = np.arange(len(members), dtype=np.int32)
        sub_table = pos[G._t32[np.ix_(members, members)]]
        name = f"{G.name}|{self.order}" if G.name else None
        return FiniteGroup(sub_table, name=name), tuple(int(m) for m in members)


# NB: Subgroup and Homomorphism must not use slots=True; cached_property
# needs the instance __dict__.


@dataclass(frozen=True)
class Homomorphism:
    """Verified map f: domain -> codomain with f(xy) = f(x)f(y)."""

    domain: FiniteGroup
    codomain: FiniteGroup
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        mapping = tuple(int(v) for v in self.mapping)
        object.__setattr__(self, "mapping", mapping)
        if len(mapping) != self.domain.order:
            raise errors.NotHomomorphism(
                f"mapping length {len(mapping)} != domain order {self.domain.order}"
            )
        if any(v < 0 or v >= self.codomain.order for v in mapping):
            raise errors.NotHomomorphism("mapping image out of range")
        bad = _kernels.get().hom_violation(self.domain._t32, self.codomain._t32, list(mapping))
        if bad is not None:
            x, y = bad
            raise errors.NotHomomorphism(f"f({x}*{y}) != f({x})*f({y})")

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    @cached_property
    def image_members(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.mapping)))

    def image(self) -> Subgroup:
        return Subgroup(self.codomain, self.image_members)

    def kernel_members(self) -> tuple[int, ...]:
        e = self.codomain.identity
        return tuple(x for x, v in enumerate(self.mapping) if v == e)

    def is_bijective(self) -> bool:
        return (
            self.domain.order == self.codomain.order
            and len(set(self.mapping)) == self.domain.order
        )


# -- constructors -----------------------------------------------------------


def from_cayley_table(table, *, name: str | None = None) -> FiniteGroup:
    """Group from a full multiplication table; validates everything."""
    return FiniteGroup(table, name=name)


def from_generators(gens, max_order: int | None = None, *, name: str | None = None) -> FiniteGroup:
    """Group generated by permutations, elements indexed in closure order.

    Breadth-first from the identity, generators applied in input order; the
    identity permutation therefore gets index 0.
    """
    perms = [g if isinstance(g, Permutation) else Permutation(tuple(g)) for g in gens]
    cap = config.max_order() if max_order is None else min(max_order, config.max_order())
    if not perms:
        return FiniteGroup([[0]], name=name, perm_rep=(Permutation.identity(1),), generator_indices=())
    degree = perms[0].degree
    for p in perms:
        if p.degree != degree:
            raise errors.InvalidPermutation("generators must share one degree")
    ident = Permutation.identity(degree)
    index_of: dict[tuple[int, ...], int] = {ident.images: 0}
    elems: list[Permutation] = [ident]
    i = 0
    while i < len(elems):
        for g in perms:
            y = elems[i].compose(g)
            if y.images not in index_of:
                if len(elems) >= cap:
                    raise errors.ClosureExceeded(f"closure exceeded the cap of {cap} elements")
                index_of[y.images] = len(elems)
                elems.append(y)
        i += 1
    n = len(elems)
    P = np.array([p.images for p in elems], dtype=np.int32)
    table = np.empty((n, n), dtype=np.int32)
    for j in range(n):
        block = P[:, P[j]]
        for i in range(n):
            table[i, j] = index_of[tuple(int(v) for v in block[i])]
    return FiniteGroup(
        table,
        name=name,
        perm_rep=tuple(elems),
        generator_indices=tuple(index_of[p.images] for p in perms),
    )


def _order_guard(n: int) -> None:
    cap = config.max_order()
    if n > cap:
        raise errors.OrderTooLarge(f"order {n} exceeds the cap {cap}")


def cyclic(n: int, *, name: str | None = None) -> FiniteGroup:
    if n < 1:
        raise ValueError(f"cyclic group order must be >= 1, got {n}")
    _order_guard(n)
    r = np.arange(n, dtype=np.int32)
    return FiniteGroup(np.add.outer(r, r) % n, name=name or f"C{n}")


def dihedral(n: int, *, name: str | None = None) -> FiniteGroup:
    """Symmetries of the n-gon: order 2n, indices i + n*j (j = reflection)."""
    if n < 1:
        raise ValueError(f"dihedral parameter must be >= 1, got {n}")
    _order_guard(2 * n)
    idx = np.arange(2 * n, dtype=np.int32)
    i1, j1 = (idx % n)[:, None], (idx // n)[:, None]
    i2, j2 = (idx % n)[None, :], (idx // n)[None, :]
    sign = 1 - 2 * j1
    table = (i1 + sign * i2) % n + n * (j1 ^ j2)
    return FiniteGroup(table, name=name or f"D{n}")


def dicyclic(m: int, *, name: str | None = None) -> FiniteGroup:
    """Dicyclic group of order 4m: a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1."""
    if m < 1:
        raise ValueError(f"dicyclic parameter must be >= 1, got {m}")
    _order_guard(4 * m)
    n2 = 2 * m
    idx = np.arange(4 * m, dtype=np.int32)
    i1, j1 = (idx % n2)[:, None], (idx // n2)[:, None]
    i2, j2 = (idx % n2)[None, :], (idx // n2)[None, :]
    # j1 = 0: plain rotation composition; j1 = 1: b twists the incoming
    # rotation and b^2 contributes a^m when both factors carry b.
    i3 = np.where(j1 == 0, i1 + i2, i1 - i2 + np.where(j2 == 1, m, 0)) % n2
    j3 = j1 ^ j2
    return FiniteGroup(i3 + n2 * j3, name=name or f"Dic{m}")


def quaternion8(*, name: str | None = None) -> FiniteGroup:
    return dicyclic(2, name=name or "Q8")


def symmetric(n: int, *, name: str | None = None) -> FiniteGroup:
    if n < 1:
        raise ValueError(f"symmetric group degree must be >= 1, got {n}")
    perms = [Permutation(p) for p in itertools.permutations(range(n))]
    cap = config.max_order()
    if len(perms) > cap:
        raise errors.OrderTooLarge(f"|S{n}| = {len(perms)} exceeds the cap {cap}")
    index_of = {p.images: i for i, p in enumerate(perms)}
    size = len(perms)
    table = [
        [index_of[perms[i].compose(perms[j]).images] for j in range(size)] for i in range(size)
    ]
    return FiniteGroup(table, name=name or f"S{n}", perm_rep=tuple(perms))


def abelian(factors, *, name: str | None = None) -> FiniteGroup:
    """Direct product of cyclic groups; first factor most significant."""
    sizes = [int(f) for f in factors if int(f) != 1]
    if any(f < 1 for f in sizes):
        raise ValueError(f"cyclic factors must be >= 1, got {list(factors)}")
    if not sizes:
        return cyclic(1, name=name)
    if intarith.product(sizes) > config.max_order():
        raise errors.OrderTooLarge(
            f"product order {intarith.product(sizes)} exceeds the cap {config.max_order()}"
        )
    group = cyclic(sizes[0])
    for f in sizes[1:]:
        group, _, _ = direct_product(group, cyclic(f))
    if name:
        group.name = name
    return group


def elementary_abelian(p: int, k: int, *, name: str | None = None) -> FiniteGroup:
    if not intarith.is_prime(p):
        raise errors.NotPrime(f"{p} is not prime")
    if k < 0:
        raise ValueError(f"rank must be >= 0, got {k}")
    return abelian([p] * k, name=name)


def direct_product(G: FiniteGroup, H: FiniteGroup, *, name: str | None = None):
    """G x H on pair indices i*|H| + j, with the two embeddings."""
    nG, nH = G.order, H.order
    if nG * nH > config.max_order():
        raise errors.OrderTooLarge(f"product order {nG * nH} exceeds the cap {config.max_order()}")
    tG = G._t32
    tH = H._t32
    table = (tG[:, None, :, None] * nH + tH[None, :, None, :]).reshape(nG * nH, nG * nH)
    if name is None and G.name and H.name:
        name = f"{G.name}x{H.name}"
    prod = FiniteGroup(table, name=name)
    embed_g = Homomorphism(G, prod, tuple(i * nH + H.identity for i in range(nG)))
    embed_h = Homomorphism(H, prod, tuple(G.identity * nH + j for j in range(nH)))
    return prod, embed_g, embed_h


def standard_group(kind: str, *args: int) -> FiniteGroup:
    """Constructor dispatch by family name, for catalogs and the CLI."""
    table = {
        "cyclic": (cyclic, 1),
        "dihedral": (dihedral, 1),
        "dicyclic": (dicyclic, 1),
        "quaternion8": (quaternion8, 0),
        "symmetric": (symmetric, 1),
        "elementary_abelian": (elementary_abelian, 2),
    }
    if kind == "abelian":
        if not args:
            raise ValueError("abelian requires at least one factor")
        return abelian(list(args))
    if kind not in table:
        raise ValueError(f"unknown standard group kind {kind!r}")
    fn, arity = table[kind]
    if len(args) != arity:
        raise ValueError(f"{kind} takes {arity} argument(s), got {len(args)}")
    return fn(*args)


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> Homomorphism | None:
    """An isomorphism G -> H if one exists, found deterministically."""
    if G.order != H.order or G.is_abelian != H.is_abelian:
        return None
    if G.order_profile != H.order_profile:
        return None
    gens = G.minimal_generating_tuple()
    mapping = _kernels.get().isomorphism_search(
        G._t32,
        G.identity,
        list(G.element_orders),
        list(gens),
        H._t32,
        H.identity,
        list(H.element_orders),
    )
    if mapping is None:
        return None
    hom = Homomorphism(G, H, tuple(mapping))
    assert hom.is_bijective()
    return hom


# -- plain-text table files ---------------------------------------------------


def read_cayley_table(path, *, name: str | None = None) -> FiniteGroup:
    """Whitespace-separated integer rows; # starts a comment line."""
    p = Path(path)
    rows = []
    for line in p.read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        rows.append([int(tok) for tok in line.split()])
    if not rows:
        raise errors.NoIdentity(f"{p}: no table rows found")
    return FiniteGroup(rows, name=name or p.stem)


def write_cayley_table(G: FiniteGroup, path) -> None:
    p = Path(path)
    lines = [" ".join(str(int(v)) for v in row) for row in G.table]
    p.write_text("\n".join(lines) + "\n")
