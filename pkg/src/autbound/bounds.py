"""Exact evaluation of the inequalities behind the finiteness theorem.

Every entry is computed with arbitrary-precision integers; no floats.
Right-hand sides like n^(2n^3) are materialized only while they fit a bit
budget; beyond that the comparison still runs exactly through clamped
square-and-multiply, and the rhs field carries a certified lower bound
note instead of a value.

The witness pipeline replays the finiteness proof on a concrete group:
coset representatives, the bounded subgroup U, the center split C x D,
the product decomposition G = UC x D, and the factor-count bound on D.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import config, errors, intarith
from ._kernels import get as _kernel
from .aut import AutGroup, endomorphism_count, exponent_shift, factor_mixing_automorphism
from .core import FiniteGroup, Subgroup
from .decomp import primary_component, primary_decomposition, split_over_subgroup

AUDIT_MAX_BITS = 100_000_000  # hard ceiling for forced materialization


class BoundEntry(NamedTuple):
    """One evaluated inequality: lhs <= rhs.

    rhs is None when the exact value was too large to materialize; rhs_note
    then carries a certified lower bound such as ">=2^126749".  holds and
    equality are exact either way.  param is the prime for per-prime ids.
    """

    bound_id: str
    param: int | None
    lhs: int
    rhs: int | None
    rhs_note: str
    holds: bool
    equality: bool


@dataclass(frozen=True)
class BoundReport:
    """All inequality entries for one group, n = |Aut(G)|."""

    group_name: str
    order: int
    n: int
    entries: tuple[BoundEntry, ...]
    phi_value: int
    end_count: int | None

    def entry(self, bound_id: str, param: int | None = None) -> BoundEntry:
        for e in self.entries:
            if e.bound_id == bound_id and e.param == param:
                return e
        raise KeyError(f"no entry {bound_id!r} with param {param!r}")

    @property
    def all_hold(self) -> bool:
        return all(e.holds for e in self.entries)


class EqualityClass(NamedTuple):
    reverse_equality: bool
    prime_order: bool
    boolean: bool


def _aut_order(aut: AutGroup | int) -> int:
    if isinstance(aut, AutGroup):
        return aut.order
    if isinstance(aut, int):
        if aut < 1:
            raise ValueError(f"automorphism count must be positive, got {aut}")
        return aut
    raise TypeError(f"expected AutGroup or int, got {type(aut).__name__}")


def _int_entry(bound_id: str, param: int | None, lhs: int, rhs: int) -> BoundEntry:
    return BoundEntry(bound_id, param, int(lhs), int(rhs), "", lhs <= rhs, lhs == rhs)


def _power_entry(
    bound_id: str,
    param: int | None,
    lhs: int,
    base: int,
    exp: int,
    offset: int,
    materialize_all: bool,
) -> BoundEntry:
    """Entry for lhs <= base**exp - offset with offset in {0, 1}."""
    if materialize_all:
        if intarith.pow_bits_upper(base, exp) > AUDIT_MAX_BITS:
            raise errors.OrderTooLarge(
                f"{bound_id}: rhs exceeds {AUDIT_MAX_BITS} bits even for audit"
            )
        rhs = base**exp - offset
        return BoundEntry(bound_id, param, lhs, rhs, "", lhs <= rhs, lhs == rhs)
    value = intarith.materialize_pow(base, exp)
    if value is not None:
        rhs = value - offset
        return BoundEntry(bound_id, param, lhs, rhs, "", lhs <= rhs, lhs == rhs)
    # rhs >= lhs  iff  base**exp >= lhs + offset; strictness decides equality
    holds = intarith.pow_at_least(base, exp, lhs + offset)
    strict = intarith.pow_at_least(base, exp, lhs + offset + 1)
    note = f">=2^{intarith.pow_bits_lower(base, exp)}" + ("-1" if offset else "")
    return BoundEntry(bound_id, param, lhs, None, note, holds, holds and not strict)


def bound_report(
    G: FiniteGroup, aut: AutGroup | int, *, materialize_all: bool = False
) -> BoundReport:
    """Evaluate every inequality for G given its automorphism count.

    aut may be a full AutGroup or a bare count (used for abelian groups
    whose automorphism group is too large to enumerate).  With
    materialize_all the giant right-hand sides are forced to exact
    integers, failing loudly past the audit bit ceiling.
    """
    n = _aut_order(aut)
    order = G.order
    entries: list[BoundEntry] = []

    entries.append(_int_entry("easy", None, n, math.factorial(order - 1)))
    entries.append(_int_entry("inn", None, order // G.center.order, n))

    if G.is_abelian:
        d_ab = G.min_generating_size()
        entries.append(_int_entry("dG", None, order, G.exponent**d_ab))

    primes = intarith.prime_divisors(order)
    for p in primes:
        entries.append(_int_entry("aut_prime", p, p - 1, n))

    Gp = G.commutator_subgroup
    entries.append(
        _power_entry("schur", None, Gp.order, n, 2 * n**3, 0, materialize_all)
    )

    _, width, m_z = schur_data(G)
    entries.append(_int_entry("width", None, width, m_z**3))

    entries.append(_int_entry("primes", None, max(primes, default=0), n + 1))

    for p in primes:
        if order % (p * p) == 0:
            r = n % p
            entries.append(BoundEntry("herstein_adney", p, r, 0, "", r == 0, r == 0))

    N = exponent_shift(G)
    abelianization, _ = G.quotient(Gp)
    entries.append(
        _power_entry(
            "exp_bound", None, abelianization.exponent, 1 + N, n, 1, materialize_all
        )
    )

    d = G.min_generating_size()
    entries.append(
        _int_entry("reverse", None, n, intarith.product(order - 2**k for k in range(d)))
    )
    omega = intarith.primes_with_multiplicity(order)
    refined = intarith.product(
        order - intarith.product(omega[:k]) for k in range(d)
    )
    entries.append(_int_entry("reverse_refined", None, n, refined))
    entries.append(_int_entry("log2_d", None, 2**d, order))

    phi = intarith.totient(order)
    entries.append(_int_entry("deaconescu", None, phi, n))

    end_count: int | None = None
    if order <= config.END_MAX_GROUP_ORDER:
        end_count = endomorphism_count(G)
        entries.append(_int_entry("end_conj", None, order, end_count))

    return BoundReport(G.name, order, n, tuple(entries), phi, end_count)


def equality_classifier(G: FiniteGroup, report: BoundReport) -> EqualityClass:
    """Reverse-bound equality against its characterization.

    Equality must occur exactly for prime order or exponent <= 2 (boolean);
    the agreement of the two determinations is asserted.
    """
    e = report.entry("reverse")
    prime = intarith.is_prime(G.order)
    boolean = G.exponent <= 2
    assert e.equality == (prime or boolean), (G.name, e, prime, boolean)
    return EqualityClass(e.equality, prime, boolean)


def schur_data(G: FiniteGroup) -> tuple[int, int, int]:
    """(|Gamma|, commutator width, m) for Gamma = commutators of coset reps.

    m = |G/Z(G)|.  Commutators depend only on cosets mod the center, so
    Gamma comes from m^2 pairs; |Gamma| <= m^2 and width <= m^3 asserted.
    Width is the eccentricity of the identity in the Gamma-multiplication
    graph on G', 0 for the identity itself.
    """
    t = G.table
    zmembers = np.array(G.center.members, dtype=np.intp)
    m = G.order // len(zmembers)
    covered = np.zeros(G.order, dtype=bool)
    reps: list[int] = []
    for x in range(G.order):
        if not covered[x]:
            reps.append(x)
            covered[t[x, zmembers]] = True
    assert len(reps) == m
    gamma = {G.commutator(a, b) for a in reps for b in reps}
    assert len(gamma) <= m * m
    dist = {G.identity: 0}
    frontier = [G.identity]
    while frontier:
        nxt: list[int] = []
        for x in frontier:
            for c in gamma:
                y = int(t[x, c])
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    assert set(dist) == set(G.commutator_subgroup.members)
    width = max(dist.values())
    assert width <= m**3
    return len(gamma), width, m


def _bijective_product(G: FiniteGroup, left: Subgroup, right: Subgroup) -> bool:
    """Whether left x right -> G, (a, b) -> ab is a bijection."""
    if left.order * right.order != G.order:
        return False
    prods = G.table[np.ix_(np.array(left.members), np.array(right.members))]
    return len(np.unique(prods)) == G.order


def central_p_complement(
    G: FiniteGroup, p: int
) -> tuple[Subgroup, Subgroup] | None:
    """Split G = Z(G)_p x Q when the full p-part of G is central.

    Returns None when |G|_p != |Z(G)|_p.  The complement is forced: it must
    be exactly the set of p'-elements, so the search space is a single
    candidate whose closure and product structure are verified.
    """
    if not intarith.is_prime(p):
        raise errors.NotPrime(f"{p} is not prime")
    gp = intarith.p_part(G.order, p)
    if gp != intarith.p_part(G.center.order, p):
        return None
    orders = G.element_orders
    zp_members = tuple(
        z for z in G.center.members if gp % orders[z] == 0
    )
    Zp = Subgroup(G, zp_members)
    assert Zp.order == gp
    seeds = [x for x in range(G.order) if orders[x] % p != 0]
    q_members = _kernel().closure(G._t32, G.identity, seeds)
    assert len(q_members) == G.order // gp, "p'-elements must close to the complement"
    Q = Subgroup(G, tuple(q_members))
    assert set(Zp.members) & set(Q.members) == {G.identity}
    assert _bijective_product(G, Zp, Q)
    return Zp, Q


def exp_factor_divisibility(
    G: FiniteGroup, aut: AutGroup | int
) -> tuple[tuple[int, bool], ...]:
    """Per direct factor of G/G': does ord(gG') divide (1+N)^n - 1?

    Checked modularly, so astronomically large n costs nothing.
    """
    n = _aut_order(aut)
    N = exponent_shift(G)
    abelianization, _ = G.quotient(G.commutator_subgroup)
    dec = primary_decomposition(abelianization)
    return tuple(
        (f.order, pow(1 + N, n, f.order) == 1 % f.order) for f in dec.factors
    )


@dataclass(frozen=True)
class TheoremAWitness:
    """Concrete data from one run of the finiteness proof pipeline.

    U, C, D are subgroups of the input group; m counts the cosets of
    Z(G)G'; N is the exponent shift.  Every check flag must be true on
    valid input; a false flag is a library defect, not a property of the
    group, since the underlying theorem is proved.
    """

    group_name: str
    m: int
    U: Subgroup
    C: Subgroup
    D: Subgroup
    N: int
    checks: tuple[tuple[str, bool], ...]

    @property
    def all_true(self) -> bool:
        return all(flag for _, flag in self.checks)

    def check(self, check_id: str) -> bool:
        for cid, flag in self.checks:
            if cid == check_id:
                return flag
        raise KeyError(check_id)


def theorem_a_witness(G: FiniteGroup, aut: AutGroup | int) -> TheoremAWitness:
    """Replay the finiteness proof on G and record every verification.

    Steps: least-index representatives of G/Z(G)G'; U = <reps>G' with
    d(U/G') <= m <= n; the big-integer bound |U| <= exp(G)^n n^(2n^3);
    the center split Z(G) = C x D with U meet Z(G) inside C and
    d(C) <= |U meet Z(G)|; the product split G = UC x D; and the bound
    k <= n on the number of cyclic factors of each primary component
    of D, realized by distinct mixing automorphisms.
    """
    n = _aut_order(aut)
    t = G.table
    ker = _kernel()
    Z = G.center
    Gp = G.commutator_subgroup

    zgp_members = ker.closure(G._t32, G.identity, list(Z.members) + list(Gp.members))
    zgp = np.array(zgp_members, dtype=np.intp)
    m = G.order // len(zgp_members)
    covered = np.zeros(G.order, dtype=bool)
    reps: list[int] = []
    for x in range(G.order):
        if not covered[x]:
            reps.append(x)
            covered[t[x, zgp]] = True
    assert len(reps) == m

    U = Subgroup(G, tuple(ker.closure(G._t32, G.identity, reps + list(Gp.members))))
    U_grp, u_parent = U.as_group()
    u_pos = {g: i for i, g in enumerate(u_parent)}
    gp_in_u = Subgroup(U_grp, tuple(sorted(u_pos[g] for g in Gp.members)))
    u_quot, _ = U_grp.quotient(gp_in_u)
    c_rank = u_quot.min_generating_size() <= m <= n

    r1 = intarith.materialize_pow(G.exponent, n)
    r2 = intarith.materialize_pow(n, 2 * n**3)
    if r1 is None or r2 is None:
        # a factor too large to materialize is >= 2^200000, dwarfing |U|
        c_order = True
    else:
        c_order = U.order <= r1 * r2

    Z_grp, z_parent = Z.as_group()
    z_pos = {g: i for i, g in enumerate(z_parent)}
    uz_members = sorted(set(U.members) & set(Z.members))
    B_loc = Subgroup(Z_grp, tuple(z_pos[g] for g in uz_members))
    C_loc, D_loc = split_over_subgroup(Z_grp, B_loc)
    C = Subgroup(G, tuple(sorted(z_parent[i] for i in C_loc.members)))
    D = Subgroup(G, tuple(sorted(z_parent[i] for i in D_loc.members)))
    C_grp, _ = C.as_group()
    c_split = (
        set(uz_members) <= set(C.members)
        and C_grp.min_generating_size() <= len(uz_members)
        and _bijective_product(Z_grp, C_loc, D_loc)
    )

    UC = Subgroup(G, tuple(ker.closure(G._t32, G.identity, list(U.members) + list(C.members))))
    c_product = (
        set(UC.members) & set(D.members) == {G.identity}
        and UC.order * D.order == G.order
        and _bijective_product(G, UC, D)
    )

    c_factors = True
    D_grp, _ = D.as_group()
    for p in intarith.prime_divisors(D_grp.order):
        comp_grp, _ = primary_component(D_grp, p).as_group()
        dec = primary_decomposition(comp_grp)
        k = len(dec.factors)
        maps = {tuple(range(comp_grp.order))}
        maps.update(
            factor_mixing_automorphism(dec, l).mapping for l in range(2, k + 1)
        )
        c_factors = c_factors and len(maps) == k and k <= n

    checks = (
        ("d_U_quotient_le_n", c_rank),
        ("U_order_bound", c_order),
        ("Z_splits", c_split),
        ("product_split", c_product),
        ("D_abelian_bounded", c_factors),
    )
    return TheoremAWitness(G.name, m, U, C, D, exponent_shift(G), checks)
