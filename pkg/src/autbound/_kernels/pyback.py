"""Pure-Python kernel backend.

Reference implementation of the hot loops: table validation, closure,
order computation, and the backtracking searches for automorphisms,
endomorphisms, isomorphisms, and minimum generating tuples.  The compiled
backend in cyback.pyx mirrors these semantics exactly; results must be
byte-for-byte identical so either backend can serve any caller.

All entry points take the Cayley table as a C-contiguous numpy int32 array
plus plain ints/sequences, and return plain Python containers.
"""

from __future__ import annotations

import itertools

import numpy as np

NAME = "python"


def _flat(table: np.ndarray) -> tuple[list[int], int]:
    n = table.shape[0]
    return table.ravel().tolist(), n


def latin_violation(table: np.ndarray):
    """First ("row"|"col", index) that is not a permutation, or None."""
    flat, n = _flat(table)
    for i in range(n):
        seen = bytearray(n)
        base = i * n
        for j in range(n):
            v = flat[base + j]
            if seen[v]:
                return ("row", i)
            seen[v] = 1
    for j in range(n):
        seen = bytearray(n)
        for i in range(n):
            v = flat[i * n + j]
            if seen[v]:
                return ("col", j)
            seen[v] = 1
    return None


def find_identity(table: np.ndarray) -> int:
    """Index of the two-sided identity, or -1: scan rows for [0..n-1]."""
    flat, n = _flat(table)
    ident = list(range(n))
    for e in range(n):
        if flat[e * n : e * n + n] == ident:
            if all(flat[j * n + e] == j for j in range(n)):
                return e
    return -1


def assoc_violation(table: np.ndarray):
    """First (i, j, k) with (ij)k != i(jk), or None."""
    T = table
    n = T.shape[0]
    for i in range(n):
        left = T[T[i], :]  # [j, k] -> (ij)k
        right = T[i, T]  # [j, k] -> i(jk)
        if not np.array_equal(left, right):
            bad = np.argwhere(left != right)
            j, k = (int(v) for v in bad[0])
            return (i, j, k)
    return None


def closure(table: np.ndarray, identity: int, seed) -> list[int]:
    """Sorted member list of the subgroup generated by seed."""
    flat, n = _flat(table)
    inset = bytearray(n)
    inset[identity] = 1
    members = [identity]
    gens: list[int] = []
    for s in seed:
        if not inset[s]:
            inset[s] = 1
            members.append(s)
        if s != identity and s not in gens:
            gens.append(s)
    i = 0
    while i < len(members):
        base = members[i] * n
        for s in gens:
            y = flat[base + s]
            if not inset[y]:
                inset[y] = 1
                members.append(y)
        i += 1
    return sorted(members)


def element_orders(table: np.ndarray, identity: int) -> list[int]:
    """Multiplicative order of every element."""
    flat, n = _flat(table)
    orders = [0] * n
    for g in range(n):
        k = 1
        x = g
        while x != identity:
            x = flat[x * n + g]
            k += 1
        orders[g] = k
    return orders


def hom_violation(dom_table: np.ndarray, cod_table: np.ndarray, mapping):
    """First (x, y) with f(xy) != f(x)f(y), or None."""
    m = np.asarray(mapping, dtype=np.int32)
    lhs = m[dom_table]
    rhs = cod_table[m[:, None], m[None, :]]
    if lhs.shape != rhs.shape:
        raise ValueError("mapping length does not match the domain order")
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        x, y = (int(v) for v in bad[0])
        return (x, y)
    return None


def generation_chain(table: np.ndarray, identity: int, gens):
    """Incremental closure of <g1..gd> recording each element's first product.

    Returns (members, level_sizes, steps): steps[i] lists (elem, parent, gen)
    with elem = parent*gen first reached while closing <g1..g_{i+1}>; parent
    and gen always precede elem, so an image map extends level by level.
    """
    flat, n = _flat(table)
    inset = bytearray(n)
    inset[identity] = 1
    members = [identity]
    level_sizes: list[int] = []
    steps: list[list[tuple[int, int, int]]] = []
    active: list[int] = []
    for g in gens:
        assert not inset[g], "generator already inside the closed prefix"
        inset[g] = 1
        members.append(g)
        active.append(g)
        st: list[tuple[int, int, int]] = []
        i = 0
        while i < len(members):
            x = members[i]
            base = x * n
            for s in active:
                y = flat[base + s]
                if not inset[y]:
                    inset[y] = 1
                    members.append(y)
                    st.append((y, x, s))
            i += 1
        steps.append(st)
        level_sizes.append(len(members))
    return members, level_sizes, steps


def _search_space_cap(n: int, depth: int) -> int:
    cap = 1
    for k in range(depth):
        cap *= max(n - (1 << k), 1)
    return cap


def aut_enumeration(table: np.ndarray, identity: int, orders, gens, limit: int):
    """All automorphisms as image tuples, sorted; None if count exceeds limit.

    Backtracking over images of the generating tuple: candidates must match
    element order and avoid the subgroup already hit; each extension is
    checked pairwise against the table, so a surviving full map is verified.
    """
    flat, n = _flat(table)
    if not gens:
        return [tuple(range(n))]
    members, level_sizes, steps = generation_chain(table, identity, gens)
    assert level_sizes[-1] == n, "generators do not generate the group"
    depth = len(gens)
    pools = [[h for h in range(n) if orders[h] == orders[g]] for g in gens]
    m = [-1] * n
    used = bytearray(n)
    m[identity] = identity
    used[identity] = 1
    results: list[tuple[int, ...]] = []
    complete = 0
    space_cap = _search_space_cap(n, depth)

    def extend(level: int) -> bool:
        nonlocal complete
        prev = level_sizes[level - 1] if level else 1
        g = gens[level]
        for cand in pools[level]:
            if used[cand]:
                continue
            trail = [g]
            m[g] = cand
            used[cand] = 1
            ok = True
            for elem, parent, s in steps[level]:
                img = flat[m[parent] * n + m[s]]
                if used[img] or orders[img] != orders[elem]:
                    ok = False
                    break
                m[elem] = img
                used[img] = 1
                trail.append(elem)
            if ok:
                sz = level_sizes[level]
                new_start = prev
                for xi in range(sz):
                    x = members[xi]
                    mx = m[x]
                    xbase = x * n
                    lo = new_start if xi < new_start else 0
                    for yi in range(lo, sz):
                        y = members[yi]
                        if flat[mx * n + m[y]] != m[flat[xbase + y]]:
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                if level + 1 == depth:
                    complete += 1
                    if complete > limit:
                        return False
                    results.append(tuple(m))
                else:
                    if not extend(level + 1):
                        return False
            for elem in trail:
                used[m[elem]] = 0
                m[elem] = -1
        return True

    if not extend(0):
        return None
    assert complete <= space_cap, "search exceeded its structural bound"
    results.sort()
    return results


def bijection_automorphisms(table: np.ndarray, identity: int):
    """Oracle: all bijections fixing the identity, filtered by the table."""
    flat, n = _flat(table)
    others = [x for x in range(n) if x != identity]
    results: list[tuple[int, ...]] = []
    m = [0] * n
    m[identity] = identity
    for images in itertools.permutations(others):
        for x, img in zip(others, images):
            m[x] = img
        ok = True
        for x in range(n):
            base = x * n
            mx = m[x]
            for y in range(n):
                if m[flat[base + y]] != flat[mx * n + m[y]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            results.append(tuple(m))
    results.sort()
    return results


def _walk_extend(flat: list[int], n: int, identity: int, gens, images):
    """Grow a candidate map from generator images by table products.

    Independent of the chain machinery above: plain breadth-first walk,
    rejecting on the first inconsistent product.  Returns the full map or
    None; the caller still validates the homomorphism law.
    """
    m = [-1] * n
    m[identity] = identity
    for g, img in zip(gens, images):
        if m[g] >= 0 and m[g] != img:
            return None
        m[g] = img
    queue = [identity] + [g for g in gens if g != identity]
    seen = bytearray(n)
    seen[identity] = 1
    for g in gens:
        seen[g] = 1
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        base = x * n
        for g in gens:
            y = flat[base + g]
            img = flat[m[x] * n + m[g]]
            if m[y] < 0:
                m[y] = img
            elif m[y] != img:
                return None
            if not seen[y]:
                seen[y] = 1
                queue.append(y)
    if any(v < 0 for v in m):
        return None
    return m


def generator_image_automorphisms(table: np.ndarray, identity: int, gens):
    """Oracle: unpruned enumeration over all generator image tuples."""
    flat, n = _flat(table)
    if not gens:
        return [tuple(range(n))]
    results: list[tuple[int, ...]] = []
    for images in itertools.product(range(n), repeat=len(gens)):
        m = _walk_extend(flat, n, identity, gens, images)
        if m is None or len(set(m)) != n:
            continue
        ok = True
        for x in range(n):
            base = x * n
            mx = m[x]
            for y in range(n):
                if m[flat[base + y]] != flat[mx * n + m[y]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            results.append(tuple(m))
    results.sort()
    return results


def endomorphism_count(table: np.ndarray, identity: int, orders, gens) -> int:
    """Count of maps f with f(xy) = f(x)f(y), by generator-image backtracking."""
    flat, n = _flat(table)
    if not gens:
        return 1
    members, level_sizes, steps = generation_chain(table, identity, gens)
    assert level_sizes[-1] == n, "generators do not generate the group"
    depth = len(gens)
    pools = [[h for h in range(n) if orders[gens[i]] % orders[h] == 0] for i in range(depth)]
    m = [-1] * n
    m[identity] = identity
    count = 0

    def extend(level: int) -> None:
        nonlocal count
        prev = level_sizes[level - 1] if level else 1
        g = gens[level]
        for cand in pools[level]:
            trail = [g]
            m[g] = cand
            ok = True
            for elem, parent, s in steps[level]:
                img = flat[m[parent] * n + m[s]]
                if orders[elem] % orders[img] != 0:
                    ok = False
                    break
                m[elem] = img
                trail.append(elem)
            if ok:
                sz = level_sizes[level]
                for xi in range(sz):
                    x = members[xi]
                    mx = m[x]
                    xbase = x * n
                    lo = prev if xi < prev else 0
                    for yi in range(lo, sz):
                        y = members[yi]
                        if flat[mx * n + m[y]] != m[flat[xbase + y]]:
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                if level + 1 == depth:
                    count += 1
                else:
                    extend(level + 1)
            for elem in trail:
                m[elem] = -1

    extend(0)
    return count


def isomorphism_search(
    dom_table: np.ndarray,
    dom_identity: int,
    dom_orders,
    gens,
    cod_table: np.ndarray,
    cod_identity: int,
    cod_orders,
):
    """First isomorphism as an image tuple, or None."""
    dflat, n = _flat(dom_table)
    cflat, nc = _flat(cod_table)
    if n != nc:
        return None
    if not gens:
        return (cod_identity,) if n == 1 else None
    members, level_sizes, steps = generation_chain(dom_table, dom_identity, gens)
    assert level_sizes[-1] == n, "generators do not generate the group"
    depth = len(gens)
    pools = [[h for h in range(n) if cod_orders[h] == dom_orders[g]] for g in gens]
    m = [-1] * n
    used = bytearray(n)
    m[dom_identity] = cod_identity
    used[cod_identity] = 1

    def extend(level: int):
        prev = level_sizes[level - 1] if level else 1
        g = gens[level]
        for cand in pools[level]:
            if used[cand]:
                continue
            trail = [g]
            m[g] = cand
            used[cand] = 1
            ok = True
            for elem, parent, s in steps[level]:
                img = cflat[m[parent] * n + m[s]]
                if used[img] or cod_orders[img] != dom_orders[elem]:
                    ok = False
                    break
                m[elem] = img
                used[img] = 1
                trail.append(elem)
            if ok:
                sz = level_sizes[level]
                for xi in range(sz):
                    x = members[xi]
                    mx = m[x]
                    xbase = x * n
                    lo = prev if xi < prev else 0
                    for yi in range(lo, sz):
                        y = members[yi]
                        if cflat[mx * n + m[y]] != m[dflat[xbase + y]]:
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                if level + 1 == depth:
                    return tuple(m)
                found = extend(level + 1)
                if found is not None:
                    return found
            for elem in trail:
                used[m[elem]] = 0
                m[elem] = -1
        return None

    return extend(0)


def min_generating(table: np.ndarray, identity: int, orders, abelian: bool):
    """(d, tuple): least generating-set size with the first witness tuple.

    Ascending-index depth-first search per size; candidates already inside
    the running subgroup are skipped (sound: smaller sizes were exhausted),
    and for abelian groups branches are cut when size * exp^remaining cannot
    reach the group order (exact growth |<H,g>| = |H| * min{t : g^t in H}).
    """
    flat, n = _flat(table)
    if n == 1:
        return 0, ()
    exp = 1
    if abelian:
        from ..intarith import lcm_all

        exp = lcm_all(orders)
    k0 = 1
    if abelian:
        reach = exp
        while reach < n:
            reach *= exp
            k0 += 1
    max_k = n.bit_length()

    def dfs(chosen: list[int], inset: bytearray, size: int, start: int, slots: int):
        for g in range(start, n):
            if inset[g]:
                continue
            if abelian:
                t = 1
                x = g
                while not inset[x]:
                    x = flat[x * n + g]
                    t += 1
                newsize = size * t
                if newsize * exp ** (slots - 1) < n:
                    continue
                if slots == 1:
                    if newsize == n:
                        return chosen + [g]
                    continue
                new_members = closure(table, identity, chosen + [g])
                assert len(new_members) == newsize
            else:
                new_members = closure(table, identity, chosen + [g])
                newsize = len(new_members)
                if newsize == n:
                    assert slots == 1, "smaller generating set missed by an earlier round"
                    return chosen + [g]
                if slots == 1:
                    continue
            nxt = bytearray(n)
            for x in new_members:
                nxt[x] = 1
            found = dfs(chosen + [g], nxt, newsize, g + 1, slots - 1)
            if found is not None:
                return found
        return None

    for k in range(k0, max_k + 1):
        root = bytearray(n)
        root[identity] = 1
        found = dfs([], root, 1, 0, k)
        if found is not None:
            return k, tuple(found)
    raise AssertionError(f"no generating set of size <= {max_k} found")
