# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernel backend.

Mirrors pyback.py function for function; outputs must be identical down to
ordering so the two backends are interchangeable.  Hot loops run over C
buffers; setup and result packaging stay at Python level.
"""

import itertools

import numpy as np

NAME = "c"


cdef object _flat_arr(object table):
    arr = np.ascontiguousarray(table, dtype=np.int32)
    return arr.reshape(-1)


def latin_violation(table):
    """First ("row"|"col", index) that is not a permutation, or None."""
    cdef const int[::1] flat = _flat_arr(table)
    cdef int n = table.shape[0]
    cdef unsigned char[::1] seen = np.zeros(n, dtype=np.uint8)
    cdef int i, j, v
    for i in range(n):
        seen[:] = 0
        for j in range(n):
            v = flat[i * n + j]
            if seen[v]:
                return ("row", i)
            seen[v] = 1
    for j in range(n):
        seen[:] = 0
        for i in range(n):
            v = flat[i * n + j]
            if seen[v]:
                return ("col", j)
            seen[v] = 1
    return None


def find_identity(table):
    """Index of the two-sided identity, or -1: scan rows for [0..n-1]."""
    cdef const int[::1] flat = _flat_arr(table)
    cdef int n = table.shape[0]
    cdef int e, j, ok
    for e in range(n):
        ok = 1
        for j in range(n):
            if flat[e * n + j] != j:
                ok = 0
                break
        if ok:
            for j in range(n):
                if flat[j * n + e] != j:
                    ok = 0
                    break
        if ok:
            return e
    return -1


def assoc_violation(table):
    """First (i, j, k) with (ij)k != i(jk), or None."""
    cdef const int[::1] flat = _flat_arr(table)
    cdef int n = table.shape[0]
    cdef int i, j, k, ij, jk
    for i in range(n):
        for j in range(n):
            ij = flat[i * n + j]
            for k in range(n):
                jk = flat[j * n + k]
                if flat[ij * n + k] != flat[i * n + jk]:
                    return (i, j, k)
    return None


cdef int _closure_c(const int[::1] flat, int n, int identity,
                    const int[::1] gens, int glen,
                    unsigned char[::1] inset, int[::1] members) except -1:
    """BFS closure into inset/members (discovery order); returns count."""
    cdef int cnt = 0, i = 0, gi, y, base
    inset[:] = 0
    inset[identity] = 1
    members[cnt] = identity
    cnt += 1
    for gi in range(glen):
        y = gens[gi]
        if not inset[y]:
            inset[y] = 1
            members[cnt] = y
            cnt += 1
    while i < cnt:
        base = members[i] * n
        for gi in range(glen):
            y = flat[base + gens[gi]]
            if not inset[y]:
                inset[y] = 1
                members[cnt] = y
                cnt += 1
        i += 1
    return cnt


def closure(table, identity, seed):
    """Sorted member list of the subgroup generated by seed."""
    cdef const int[::1] flat = _flat_arr(table)
    cdef int n = table.shape[0]
    gens_list = []
    for s in seed:
        if s != identity and s not in gens_list:
            gens_list.append(s)
    cdef const int[::1] gens = np.asarray(gens_list if gens_list else [], dtype=np.int32)
    cdef unsigned char[::1] inset = np.zeros(n, dtype=np.uint8)
    cdef int[::1] members = np.empty(n, dtype=np.int32)
    cdef int cnt = _closure_c(flat, n, int(identity), gens, len(gens_list), inset, members)
    out = [int(members[i]) for i in range(cnt)]
    out.sort()
    return out


def element_orders(table, identity):
    """Multiplicative order of every element."""
    cdef const int[::1] flat = _flat_arr(table)
    cdef int n = table.shape[0]
    cdef int e = identity
    cdef int[::1] orders = np.zeros(n, dtype=np.int32)
    cdef int g, k, x
    for g in range(n):
        k = 1
        x = g
        while x != e:
            x = flat[x * n + g]
            k += 1
        orders[g] = k
    return [int(orders[g]) for g in range(n)]


def hom_violation(dom_table, cod_table, mapping):
    """First (x, y) with f(xy) != f(x)f(y), or None."""
    cdef const int[::1] dflat = _flat_arr(dom_table)
    cdef const int[::1] cflat = _flat_arr(cod_table)
    cdef int n = dom_table.shape[0]
    cdef int nc = cod_table.shape[0]
    if len(mapping) != n:
        raise ValueError("mapping length does not match the domain order")
    cdef const int[::1] m = np.asarray(mapping, dtype=np.int32)
    cdef int x, y, mx
    for x in range(n):
        mx = m[x]
        for y in range(n):
            if m[dflat[x * n + y]] != cflat[mx * nc + m[y]]:
                return (x, y)
    return None


def _chain_arrays(table, flat_obj, identity, gens):
    """generation_chain flattened into numpy arrays for the C searches."""
    cdef const int[::1] flat = flat_obj
    cdef int n = table.shape[0]
    inset = bytearray(n)
    inset[identity] = 1
    members = [identity]
    level_sizes = []
    s_elem, s_parent, s_gen, s_off = [], [], [], [0]
    active = []
    cdef int x, y, base
    for g in gens:
        assert not inset[g], "generator already inside the closed prefix"
        inset[g] = 1
        members.append(g)
        active.append(g)
        i = 0
        while i < len(members):
            x = members[i]
            base = x * n
            for s in active:
                y = flat[base + s]
                if not inset[y]:
                    inset[y] = 1
                    members.append(y)
                    s_elem.append(y)
                    s_parent.append(x)
                    s_gen.append(s)
            i += 1
        s_off.append(len(s_elem))
        level_sizes.append(len(members))
    return (
        np.asarray(members, dtype=np.int32),
        np.asarray(level_sizes, dtype=np.int32),
        np.asarray(s_elem if s_elem else [], dtype=np.int32),
        np.asarray(s_parent if s_parent else [], dtype=np.int32),
        np.asarray(s_gen if s_gen else [], dtype=np.int32),
        np.asarray(s_off, dtype=np.int32),
    )


cdef long long _space_cap(int n, int depth):
    cdef long long cap = 1, term
    cdef int k
    for k in range(depth):
        term = n - (1LL << k)
        if term < 1:
            term = 1
        cap *= term
        if cap > (1LL << 62):
            return 1LL << 62
    return cap


cdef int _aut_extend(int level, int depth, int n,
                     const int[::1] flat, const int[::1] orders,
                     const int[::1] members, const int[::1] level_sizes,
                     const int[::1] s_elem, const int[::1] s_parent,
                     const int[::1] s_gen, const int[::1] s_off,
                     const int[::1] pool, const int[::1] pool_off,
                     const int[::1] gens,
                     int[::1] m, unsigned char[::1] used,
                     int[:, ::1] trail, long long limit,
                     long long[::1] complete, list results) except -1:
    """Returns 1 while under the limit, 0 once it is exceeded."""
    cdef int prev = level_sizes[level - 1] if level > 0 else 1
    cdef int sz = level_sizes[level]
    cdef int g = gens[level]
    cdef int pi, cand, tcount, si, elem, img, ok, xi, yi, lo, x, y, mx, xbase, t
    for pi in range(pool_off[level], pool_off[level + 1]):
        cand = pool[pi]
        if used[cand]:
            continue
        trail[level, 0] = g
        tcount = 1
        m[g] = cand
        used[cand] = 1
        ok = 1
        for si in range(s_off[level], s_off[level + 1]):
            elem = s_elem[si]
            img = flat[m[s_parent[si]] * n + m[s_gen[si]]]
            if used[img] or orders[img] != orders[elem]:
                ok = 0
                break
            m[elem] = img
            used[img] = 1
            trail[level, tcount] = elem
            tcount += 1
        if ok:
            for xi in range(sz):
                x = members[xi]
                mx = m[x]
                xbase = x * n
                lo = prev if xi < prev else 0
                for yi in range(lo, sz):
                    y = members[yi]
                    if flat[mx * n + m[y]] != m[flat[xbase + y]]:
                        ok = 0
                        break
                if not ok:
                    break
        if ok:
            if level + 1 == depth:
                complete[0] += 1
                if complete[0] > limit:
                    return 0
                results.append(tuple([int(m[t]) for t in range(n)]))
            else:
                if not _aut_extend(level + 1, depth, n, flat, orders, members,
                                   level_sizes, s_elem, s_parent, s_gen, s_off,
                                   pool, pool_off, gens, m, used, trail, limit,
                                   complete, results):
                    return 0
        for si in range(tcount):
            elem = trail[level, si]
            used[m[elem]] = 0
            m[elem] = -1
    return 1


def aut_enumeration(table, identity, orders, gens, limit):
    """All automorphisms as image tuples, sorted; None if count exceeds limit."""
    flat_obj = _flat_arr(table)
    cdef const int[::1] flat = flat_obj
    cdef int n = table.shape[0]
    if not gens:
        return [tuple(range(n))]
    members_a, sizes_a, se, sp, sg, soff = _chain_arrays(table, flat_obj, identity, gens)
    assert int(sizes_a[len(gens) - 1]) == n, "generators do not generate the group"
    cdef const int[::1] orders_v = np.asarray(orders, dtype=np.int32)
    pool_list, pool_off_list = [], [0]
    for g in gens:
        pool_list.extend(h for h in range(n) if orders[h] == orders[g])
        pool_off_list.append(len(pool_list))
    cdef int[::1] m = np.full(n, -1, dtype=np.int32)
    cdef unsigned char[::1] used = np.zeros(n, dtype=np.uint8)
    m[identity] = identity
    used[identity] = 1
    cdef long long[::1] complete = np.zeros(1, dtype=np.int64)
    cdef int[:, ::1] trail = np.empty((len(gens), n), dtype=np.int32)
    results: list = []
    ok = _aut_extend(0, len(gens), n, flat, orders_v,
                     members_a, sizes_a, se, sp, sg, soff,
                     np.asarray(pool_list if pool_list else [], dtype=np.int32),
                     np.asarray(pool_off_list, dtype=np.int32),
                     np.asarray(gens, dtype=np.int32),
                     m, used, trail, int(limit), complete, results)
    if not ok:
        return None
    assert complete[0] <= _space_cap(n, len(gens)), "search exceeded its structural bound"
    results.sort()
    return results


def bijection_automorphisms(table, identity):
    """Oracle: all bijections fixing the identity, filtered by the table."""
    flat_obj = _flat_arr(table)
    cdef const int[::1] flat = flat_obj
    cdef int n = table.shape[0]
    others = [x for x in range(n) if x != identity]
    cdef int[::1] m = np.zeros(n, dtype=np.int32)
    m[identity] = identity
    cdef int x, y, ok, mx, i
    results = []
    for images in itertools.permutations(others):
        for i in range(n - 1):
            m[others[i]] = images[i]
        ok = 1
        for x in range(n):
            mx = m[x]
            for y in range(n):
                if m[flat[x * n + y]] != flat[mx * n + m[y]]:
                    ok = 0
                    break
            if not ok:
                break
        if ok:
            results.append(tuple([int(m[i]) for i in range(n)]))
    results.sort()
    return results


cdef int _walk_extend_c(const int[::1] flat, int n, int identity,
                        const int[::1] gens, int glen, const int[::1] images,
                        int[::1] m, int[::1] queue, unsigned char[::1] seen) except -2:
    """Candidate map from generator images by table walk; 1 if complete."""
    cdef int i, g, x, y, img, qi, qlen, base
    for i in range(n):
        m[i] = -1
    m[identity] = identity
    for i in range(glen):
        g = gens[i]
        if m[g] >= 0 and m[g] != images[i]:
            return 0
        m[g] = images[i]
    seen[:] = 0
    seen[identity] = 1
    queue[0] = identity
    qlen = 1
    for i in range(glen):
        g = gens[i]
        if not seen[g]:
            seen[g] = 1
            queue[qlen] = g
            qlen += 1
    qi = 0
    while qi < qlen:
        x = queue[qi]
        qi += 1
        base = x * n
        for i in range(glen):
            g = gens[i]
            y = flat[base + g]
            img = flat[m[x] * n + m[g]]
            if m[y] < 0:
                m[y] = img
            elif m[y] != img:
                return 0
            if not seen[y]:
                seen[y] = 1
                queue[qlen] = y
                qlen += 1
    for i in range(n):
        if m[i] < 0:
            return 0
    return 1


def generator_image_automorphisms(table, identity, gens):
    """Oracle: unpruned enumeration over all generator image tuples."""
    flat_obj = _flat_arr(table)
    cdef const int[::1] flat = flat_obj
    cdef int n = table.shape[0]
    if not gens:
        return [tuple(range(n))]
    cdef const int[::1] gens_v = np.asarray(gens, dtype=np.int32)
    cdef int glen = len(gens)
    cdef int[::1] m = np.empty(n, dtype=np.int32)
    cdef int[::1] queue = np.empty(n, dtype=np.int32)
    cdef unsigned char[::1] seen = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] hit = np.zeros(n, dtype=np.uint8)
    cdef int[::1] img_v = np.empty(glen, dtype=np.int32)
    cdef int x, y, ok, mx, i, distinct
    results = []
    for images in itertools.product(range(n), repeat=glen):
        for i in range(glen):
            img_v[i] = images[i]
        if not _walk_extend_c(flat, n, identity, gens_v, glen, img_v, m, queue, seen):
            continue
        hit[:] = 0
        distinct = 1
        for i in range(n):
            if hit[m[i]]:
                distinct = 0
                break
            hit[m[i]] = 1
        if not distinct:
            continue
        ok = 1
        for x in range(n):
            mx = m[x]
            for y in range(n):
                if m[flat[x * n + y]] != flat[mx * n + m[y]]:
                    ok = 0
                    break
            if not ok:
                break
        if ok:
            results.append(tuple([int(m[i]) for i in range(n)]))
    results.sort()
    return results


cdef void _endo_extend(int level, int depth, int n,
                       const int[::1] flat, const int[::1] orders,
                       const int[::1] members, const int[::1] level_sizes,
                       const int[::1] s_elem, const int[::1] s_parent,
                       const int[::1] s_gen, const int[::1] s_off,
                       const int[::1] pool, const int[::1] pool_off,
                       const int[::1] gens,
                       int[::1] m, int[:, ::1] trail,
                       long long[::1] count):
    cdef int prev = level_sizes[level - 1] if level > 0 else 1
    cdef int sz = level_sizes[level]
    cdef int g = gens[level]
    cdef int pi, cand, tcount, si, elem, img, ok, xi, yi, lo, x, y, mx, xbase
    for pi in range(pool_off[level], pool_off[level + 1]):
        cand = pool[pi]
        trail[level, 0] = g
        tcount = 1
        m[g] = cand
        ok = 1
        for si in range(s_off[level], s_off[level + 1]):
            elem = s_elem[si]
            img = flat[m[s_parent[si]] * n + m[s_gen[si]]]
            if orders[elem] % orders[img] != 0:
                ok = 0
                break
            m[elem] = img
            trail[level, tcount] = elem
            tcount += 1
        if ok:
            for xi in range(sz):
                x = members[xi]
                mx = m[x]
                xbase = x * n
                lo = prev if xi < prev else 0
                for yi in range(lo, sz):
                    y = members[yi]
                    if flat[mx * n + m[y]] != m[flat[xbase + y]]:
                        ok = 0
                        break
                if not ok:
                    break
        if ok:
            if level + 1 == depth:
                count[0] += 1
            else:
                _endo_extend(level + 1, depth, n, flat, orders, members,
                             level_sizes, s_elem, s_parent, s_gen, s_off,
                             pool, pool_off, gens, m, trail, count)
        for si in range(tcount):
            m[trail[level, si]] = -1


def endomorphism_count(table, identity, orders, gens):
    """Count of maps f with f(xy) = f(x)f(y), by generator-image backtracking."""
    flat_obj = _flat_arr(table)
    cdef const int[::1] flat = flat_obj
    cdef int n = table.shape[0]
    if not gens:
        return 1
    members_a, sizes_a, se, sp, sg, soff = _chain_arrays(table, flat_obj, identity, gens)
    assert int(sizes_a[len(gens) - 1]) == n, "generators do not generate the group"
    pool_list, pool_off_list = [], [0]
    for g in gens:
        pool_list.extend(h for h in range(n) if orders[g] % orders[h] == 0)
        pool_off_list.append(len(pool_list))
    cdef int[::1] m = np.full(n, -1, dtype=np.int32)
    m[identity] = identity
    cdef long long[::1] count = np.zeros(1, dtype=np.int64)
    cdef int[:, ::1] trail = np.empty((len(gens), n), dtype=np.int32)
    _endo_extend(0, len(gens), n, flat, np.asarray(orders, dtype=np.int32),
                 members_a, sizes_a, se, sp, sg, soff,
                 np.asarray(pool_list if pool_list else [], dtype=np.int32),
                 np.asarray(pool_off_list, dtype=np.int32),
                 np.asarray(gens, dtype=np.int32), m, trail, count)
    return int(count[0])


cdef tuple _iso_extend(int level, int depth, int n,
                       const int[::1] dflat, const int[::1] cflat,
                       const int[::1] dorders, const int[::1] corders,
                       const int[::1] members, const int[::1] level_sizes,
                       const int[::1] s_elem, const int[::1] s_parent,
                       const int[::1] s_gen, const int[::1] s_off,
                       const int[::1] pool, const int[::1] pool_off,
                       const int[::1] gens,
                       int[::1] m, unsigned char[::1] used, int[:, ::1] trail):
    cdef int prev = level_sizes[level - 1] if level > 0 else 1
    cdef int sz = level_sizes[level]
    cdef int g = gens[level]
    cdef int pi, cand, tcount, si, elem, img, ok, xi, yi, lo, x, y, mx, xbase, t
    cdef tuple found
    for pi in range(pool_off[level], pool_off[level + 1]):
        cand = pool[pi]
        if used[cand]:
            continue
        trail[level, 0] = g
        tcount = 1
        m[g] = cand
        used[cand] = 1
        ok = 1
        for si in range(s_off[level], s_off[level + 1]):
            elem = s_elem[si]
            img = cflat[m[s_parent[si]] * n + m[s_gen[si]]]
            if used[img] or corders[img] != dorders[elem]:
                ok = 0
                break
            m[elem] = img
            used[img] = 1
            trail[level, tcount] = elem
            tcount += 1
        if ok:
            for xi in range(sz):
                x = members[xi]
                mx = m[x]
                xbase = x * n
                lo = prev if xi < prev else 0
                for yi in range(lo, sz):
                    y = members[yi]
                    if cflat[mx * n + m[y]] != m[dflat[xbase + y]]:
                        ok = 0
                        break
                if not ok:
                    break
        if ok:
            if level + 1 == depth:
                return tuple([int(m[t]) for t in range(n)])
            found = _iso_extend(level + 1, depth, n, dflat, cflat, dorders,
                                corders, members, level_sizes, s_elem, s_parent,
                                s_gen, s_off, pool, pool_off, gens, m, used, trail)
            if found is not None:
                return found
        for si in range(tcount):
            elem = trail[level, si]
            used[m[elem]] = 0
            m[elem] = -1
    return None


def isomorphism_search(dom_table, dom_identity, dom_orders, gens,
                       cod_table, cod_identity, cod_orders):
    """First isomorphism as an image tuple, or None."""
    dflat_obj = _flat_arr(dom_table)
    cflat_obj = _flat_arr(cod_table)
    cdef int n = dom_table.shape[0]
    if n != cod_table.shape[0]:
        return None
    if not gens:
        return (int(cod_identity),) if n == 1 else None
    members_a, sizes_a, se, sp, sg, soff = _chain_arrays(dom_table, dflat_obj, dom_identity, gens)
    assert int(sizes_a[len(gens) - 1]) == n, "generators do not generate the group"
    pool_list, pool_off_list = [], [0]
    for g in gens:
        pool_list.extend(h for h in range(n) if cod_orders[h] == dom_orders[g])
        pool_off_list.append(len(pool_list))
    cdef int[::1] m = np.full(n, -1, dtype=np.int32)
    cdef unsigned char[::1] used = np.zeros(n, dtype=np.uint8)
    m[dom_identity] = cod_identity
    used[cod_identity] = 1
    cdef int[:, ::1] trail = np.empty((len(gens), n), dtype=np.int32)
    return _iso_extend(0, len(gens), n, dflat_obj, cflat_obj,
                       np.asarray(dom_orders, dtype=np.int32),
                       np.asarray(cod_orders, dtype=np.int32),
                       members_a, sizes_a, se, sp, sg, soff,
                       np.asarray(pool_list if pool_list else [], dtype=np.int32),
                       np.asarray(pool_off_list, dtype=np.int32),
                       np.asarray(gens, dtype=np.int32), m, used, trail)


cdef long long _reach_cap(long long size, long long factor, int times, long long n):
    """min(size * factor^times, n): clamped so C arithmetic cannot overflow."""
    cdef long long v = size
    cdef int i
    for i in range(times):
        if v >= n:
            return n
        v *= factor
    return v if v < n else n


cdef tuple _mg_dfs(int depth, int n, const int[::1] flat, int identity,
                   const int[::1] orders, int abelian, long long exp,
                   int[::1] chosen, unsigned char[:, ::1] insets,
                   int[:, ::1] memb_scratch, int size, int start, int slots):
    cdef int g, t, x, cnt, i
    cdef long long newsize
    cdef unsigned char[::1] inset = insets[depth]
    cdef tuple found
    for g in range(start, n):
        if inset[g]:
            continue
        if abelian:
            t = 1
            x = g
            while not inset[x]:
                x = flat[x * n + g]
                t += 1
            newsize = <long long> size * t
            if _reach_cap(newsize, exp, slots - 1, n) < n:
                continue
            if slots == 1:
                if newsize == n:
                    chosen[depth] = g
                    return tuple([int(chosen[i]) for i in range(depth + 1)])
                continue
            chosen[depth] = g
            cnt = _closure_c(flat, n, identity, chosen, depth + 1,
                             insets[depth + 1], memb_scratch[depth])
            assert cnt == newsize
        else:
            chosen[depth] = g
            cnt = _closure_c(flat, n, identity, chosen, depth + 1,
                             insets[depth + 1], memb_scratch[depth])
            newsize = cnt
            if newsize == n:
                assert slots == 1, "smaller generating set missed by an earlier round"
                return tuple([int(chosen[i]) for i in range(depth + 1)])
            if slots == 1:
                continue
        found = _mg_dfs(depth + 1, n, flat, identity, orders, abelian, exp,
                        chosen, insets, memb_scratch, <int> newsize, g + 1, slots - 1)
        if found is not None:
            return found
    return None


def min_generating(table, identity, orders, abelian):
    """(d, tuple): least generating-set size with the first witness tuple."""
    flat_obj = _flat_arr(table)
    cdef const int[::1] flat = flat_obj
    cdef int n = table.shape[0]
    if n == 1:
        return 0, ()
    cdef long long exp = 1
    cdef long long r
    if abelian:
        from ..intarith import lcm_all

        exp = lcm_all(orders)
    cdef int k0 = 1
    if abelian:
        r = exp
        while r < n:
            r *= exp
            k0 += 1
    cdef int max_k = 0
    while (1 << max_k) <= n:
        max_k += 1
    cdef int k
    cdef const int[::1] orders_v = np.asarray(orders, dtype=np.int32)
    cdef int[::1] chosen = np.empty(max_k + 1, dtype=np.int32)
    cdef unsigned char[:, ::1] insets = np.zeros((max_k + 2, n), dtype=np.uint8)
    cdef int[:, ::1] memb_scratch = np.empty((max_k + 1, n), dtype=np.int32)
    for k in range(k0, max_k + 1):
        insets[0, :] = 0
        insets[0, identity] = 1
        found = _mg_dfs(0, n, flat, int(identity), orders_v, 1 if abelian else 0,
                        exp, chosen, insets, memb_scratch, 1, 0, k)
        if found is not None:
            return k, found
    raise AssertionError(f"no generating set of size <= {max_k} found")
