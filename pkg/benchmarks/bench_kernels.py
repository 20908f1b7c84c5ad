"""Time the compiled kernels against the pure-Python reference.

Each workload runs under both backends via _kernels.force, best of
--repeat runs.  Results must agree exactly; the script asserts that.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from autbound import _kernels, aut, core


def relabeled(G: core.FiniteGroup, seed: int) -> core.FiniteGroup:
    """Transport the structure of G along a random permutation of labels."""
    rng = np.random.default_rng(seed)
    pi = rng.permutation(G.order)
    inv = np.argsort(pi)
    table = pi[np.asarray(G.table)[np.ix_(inv, inv)]]
    return core.FiniteGroup(table, name=f"{G.name} relabeled")


def build_workloads() -> list[tuple[str, object]]:
    c400 = core.cyclic(400)
    ea16 = core.elementary_abelian(2, 4)
    d12 = core.dihedral(12)
    s4 = core.symmetric(4)
    s4b = relabeled(s4, seed=7)
    d64 = core.dihedral(64)

    def validate_table():
        k = _kernels.get()
        t = c400._t32
        return (k.latin_violation(t), k.find_identity(t), k.assoc_violation(t))

    def orders_c400():
        return _kernels.get().element_orders(c400._t32, c400.identity)

    def closure_d64():
        return _kernels.get().closure(d64._t32, d64.identity, [1, d64.order // 2])

    def aut_ea16():
        return sorted(aut.automorphism_group(ea16).mappings())

    def aut_d12():
        return sorted(aut.automorphism_group(d12).mappings())

    def endos_s4():
        return aut.endomorphism_count(s4)

    def iso_s4():
        hom = core.find_isomorphism(s4, s4b)
        assert hom is not None
        return tuple(hom.mapping)

    def mingen_d64():
        return _kernels.get().min_generating(
            d64._t32, d64.identity, list(d64.element_orders), False
        )

    return [
        ("validate order-400 table", validate_table),
        ("element orders, C400", orders_c400),
        ("closure from 2 generators, D64", closure_d64),
        ("Aut(C2^4), 20160 maps", aut_ea16),
        ("Aut(D12)", aut_d12),
        ("End(S4) census", endos_s4),
        ("isomorphism search, S4 pair", iso_s4),
        ("minimum generating tuple, D64", mingen_d64),
    ]


def best_time(fn, repeat: int) -> tuple[float, object]:
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="runs per cell, best kept")
    args = parser.parse_args()

    backends = _kernels.available()
    if "c" not in backends:
        print("compiled backend not built; timing pure Python only")
    width = max(len(name) for name, _ in build_workloads())
    header = f"{'workload':<{width}}  {'python':>10}  {'compiled':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for name, fn in build_workloads():
        row = {}
        results = {}
        for backend in backends:
            with _kernels.force(backend):
                row[backend], results[backend] = best_time(fn, args.repeat)
        if len(results) == 2:
            assert results["python"] == results["c"], f"backend mismatch on {name!r}"
            ratio = f"{row['python'] / row['c']:.1f}x"
            c_ms = f"{row['c'] * 1e3:.2f} ms"
        else:
            ratio, c_ms = "-", "-"
        print(f"{name:<{width}}  {row['python'] * 1e3:>7.2f} ms  {c_ms:>10}  {ratio:>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
