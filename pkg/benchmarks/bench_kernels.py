"""Benchmark the sphere-scan kernels: numba njit vs the pure-numpy fallback.

Builds mid-size complexes, runs the level scans on both backends (selected
via AUFHEBUNG_NO_NUMBA), checks the outputs are identical, and prints a
timing table.  An unmeasured warm-up run absorbs JIT compilation.

Run:

    python benchmarks/bench_kernels.py
"""

import os
import statistics
import time

from aufhebung import _kernels
from aufhebung.bounds import (
    build_cubical_counterexample,
    build_simplicial_counterexample,
    random_skeletal_complex,
)

REPEATS = 3


def jobs():
    X, _ = build_cubical_counterexample(2, truncation=6)
    yield "cubical n=2 counterexample", X, range(5, 7)
    Y, _ = build_simplicial_counterexample(3, truncation=8)
    yield "simplicial n=3 counterexample", Y, range(6, 9)
    Z = random_skeletal_complex("simplicial", 2, seed=0, gens_per_dim=3,
                                truncation=7)
    yield "random simplicial n=2 (3 gens/dim)", Z, range(4, 8)
    yield "17 parallel loops, dense k=2 layer", _parallel_loops(17), range(2, 3)


def _parallel_loops(m):
    """One vertex with m fully degenerate 1-cubes: every 2-sphere candidate
    satisfies the cycle equations, so the scan walks (m + 2)^4 tuples."""
    from aufhebung.complexes import Cell, GeneratorDecl, SkeletalComplex
    from aufhebung.shapes import CubeMorphism
    v = Cell("v", CubeMorphism.identity(0))
    gens = [GeneratorDecl("v", 0, ())]
    gens += [GeneratorDecl(f"x{i}", 1, (v, v)) for i in range(m)]
    return SkeletalComplex("cubical", 1, gens, truncation=3)


def run_backend(X, ks, tab, flag):
    os.environ["AUFHEBUNG_NO_NUMBA"] = flag
    results = []
    t0 = time.perf_counter()
    for k in ks:
        scan = _kernels.scan_spheres(tab.faces[k - 1], tab.faces[k], X.shape,
                                     k, budget=10 ** 7, miss_cap=8)
        results.append((k, scan.n_spheres, scan.n_missing))
    return time.perf_counter() - t0, results


def main():
    if not _kernels.HAVE_NUMBA:
        print("[info] numba not importable; only the numpy path will run")
    rows = []
    for name, X, ks in jobs():
        tab = X.tabulate(max(ks))
        if _kernels.HAVE_NUMBA:
            run_backend(X, ks, tab, "0")  # warm-up, compiles the kernels
        times = {"numba": [], "numpy": []}
        ref = None
        for _ in range(REPEATS):
            for label, flag in (("numba", "0"), ("numpy", "1")):
                if label == "numba" and not _kernels.HAVE_NUMBA:
                    continue
                dt, res = run_backend(X, ks, tab, flag)
                times[label].append(dt)
                if ref is None:
                    ref = res
                elif res != ref:
                    raise SystemExit(f"backend results differ on {name}: "
                                     f"{res} vs {ref}")
        rows.append((name, ref, times))
    os.environ.pop("AUFHEBUNG_NO_NUMBA", None)

    print(f"{'job':42s} {'numba(s)':>10s} {'numpy(s)':>10s} {'speedup':>8s}")
    print("-" * 74)
    for name, ref, times in rows:
        tn = statistics.mean(times["numba"]) if times["numba"] else float("nan")
        tp = statistics.mean(times["numpy"])
        speed = tp / tn if times["numba"] and tn > 0 else float("nan")
        print(f"{name:42s} {tn:10.4f} {tp:10.4f} {speed:7.1f}x")
        for k, n_sph, n_miss in ref:
            print(f"    k={k}: {n_sph} spheres, {n_miss} unfilled")
    print("\nbackends agree on every scan")


if __name__ == "__main__":
    main()
