"""Hot kernels for sphere enumeration and filler matching.

The sphere search is a depth-first enumeration over integer face tables:
slot ``t`` of a sphere is a (k-1)-cell id, and each slot is constrained
against earlier slots by equations of the form

    F2[new, col_new] == F2[prev, col_prev]

encoded in CSR-style arrays.  Fillers are rows of the dimension-k face
table, so existence is a sorted-row membership test and uniqueness is
duplicate-row detection.

Two interchangeable backends implement the scan: a numba ``@njit`` kernel
and a pure-numpy fallback.  Selection is automatic (numba when importable)
and can be forced with the environment variable ``AUFHEBUNG_NO_NUMBA=1``.
Both backends enumerate in identical order and return identical results;
``benchmarks/bench_kernels.py`` compares their speed.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn
        if args and callable(args[0]):
            return args[0]
        return wrap


def numba_enabled() -> bool:
    """True when the njit backend is active (checked per call)."""
    if os.environ.get("AUFHEBUNG_NO_NUMBA", "").strip().lower() in ("1", "true", "yes"):
        return False
    return HAVE_NUMBA


# ---------------------------------------------------------------------------
# constraint tables


def build_constraints(shape: str, k: int) -> tuple[int, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Slot count and CSR constraint arrays for k-spheres of a shape.

    Returns (slots, con_ptr, con_slot, col_new, col_prev) where the
    constraints for the cell at slot d are the entries
    con_ptr[d]..con_ptr[d+1].
    """
    entries: list[list[tuple[int, int, int]]] = []
    if shape in ("simplicial", "cyclic"):
        slots = k + 1
        for j in range(slots):
            row = []
            if k >= 2:
                for i in range(j):
                    row.append((i, i, j - 1))
            entries.append(row)
    elif shape == "cubical":
        slots = 2 * k
        for j in range(1, k + 1):
            for io in (0, 1):
                row = []
                if k >= 2:
                    for i in range(1, j):
                        for up in (0, 1):
                            row.append((2 * (i - 1) + up,
                                        2 * (i - 1) + up,
                                        2 * (j - 2) + io))
                entries.append(row)
    elif shape == "globular":
        slots = 2
        row = []
        if k >= 2:
            row = [(0, 0, 0), (0, 1, 1)]
        entries = [[], row]
    else:
        raise ValueError(f"unknown shape {shape!r}")

    con_ptr = np.zeros(slots + 1, dtype=np.int32)
    flat: list[tuple[int, int, int]] = []
    for d, row in enumerate(entries):
        flat.extend(row)
        con_ptr[d + 1] = len(flat)
    if flat:
        arr = np.array(flat, dtype=np.int32)
        con_slot, col_new, col_prev = arr[:, 0].copy(), arr[:, 1].copy(), arr[:, 2].copy()
    else:
        con_slot = col_new = col_prev = np.zeros(0, dtype=np.int32)
    return slots, con_ptr, con_slot, col_new, col_prev


def sort_rows(B: np.ndarray) -> np.ndarray:
    """Rows of B sorted lexicographically, first column most significant."""
    if B.shape[0] == 0 or B.shape[1] == 0:
        return B.copy()
    order = np.lexsort(B.T[::-1])
    return np.ascontiguousarray(B[order])


def duplicate_row_groups(B: np.ndarray) -> list[np.ndarray]:
    """Groups of row indices of B sharing an identical row (size >= 2)."""
    if B.shape[0] == 0:
        return []
    if B.shape[1] == 0:
        return [np.arange(B.shape[0])] if B.shape[0] >= 2 else []
    order = np.lexsort(B.T[::-1])
    S = B[order]
    same = np.all(S[1:] == S[:-1], axis=1)
    groups = []
    start = 0
    for i in range(1, len(S) + 1):
        if i == len(S) or not same[i - 1]:
            if i - start >= 2:
                groups.append(np.sort(order[start:i]))
            start = i
    return groups


def find_fillers(B: np.ndarray, row: np.ndarray) -> np.ndarray:
    """Ids of cells whose full boundary row equals ``row``."""
    if B.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    if B.shape[1] == 0:
        return np.arange(B.shape[0], dtype=np.int64)
    return np.nonzero(np.all(B == row[None, :], axis=1))[0]


# ---------------------------------------------------------------------------
# njit backend


@njit(cache=True)
def _row_member_njit(B, row):  # pragma: no cover - compiled
    lo, hi = 0, B.shape[0]
    w = row.shape[0]
    while lo < hi:
        mid = (lo + hi) // 2
        c = 0
        for t in range(w):
            if B[mid, t] < row[t]:
                c = -1
                break
            if B[mid, t] > row[t]:
                c = 1
                break
        if c < 0:
            lo = mid + 1
        elif c > 0:
            hi = mid
        else:
            return True
    return False


@njit(cache=True)
def _dfs_njit(F2, B_sorted, con_ptr, con_slot, col_new, col_prev, slots,
              budget, miss_out, store_out, do_store):  # pragma: no cover - compiled
    N = F2.shape[0]
    miss_cap = miss_out.shape[0]
    store_cap = store_out.shape[0]
    choice = np.zeros(slots, np.int32)
    cursor = np.zeros(slots, np.int64)
    n_sph = 0
    n_miss = 0
    n_stored = 0
    overflow = 0
    depth = 0
    while depth >= 0:
        y = cursor[depth]
        found = -1
        while y < N:
            ok = True
            for e in range(con_ptr[depth], con_ptr[depth + 1]):
                if F2[y, col_new[e]] != F2[choice[con_slot[e]], col_prev[e]]:
                    ok = False
                    break
            if ok:
                found = y
                break
            y += 1
        if found < 0:
            cursor[depth] = 0
            depth -= 1
            continue
        choice[depth] = found
        cursor[depth] = found + 1
        if depth == slots - 1:
            if n_sph >= budget:
                overflow = 1
                break
            n_sph += 1
            if not _row_member_njit(B_sorted, choice):
                if n_miss < miss_cap:
                    for t in range(slots):
                        miss_out[n_miss, t] = choice[t]
                n_miss += 1
            if do_store:
                if n_stored < store_cap:
                    for t in range(slots):
                        store_out[n_stored, t] = choice[t]
                    n_stored += 1
                else:
                    overflow = 2
        else:
            depth += 1
            cursor[depth] = 0
    return n_sph, n_miss, n_stored, overflow


# ---------------------------------------------------------------------------
# numpy fallback backend


def _row_member_np(B: np.ndarray, row: np.ndarray) -> bool:
    lo, hi = 0, B.shape[0]
    w = len(row)
    while lo < hi:
        mid = (lo + hi) // 2
        c = 0
        for t in range(w):
            if B[mid, t] < row[t]:
                c = -1
                break
            if B[mid, t] > row[t]:
                c = 1
                break
        if c < 0:
            lo = mid + 1
        elif c > 0:
            hi = mid
        else:
            return True
    return False


def _candidates_np(F2, choice, con_ptr, con_slot, col_new, col_prev, depth):
    N = F2.shape[0]
    mask = np.ones(N, dtype=bool)
    for e in range(con_ptr[depth], con_ptr[depth + 1]):
        mask &= F2[:, col_new[e]] == F2[choice[con_slot[e]], col_prev[e]]
    return np.nonzero(mask)[0]


def _dfs_numpy(F2, B_sorted, con_ptr, con_slot, col_new, col_prev, slots,
               budget, miss_out, store_out, do_store):
    N = F2.shape[0]
    miss_cap = miss_out.shape[0]
    store_cap = store_out.shape[0]
    choice = np.zeros(slots, np.int32)
    n_sph = n_miss = n_stored = 0
    overflow = 0
    cands: list[np.ndarray] = [None] * slots  # type: ignore[list-item]
    pos = [0] * slots
    depth = 0
    cands[0] = _candidates_np(F2, choice, con_ptr, con_slot, col_new, col_prev, 0)
    pos[0] = 0
    while depth >= 0:
        if pos[depth] >= len(cands[depth]):
            depth -= 1
            if depth >= 0:
                pos[depth] += 1
            continue
        choice[depth] = cands[depth][pos[depth]]
        if depth == slots - 1:
            if n_sph >= budget:
                overflow = 1
                break
            n_sph += 1
            if not _row_member_np(B_sorted, choice):
                if n_miss < miss_cap:
                    miss_out[n_miss] = choice
                n_miss += 1
            if do_store:
                if n_stored < store_cap:
                    store_out[n_stored] = choice
                    n_stored += 1
                else:
                    overflow = 2
            pos[depth] += 1
        else:
            depth += 1
            cands[depth] = _candidates_np(F2, choice, con_ptr, con_slot,
                                          col_new, col_prev, depth)
            pos[depth] = 0
    return n_sph, n_miss, n_stored, overflow


# ---------------------------------------------------------------------------
# public entry points


@dataclass
class SphereScan:
    """Result of one exhaustive sphere scan at a fixed dimension."""

    n_spheres: int
    n_missing: int
    missing: np.ndarray
    stored: np.ndarray | None
    overflow: bool
    store_overflow: bool
    backend: str


def scan_spheres(F2: np.ndarray, B: np.ndarray, shape: str, k: int,
                 budget: int = 10 ** 6, miss_cap: int = 16,
                 store: bool = False, store_cap: int = 0) -> SphereScan:
    """Enumerate all k-spheres over the face table ``F2`` of (k-1)-cells.

    ``B`` is the boundary table of k-cells (one row per cell, in sphere
    slot order); a sphere with no matching row has no filler.  Enumeration
    is depth-first in increasing cell id, so results are deterministic and
    backend independent.
    """
    slots, con_ptr, con_slot, col_new, col_prev = build_constraints(shape, k)
    F2 = np.ascontiguousarray(F2, dtype=np.int32)
    B_sorted = sort_rows(np.ascontiguousarray(B, dtype=np.int32))
    miss_out = np.zeros((miss_cap, slots), dtype=np.int32)
    store_out = np.zeros((store_cap if store else 0, slots), dtype=np.int32)
    use_njit = numba_enabled()
    fn = _dfs_njit if use_njit else _dfs_numpy
    n_sph, n_miss, n_stored, overflow = fn(
        F2, B_sorted, con_ptr, con_slot, col_new, col_prev, slots,
        budget, miss_out, store_out, store)
    return SphereScan(
        n_spheres=int(n_sph),
        n_missing=int(n_miss),
        missing=miss_out[:min(n_miss, miss_cap)].copy(),
        stored=store_out[:n_stored].copy() if store else None,
        overflow=overflow == 1,
        store_overflow=overflow == 2,
        backend="numba" if use_njit else "numpy",
    )


def sample_spheres(F2: np.ndarray, shape: str, k: int, n_samples: int,
                   seed: int, max_tries: int | None = None) -> list[tuple[int, ...]]:
    """Seeded random sphere sampling with per-slot constraint propagation.

    Returns a sorted, duplicate-free list of spheres; deterministic in
    (seed, n_samples).
    """
    slots, con_ptr, con_slot, col_new, col_prev = build_constraints(shape, k)
    F2 = np.ascontiguousarray(F2, dtype=np.int32)
    if max_tries is None:
        max_tries = 20 * n_samples
    rng = np.random.RandomState(seed)
    choice = np.zeros(slots, dtype=np.int32)
    found: set[tuple[int, ...]] = set()
    tries = 0
    while len(found) < n_samples and tries < max_tries:
        tries += 1
        dead = False
        for depth in range(slots):
            cands = _candidates_np(F2, choice, con_ptr, con_slot,
                                   col_new, col_prev, depth)
            if len(cands) == 0:
                dead = True
                break
            choice[depth] = cands[rng.randint(len(cands))]
        if not dead:
            found.add(tuple(int(v) for v in choice))
    return sorted(found)
