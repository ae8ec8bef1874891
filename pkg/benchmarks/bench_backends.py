#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Run:  python benchmarks/bench_backends.py [--repeat N]

Times the three hot operations (mutation, canonical form, class BFS) on
the same inputs through both kernel implementations and prints a table.
"""

from __future__ import annotations

import argparse
import random
import time

from affold import _pycore
from affold import diagram

try:
    from affold import _core
except ImportError:
    _core = None


def _random_flats(count, n, seed=5):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = rng.randint(-2, 2)
                rows[i][j] = v
                rows[j][i] = -v
        out.append(tuple(x for r in rows for x in r))
    return out


def bench_mutate(impl, flats, n, repeat):
    t0 = time.perf_counter()
    for _ in range(repeat):
        for flat in flats:
            for k in range(n):
                impl.mutate_flat(flat, n, k)
    return time.perf_counter() - t0


def bench_canonical(impl, flats, n, repeat):
    colors = (1,) * n
    t0 = time.perf_counter()
    for _ in range(repeat):
        for flat in flats:
            impl.canonical_flat(flat, colors, n)
    return time.perf_counter() - t0


def bench_enumerate(impl, seed_matrix):
    """Class BFS with dedup on impl's canonical keys."""
    from collections import deque

    n = seed_matrix.n
    colors = seed_matrix.d
    start = seed_matrix.flat
    t0 = time.perf_counter()
    seen = {impl.canonical_flat(start, colors, n)[0]}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for k in range(n):
            nxt = impl.mutate_flat(cur, n, k)
            key = impl.canonical_flat(nxt, colors, n)[0]
            if key not in seen:
                seen.add(key)
                queue.append(nxt)
    return time.perf_counter() - t0, len(seen)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()

    if _core is None:
        print("compiled extension not available; nothing to compare")
        return

    flats7 = _random_flats(200, 7)
    rows = []

    t_py = bench_mutate(_pycore, flats7, 7, args.repeat)
    t_cy = bench_mutate(_core, flats7, 7, args.repeat)
    rows.append(("mutate 7x7 (x%d)" % (200 * 7 * args.repeat), t_py, t_cy))

    t_py = bench_canonical(_pycore, flats7, 7, max(1, args.repeat // 4))
    t_cy = bench_canonical(_core, flats7, 7, max(1, args.repeat // 4))
    rows.append(("canonical 7x7 (x%d)" % (200 * max(1, args.repeat // 4)), t_py, t_cy))

    for name in ("E~6", "E~7"):
        m = diagram(name)
        t_py, size_py = bench_enumerate(_pycore, m)
        t_cy, size_cy = bench_enumerate(_core, m)
        assert size_py == size_cy
        rows.append((f"class BFS {name} ({size_py} forms)", t_py, t_cy))

    width = max(len(r[0]) for r in rows)
    print(f"{'operation':{width}}  {'python':>9}  {'cython':>9}  speedup")
    for name, t_py, t_cy in rows:
        print(f"{name:{width}}  {t_py:8.3f}s  {t_cy:8.3f}s  {t_py / t_cy:6.1f}x")


if __name__ == "__main__":
    main()
