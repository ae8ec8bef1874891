"""Pure-Python kernels: matrix mutation and canonical labeling.

This module is the reference implementation of the hot operations.  The
compiled extension ``affold._core`` mirrors the same functions with the
same bit-exact semantics (identical 64-bit signature arithmetic), so both
backends produce identical canonical forms; which one is used is decided
once at import time in :mod:`affold.backend`.

All kernels work on flattened row-major matrices given as tuples of ints so
values are hashable and safe to share.  Permutations map old index -> new
index.
"""

from __future__ import annotations

BACKEND_NAME = "python"

_MASK = 0xFFFFFFFFFFFFFFFF


def mutate_flat(b: tuple, n: int, k: int) -> tuple:
    """Matrix mutation at vertex ``k`` (0-based) on a flattened matrix."""
    out = list(b)
    row = k * n
    for i in range(n):
        bik = b[i * n + k]
        if i == k or bik == 0:
            continue
        base = i * n
        aik = bik if bik >= 0 else -bik
        for j in range(n):
            bkj = b[row + j]
            if j == k or bkj == 0:
                continue
            akj = bkj if bkj >= 0 else -bkj
            out[base + j] = b[base + j] + (aik * bkj + bik * akj) // 2
    for t in range(n):
        out[row + t] = -b[row + t]
        out[t * n + k] = -b[t * n + k]
    return tuple(out)


def _splitmix(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def _pair_hashes(b: tuple, n: int) -> list:
    """64-bit mix of the ordered entry pair (b[v][w], b[w][v]) per (v, w)."""
    out = [0] * (n * n)
    for v in range(n):
        for w in range(n):
            if v == w:
                continue
            x = b[v * n + w] & _MASK
            y = b[w * n + v] & _MASK
            out[v * n + w] = _splitmix(
                _splitmix(x) ^ ((y * 0x9E3779B97F4A7C15) & _MASK)
            )
    return out


def _refine(n: int, colors: list, pair: list) -> list:
    """Signature-based equitable refinement to a stable coloring.

    Vertex signatures combine neighbour colors with the precomputed pair
    hashes through an order-free (commutative-sum) 64-bit mix, so the
    partition is invariant under relabeling; new color ids are ranks of
    (old color, signature).
    """
    ncolors = len(set(colors))
    while True:
        sigs = [0] * n
        for v in range(n):
            base = v * n
            total = 0
            for w in range(n):
                if w == v:
                    continue
                total += _splitmix(
                    pair[base + w]
                    ^ (((colors[w] + 1) * 0xBF58476D1CE4E5B9) & _MASK)
                )
            sigs[v] = total & _MASK
        order = sorted(range(n), key=lambda v: (colors[v], sigs[v]))
        new_colors = [0] * n
        cid = 0
        prev = None
        for v in order:
            cur = (colors[v], sigs[v])
            if prev is not None and cur != prev:
                cid += 1
            new_colors[v] = cid
            prev = cur
        if cid + 1 == ncolors:
            return new_colors
        ncolors = cid + 1
        colors = new_colors


def _dense(colors) -> list:
    ranks = {c: i for i, c in enumerate(sorted(set(colors)))}
    return [ranks[c] for c in colors]


def _relabel_flat(b: tuple, n: int, perm) -> tuple:
    out = [0] * (n * n)
    for i in range(n):
        pi = perm[i] * n
        bi = i * n
        for j in range(n):
            out[pi + perm[j]] = b[bi + j]
    return tuple(out)


def canonical_flat(b: tuple, colors: tuple, n: int, want_aut: bool = False):
    """Canonical form of a square integer matrix with vertex colors.

    Returns ``(key, perm, auts)`` where ``key`` is the flattened relabeled
    matrix, ``perm`` maps old index -> new index, and ``auts`` lists the
    automorphism permutations ``a`` (``b[a(i)][a(j)] == b[i][j]`` and
    ``colors[a(i)] == colors[i]``) when ``want_aut`` is set, else ``None``.

    Individualization-refinement search; key = lexicographically least
    flattened matrix over all discrete refinements (an invariant of the
    isomorphism class, so relabelings share the key).
    """
    if n == 0:
        return (), (), [()] if want_aut else None
    pair = _pair_hashes(b, n)
    start = _refine(n, _dense(colors), pair)

    best = {"key": None, "perm": None}
    min_perms = []

    def search(cols: list) -> None:
        target = -1
        count = [0] * (n + 1)
        for c in cols:
            count[c] += 1
        for c in range(n):
            if count[c] > 1:
                target = c
                break
        if target < 0:
            perm = tuple(cols)
            key = _relabel_flat(b, n, perm)
            if best["key"] is None or key < best["key"]:
                best["key"] = key
                best["perm"] = perm
                if want_aut:
                    min_perms.clear()
                    min_perms.append(perm)
            elif want_aut and key == best["key"]:
                min_perms.append(perm)
            return
        for v in range(n):
            if cols[v] != target:
                continue
            sub = [2 * c for c in cols]
            for w in range(n):
                if cols[w] == target and w != v:
                    sub[w] += 1
            search(_refine(n, _dense(sub), pair))

    search(start)

    auts = None
    if want_aut:
        q = best["perm"]
        qinv = [0] * n
        for i in range(n):
            qinv[q[i]] = i
        auts = []
        for p in min_perms:
            auts.append(tuple(qinv[p[i]] for i in range(n)))
    return best["key"], best["perm"], auts
