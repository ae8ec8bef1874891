# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: matrix mutation and canonical labeling.

Bit-exact twin of :mod:`affold._pycore` (same 64-bit signature arithmetic,
same search), so both backends produce identical canonical forms.  Inputs
must fit the fixed-width path: |entries| < 2**31 and n <= 16; the backend
wrapper falls back to the pure implementation otherwise.
"""

from libc.string cimport memcpy

BACKEND_NAME = "cython"

DEF MAXN = 16
DEF MAXNN = 256

ctypedef unsigned long long u64
ctypedef long long i64


def mutate_flat(b, int n, int k):
    """Matrix mutation at vertex k (0-based) on a flattened matrix."""
    cdef i64 bb[MAXNN]
    cdef i64 out[MAXNN]
    cdef int i, j, idx
    cdef i64 bik, bkj, aik, akj
    for idx in range(n * n):
        bb[idx] = b[idx]
        out[idx] = bb[idx]
    for i in range(n):
        bik = bb[i * n + k]
        if i == k or bik == 0:
            continue
        aik = bik if bik >= 0 else -bik
        for j in range(n):
            bkj = bb[k * n + j]
            if j == k or bkj == 0:
                continue
            akj = bkj if bkj >= 0 else -bkj
            out[i * n + j] = bb[i * n + j] + (aik * bkj + bik * akj) // 2
    for j in range(n):
        out[k * n + j] = -bb[k * n + j]
        out[j * n + k] = -bb[j * n + k]
    return tuple([out[idx] for idx in range(n * n)])


cdef inline u64 _splitmix(u64 z) nogil:
    z = z + <u64>0x9E3779B97F4A7C15
    z = (z ^ (z >> 30)) * <u64>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <u64>0x94D049BB133111EB
    return z ^ (z >> 31)


cdef struct CanonState:
    int n
    i64 b[MAXNN]
    u64 pair[MAXNN]
    i64 best_key[MAXNN]
    int best_perm[MAXN]
    bint has_best
    bint want_aut


cdef void _refine(CanonState* st, int* colors) nogil:
    """Stable signature refinement; identical semantics to the pure twin."""
    cdef int n = st.n
    cdef u64 sigs[MAXN]
    cdef int order[MAXN]
    cdef int new_colors[MAXN]
    cdef int v, w, i, j, tmp, cid, ncolors
    cdef u64 total
    ncolors = 0
    for v in range(n):
        if colors[v] + 1 > ncolors:
            ncolors = colors[v] + 1
    while True:
        for v in range(n):
            total = 0
            for w in range(n):
                if w == v:
                    continue
                total += _splitmix(
                    st.pair[v * n + w]
                    ^ ((<u64>(colors[w] + 1)) * <u64>0xBF58476D1CE4E5B9)
                )
            sigs[v] = total
        # insertion sort of vertices by (color, sig) -- n <= 16
        for v in range(n):
            order[v] = v
        for i in range(1, n):
            j = i
            while j > 0 and (
                colors[order[j - 1]] > colors[order[j]]
                or (
                    colors[order[j - 1]] == colors[order[j]]
                    and sigs[order[j - 1]] > sigs[order[j]]
                )
            ):
                tmp = order[j - 1]
                order[j - 1] = order[j]
                order[j] = tmp
                j -= 1
        cid = 0
        new_colors[order[0]] = 0
        for i in range(1, n):
            if (
                colors[order[i]] != colors[order[i - 1]]
                or sigs[order[i]] != sigs[order[i - 1]]
            ):
                cid += 1
            new_colors[order[i]] = cid
        for v in range(n):
            colors[v] = new_colors[v]
        if cid + 1 == ncolors:
            return
        ncolors = cid + 1


cdef void _leaf(CanonState* st, int* colors, list min_perms):
    cdef int n = st.n
    cdef i64 key[MAXNN]
    cdef int i, j, cmp_result
    for i in range(n):
        for j in range(n):
            key[colors[i] * n + colors[j]] = st.b[i * n + j]
    cmp_result = 1  # 1: new best, 0: equal, -1: worse
    if st.has_best:
        cmp_result = 0
        for i in range(n * n):
            if key[i] < st.best_key[i]:
                cmp_result = 1
                break
            if key[i] > st.best_key[i]:
                cmp_result = -1
                break
    if cmp_result > 0:
        memcpy(st.best_key, key, n * n * sizeof(i64))
        for i in range(n):
            st.best_perm[i] = colors[i]
        st.has_best = True
        if st.want_aut:
            del min_perms[:]
            min_perms.append(tuple([colors[i] for i in range(n)]))
    elif cmp_result == 0 and st.want_aut:
        min_perms.append(tuple([colors[i] for i in range(n)]))


cdef void _search(CanonState* st, int* colors, list min_perms):
    cdef int n = st.n
    cdef int count[MAXN + 1]
    cdef int sub[MAXN]
    cdef int target, c, v, w
    for c in range(n + 1):
        count[c] = 0
    for v in range(n):
        count[colors[v]] += 1
    target = -1
    for c in range(n):
        if count[c] > 1:
            target = c
            break
    if target < 0:
        _leaf(st, colors, min_perms)
        return
    for v in range(n):
        if colors[v] != target:
            continue
        for w in range(n):
            sub[w] = 2 * colors[w]
            if colors[w] == target and w != v:
                sub[w] += 1
        _densify(n, sub)
        _refine(st, sub)
        _search(st, sub, min_perms)


cdef void _densify(int n, int* colors) nogil:
    cdef int order[MAXN]
    cdef int i, j, tmp, cid
    cdef int new_colors[MAXN]
    for i in range(n):
        order[i] = i
    for i in range(1, n):
        j = i
        while j > 0 and colors[order[j - 1]] > colors[order[j]]:
            tmp = order[j - 1]
            order[j - 1] = order[j]
            order[j] = tmp
            j -= 1
    cid = 0
    new_colors[order[0]] = 0
    for i in range(1, n):
        if colors[order[i]] != colors[order[i - 1]]:
            cid += 1
        new_colors[order[i]] = cid
    for i in range(n):
        colors[i] = new_colors[i]


def canonical_flat(b, colors, int n, bint want_aut=False):
    """Canonical form; see the pure twin for the full contract."""
    cdef CanonState st
    cdef int start[MAXN]
    cdef int i, j
    cdef u64 x, y
    if n == 0:
        return (), (), [()] if want_aut else None
    st.n = n
    st.has_best = False
    st.want_aut = want_aut
    for i in range(n * n):
        st.b[i] = b[i]
    for i in range(n):
        for j in range(n):
            if i == j:
                st.pair[i * n + j] = 0
                continue
            x = <u64><i64>(st.b[i * n + j])
            y = <u64><i64>(st.b[j * n + i])
            st.pair[i * n + j] = _splitmix(
                _splitmix(x) ^ (y * <u64>0x9E3779B97F4A7C15)
            )
    ranks = sorted(set(colors))
    lookup = {c: r for r, c in enumerate(ranks)}
    for i in range(n):
        start[i] = lookup[colors[i]]
    min_perms = [] if want_aut else None
    _refine(&st, start)
    _search(&st, start, min_perms if want_aut else [])
    key = tuple([st.best_key[i] for i in range(n * n)])
    perm = tuple([st.best_perm[i] for i in range(n)])
    auts = None
    if want_aut:
        qinv = [0] * n
        for i in range(n):
            qinv[perm[i]] = i
        auts = [tuple([qinv[p[i]] for i in range(n)]) for p in min_perms]
    return key, perm, auts
