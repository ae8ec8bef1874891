"""Skew-symmetrizable exchange matrices and the fundamental operations.

The sign convention, pinned against the worked 4x4 mutation example in the
format spec: ``b[i][j] > 0`` means there are ``b[i][j]`` arrows i -> j.
All indices at this level are 0-based; 1-based translation happens in the
CLI / JSON layer only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import backend
from .errors import (
    EmptySubset,
    IndexOutOfRange,
    LengthMismatch,
    NotSkewSymmetric,
    NotSkewSymmetrizable,
)


@dataclass(frozen=True)
class ExchangeMatrix:
    """An n x n integer matrix with a positive integer symmetrizer.

    ``diag(d) . b`` is skew-symmetric.  Instances are immutable values; all
    operations return new instances.
    """

    b: tuple
    d: tuple

    @property
    def n(self) -> int:
        return len(self.d)

    @property
    def flat(self) -> tuple:
        return tuple(x for row in self.b for x in row)

    def entry(self, i: int, j: int) -> int:
        return self.b[i][j]

    def is_skew_symmetric(self) -> bool:
        return all(x == 1 for x in self.d)

    def rows(self) -> list:
        return [list(row) for row in self.b]

    def __str__(self) -> str:
        return "\n".join(
            " ".join(f"{x:3d}" for x in row) for row in self.b
        )


def _rows_to_tuple(rows) -> tuple:
    return tuple(tuple(int(x) for x in row) for row in rows)


def _flat_to_rows(flat: tuple, n: int) -> tuple:
    return tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))


def _component_symmetrizer(rows: tuple) -> tuple:
    """Least positive integer symmetrizer, found componentwise.

    Ratios ``d[j]/d[i] = b[i][j] / -b[j][i]`` are propagated along the
    support graph; inconsistent cycles or invalid sign pairs raise.
    """
    n = len(rows)
    for i in range(n):
        if rows[i][i] != 0:
            raise NotSkewSymmetrizable(f"nonzero diagonal at index {i + 1}")
        for j in range(n):
            a, b = rows[i][j], rows[j][i]
            if (a == 0) != (b == 0):
                raise NotSkewSymmetrizable(
                    f"entry ({i + 1},{j + 1}) is nonzero but its mirror is zero"
                )
            if a != 0 and (a > 0) == (b > 0):
                raise NotSkewSymmetrizable(
                    f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) have the same sign"
                )
    ratio = [None] * n
    d = [0] * n
    for start in range(n):
        if ratio[start] is not None:
            continue
        comp = [start]
        ratio[start] = Fraction(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if rows[i][j] == 0:
                    continue
                r = ratio[i] * Fraction(rows[i][j], -rows[j][i])
                if ratio[j] is None:
                    ratio[j] = r
                    comp.append(j)
                    queue.append(j)
                elif ratio[j] != r:
                    raise NotSkewSymmetrizable(
                        "inconsistent symmetrizer ratios around a cycle"
                    )
        denom = 1
        for v in comp:
            denom = denom * ratio[v].denominator // gcd(denom, ratio[v].denominator)
        nums = [ratio[v].numerator * (denom // ratio[v].denominator) for v in comp]
        g = 0
        for x in nums:
            g = gcd(g, x)
        for v, x in zip(comp, nums):
            d[v] = x // g
    return tuple(d)


def make_exchange_matrix(rows) -> ExchangeMatrix:
    """Build an ExchangeMatrix from an integer matrix, computing d.

    Raises NotSkewSymmetrizable when no positive integer symmetrizer exists.
    """
    b = _rows_to_tuple(rows)
    n = len(b)
    for row in b:
        if len(row) != n:
            raise NotSkewSymmetrizable("matrix is not square")
    return ExchangeMatrix(b, _component_symmetrizer(b))


def from_parts(rows, d) -> ExchangeMatrix:
    """Build from explicit b and d, validating the symmetrizer."""
    b = _rows_to_tuple(rows)
    n = len(b)
    dd = tuple(int(x) for x in d)
    if len(dd) != n:
        raise LengthMismatch("d has wrong length")
    if any(x < 1 for x in dd):
        raise NotSkewSymmetrizable("symmetrizer entries must be positive")
    for i in range(n):
        for j in range(n):
            if dd[i] * b[i][j] != -dd[j] * b[j][i]:
                raise NotSkewSymmetrizable(
                    f"d*b is not skew-symmetric at ({i + 1},{j + 1})"
                )
    return ExchangeMatrix(b, dd)


def mutate(m: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Mutation at vertex k (0-based).  The symmetrizer is unchanged."""
    n = m.n
    if not 0 <= k < n:
        raise IndexOutOfRange(f"vertex {k + 1} outside 1..{n}")
    flat = backend.mutate_flat(m.flat, n, k)
    return ExchangeMatrix(_flat_to_rows(flat, n), m.d)


def mutate_seq(m: ExchangeMatrix, ks) -> ExchangeMatrix:
    for k in ks:
        m = mutate(m, k)
    return m


def arrows(m: ExchangeMatrix, i: int, j: int) -> int:
    """Arrow count i -> j of the quiver view (skew-symmetric matrices only)."""
    if not m.is_skew_symmetric():
        raise NotSkewSymmetric("quiver view needs d = (1,...,1)")
    return max(m.b[i][j], 0)


def mutate_quiver_3step(m: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Quiver mutation via the three-step graph procedure.

    Composes two-arrow paths through k, reverses arrows at k, then cancels
    directed 2-cycles.  Defined for skew-symmetric matrices; agrees with
    :func:`mutate`.
    """
    n = m.n
    if not 0 <= k < n:
        raise IndexOutOfRange(f"vertex {k + 1} outside 1..{n}")
    if not m.is_skew_symmetric():
        raise NotSkewSymmetric("3-step mutation needs a skew-symmetric matrix")
    arr = [[max(m.b[i][j], 0) for j in range(n)] for i in range(n)]
    # step 1: each path i -> k -> j contributes arr[i][k]*arr[k][j] arrows i -> j
    for i in range(n):
        if arr[i][k] == 0 or i == k:
            continue
        for j in range(n):
            if j == k or arr[k][j] == 0:
                continue
            arr[i][j] += arr[i][k] * arr[k][j]
    # step 2: reverse all arrows incident to k
    for i in range(n):
        if i == k:
            continue
        arr[i][k], arr[k][i] = arr[k][i], arr[i][k]
    # step 3: cancel directed 2-cycles
    for i in range(n):
        for j in range(i + 1, n):
            c = min(arr[i][j], arr[j][i])
            if c:
                arr[i][j] -= c
                arr[j][i] -= c
    rows = tuple(
        tuple(arr[i][j] - arr[j][i] for j in range(n)) for i in range(n)
    )
    return ExchangeMatrix(rows, m.d)


def cartan_counterpart(m: ExchangeMatrix) -> tuple:
    """Cartan counterpart: 2 on the diagonal, -|b[i][j]| off it."""
    n = m.n
    return tuple(
        tuple(2 if i == j else -abs(m.b[i][j]) for j in range(n))
        for i in range(n)
    )


def is_acyclic(m: ExchangeMatrix) -> bool:
    """True iff the digraph with edges i -> j for b[i][j] > 0 has no directed
    cycle, by Kahn's topological sort."""
    n = m.n
    indeg = [0] * n
    for i in range(n):
        for j in range(n):
            if m.b[i][j] > 0:
                indeg[j] += 1
    stack = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for j in range(n):
            if m.b[v][j] > 0:
                indeg[j] -= 1
                if indeg[j] == 0:
                    stack.append(j)
    return seen == n


def restrict(m: ExchangeMatrix, subset) -> ExchangeMatrix:
    """Principal submatrix on ``subset`` (0-based, increasing), with the
    symmetrizer restricted and renormalized per support component."""
    idx = list(subset)
    if not idx:
        raise EmptySubset("restriction needs a nonempty subset")
    if idx != sorted(set(idx)) or idx[0] < 0 or idx[-1] >= m.n:
        raise IndexOutOfRange("subset must be increasing and within range")
    rows = tuple(tuple(m.b[i][j] for j in idx) for i in idx)
    d = list(m.d[i] for i in idx)
    k = len(idx)
    # renormalize d per connected component of the restricted support graph
    seen = [False] * k
    for s in range(k):
        if seen[s]:
            continue
        comp, queue = [s], [s]
        seen[s] = True
        while queue:
            i = queue.pop()
            for j in range(k):
                if not seen[j] and rows[i][j] != 0:
                    seen[j] = True
                    comp.append(j)
                    queue.append(j)
        g = 0
        for v in comp:
            g = gcd(g, d[v])
        for v in comp:
            d[v] //= g
    return ExchangeMatrix(rows, tuple(d))


def transpose(m: ExchangeMatrix) -> ExchangeMatrix:
    """Entrywise transpose with a freshly computed symmetrizer."""
    n = m.n
    rows = tuple(tuple(m.b[j][i] for j in range(n)) for i in range(n))
    return make_exchange_matrix(rows)


def is_connected(m: ExchangeMatrix) -> bool:
    n = m.n
    if n == 0:
        return True
    seen = [False] * n
    seen[0] = True
    queue = [0]
    count = 1
    while queue:
        i = queue.pop()
        for j in range(n):
            if not seen[j] and m.b[i][j] != 0:
                seen[j] = True
                count += 1
                queue.append(j)
    return count == n


def relabel(m: ExchangeMatrix, perm) -> ExchangeMatrix:
    """Apply a vertex permutation (old index -> new index) to b and d."""
    n = m.n
    if sorted(perm) != list(range(n)):
        raise LengthMismatch("not a permutation of the vertex set")
    rows = [[0] * n for _ in range(n)]
    d = [0] * n
    for i in range(n):
        d[perm[i]] = m.d[i]
        for j in range(n):
            rows[perm[i]][perm[j]] = m.b[i][j]
    return ExchangeMatrix(_rows_to_tuple(rows), tuple(d))


def negate(m: ExchangeMatrix) -> ExchangeMatrix:
    return ExchangeMatrix(
        tuple(tuple(-x for x in row) for row in m.b), m.d
    )
