"""Canonical forms and isomorphism tests under simultaneous permutation.

Two exchange matrices are isomorphic when one is carried to the other by a
single permutation acting on rows, columns and the symmetrizer at once.  The
canonical form is computed by partition refinement plus branch-and-pick of
the lexicographically least flattened matrix; no external labeling engine is
used (bespoke search is adequate at rank <= 12).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import backend
from .errors import LengthMismatch
from .matrix import ExchangeMatrix, _flat_to_rows


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical representative plus one witnessing permutation.

    ``perm`` maps input vertex -> canonical vertex; applying it to the input
    yields exactly ``matrix``.
    """

    matrix: ExchangeMatrix
    perm: tuple

    @property
    def key(self) -> tuple:
        return (self.matrix.flat, self.matrix.d)


def canonical_form(m: ExchangeMatrix) -> CanonicalForm:
    key, perm, _ = backend.canonical_flat(m.flat, m.d, m.n)
    d = [0] * m.n
    for i in range(m.n):
        d[perm[i]] = m.d[i]
    return CanonicalForm(
        ExchangeMatrix(_flat_to_rows(key, m.n), tuple(d)), perm
    )


def canonical_key(m: ExchangeMatrix) -> tuple:
    """Hashable canonical key (flattened matrix, sorted-by-cell d)."""
    key, perm, _ = backend.canonical_flat(m.flat, m.d, m.n)
    d = [0] * m.n
    for i in range(m.n):
        d[perm[i]] = m.d[i]
    return (key, tuple(d))


def canonical_key_colored(m: ExchangeMatrix, colors) -> tuple:
    """Canonical key under an extra vertex coloring (refines d)."""
    mixed = tuple(zip(m.d, colors))
    key, perm, _ = backend.canonical_flat(m.flat, mixed, m.n)
    out = [0] * m.n
    for i in range(m.n):
        out[perm[i]] = mixed[i]
    return (key, tuple(out))


def are_isomorphic(a: ExchangeMatrix, b: ExchangeMatrix) -> bool:
    if a.n != b.n:
        return False
    return canonical_key(a) == canonical_key(b)


def is_automorphism(m: ExchangeMatrix, perm) -> bool:
    """True iff b[p(i)][p(j)] = b[i][j] and d[p(i)] = d[i] for all i, j."""
    p = tuple(perm)
    n = m.n
    if sorted(p) != list(range(n)):
        raise LengthMismatch("not a permutation of the vertex set")
    for i in range(n):
        if m.d[p[i]] != m.d[i]:
            return False
        row = m.b[i]
        prow = m.b[p[i]]
        for j in range(n):
            if prow[p[j]] != row[j]:
                return False
    return True


def automorphism_group(m: ExchangeMatrix) -> list:
    """All automorphism permutations of (b, d), via the canonical search."""
    _, _, auts = backend.canonical_flat(m.flat, m.d, m.n, want_aut=True)
    return sorted(auts)


_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def content_hash(m: ExchangeMatrix) -> int:
    """Stable 64-bit content hash of the canonical byte serialization.

    FNV-1a over the canonical form rendered as ``n:d-entries:b-entries`` in
    decimal with ``,`` separators.  Documented and stable; not cryptographic.
    """
    cf = canonical_form(m)
    payload = "{}:{}:{}".format(
        m.n,
        ",".join(str(x) for x in cf.matrix.d),
        ",".join(str(x) for x in cf.matrix.flat),
    ).encode("ascii")
    h = _FNV_OFFSET
    for byte in payload:
        h ^= byte
        h = (h * _FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h
