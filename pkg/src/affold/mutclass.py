"""Mutation-class enumeration, finiteness certificates, reductions.

Enumeration is a breadth-first search over canonical forms: pop a form,
apply all n mutations to its representative, canonicalize, insert unseen.
Frontier order is FIFO by discovery with mutations in ascending vertex
order, so member lists and discovery paths are reproducible.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field

from .errors import NotAcyclic, NotAffine
from .isomorphism import canonical_key
from .matrix import (
    ExchangeMatrix,
    is_acyclic,
    is_connected,
    mutate,
    restrict,
)

DEFAULT_BUDGET = 1_000_000


def default_budget() -> int:
    env = os.environ.get("AFFOLD_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_BUDGET


@dataclass(frozen=True)
class ClassMember:
    key: tuple
    representative: ExchangeMatrix
    path: tuple  # mutation sequence (0-based) from the seed matrix


@dataclass
class MutationClass:
    seed: ExchangeMatrix
    members: list
    closed: bool
    max_abs_entry: int
    _keys: set = field(default_factory=set, repr=False)

    def __post_init__(self):
        if not self._keys:
            self._keys = {m.key for m in self.members}

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, m: ExchangeMatrix) -> bool:
        return canonical_key(m) in self._keys

    @property
    def keys(self) -> set:
        return self._keys


def enumerate_class(
    m: ExchangeMatrix, budget: int = None, forbid=()
) -> MutationClass:
    """BFS over canonical forms; stops when closed or the budget of
    canonical-form insertions is spent (the result is then flagged
    non-closed)."""
    if budget is None:
        budget = default_budget()
    forbid = set(forbid)
    seed_key = canonical_key(m)
    members = [ClassMember(seed_key, m, ())]
    seen = {seed_key}
    queue = deque(members)
    max_abs = max((abs(x) for x in m.flat), default=0)
    closed = True
    while queue:
        cur = queue.popleft()
        for k in range(m.n):
            if k in forbid:
                continue
            nxt = mutate(cur.representative, k)
            key = canonical_key(nxt)
            if key in seen:
                continue
            if len(seen) >= budget:
                closed = False
                queue.clear()
                break
            seen.add(key)
            member = ClassMember(key, nxt, cur.path + (k,))
            members.append(member)
            queue.append(member)
            top = max(abs(x) for x in nxt.flat)
            if top > max_abs:
                max_abs = top
    return MutationClass(m, members, closed, max_abs, seen)


def labeled_class(m: ExchangeMatrix, budget: int = None):
    """All labeled matrices reachable by mutation (exact-matrix dedup).

    Returns (list of flats, closed).  Feasible for small ranks only; used
    by the folding verifier for cross-checks.
    """
    if budget is None:
        budget = default_budget()
    from . import backend

    n = m.n
    start = m.flat
    seen = {start}
    queue = deque([start])
    closed = True
    while queue:
        cur = queue.popleft()
        for k in range(n):
            nxt = backend.mutate_flat(cur, n, k)
            if nxt in seen:
                continue
            if len(seen) >= budget:
                closed = False
                queue.clear()
                break
            seen.add(nxt)
            queue.append(nxt)
    return seen, closed


# -- mutation-infinite certificates ------------------------------------------

_PATTERNS = ("linear", "cyclic", "acyclic")


def _triangle_certificate(sub: ExchangeMatrix):
    """Classify a 3-vertex skew-symmetric restriction against the known
    mutation-infinite families; returns a pattern string or None."""
    b = sub.b
    e01, e12, e02 = b[0][1], b[1][2], b[0][2]
    nz = [x for x in (e01, e12, e02) if x != 0]
    if len(nz) < 2:
        return None
    if len(nz) == 2:
        a, c = (abs(x) for x in nz)
        if a * c >= 2:
            return f"linear({a},{c})"
        return None
    # all three edges present: cyclic iff the triangle is a directed cycle
    arrows = {
        (0, 1) if e01 > 0 else (1, 0),
        (1, 2) if e12 > 0 else (2, 1),
        (0, 2) if e02 > 0 else (2, 0),
    }
    outdeg = [0, 0, 0]
    for i, _ in arrows:
        outdeg[i] += 1
    if sorted(outdeg) == [1, 1, 1]:
        # directed triangle v0 -> v1 -> v2 -> v0 in some order
        succ = {i: j for i, j in arrows}
        v = 0
        cyc = []
        for _ in range(3):
            w = succ[v]
            cyc.append(abs(b[v][w]))
            v = w
        for r in range(3):
            a, c, d = cyc[r], cyc[(r + 1) % 3], cyc[(r + 2) % 3]
            if a * c > 2 * d:
                return f"cyclic({cyc[0]},{cyc[1]},{cyc[2]})"
        return None
    prod = abs(e01) * abs(e12) * abs(e02)
    if prod >= 2:
        return f"acyclic({abs(e01)},{abs(e12)},{abs(e02)})"
    return None


@dataclass(frozen=True)
class FinitenessVerdict:
    status: str  # "finite" | "infinite" | "inconclusive"
    class_size: int
    certificate: dict = None

    @property
    def is_finite(self) -> bool:
        return self.status == "finite"


def _is_skew_symmetric_sub(m: ExchangeMatrix, tri) -> bool:
    return all(m.b[i][j] == -m.b[j][i] for i in tri for j in tri)


def certificate_for(m: ExchangeMatrix) -> dict:
    """Check one matrix for a 3-vertex mutation-infinite witness."""
    n = m.n
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                tri = (i, j, k)
                if not _is_skew_symmetric_sub(m, tri):
                    continue
                pattern = _triangle_certificate(restrict(m, tri))
                if pattern:
                    return {"subset": tri, "pattern": pattern}
    return None


def is_mutation_finite(
    m: ExchangeMatrix, budget: int = None, use_entry_bound: bool = True
) -> FinitenessVerdict:
    """Interleave class enumeration with mutation-infinite certificates.

    Certificates: the three-vertex families (checked on every restriction of
    every discovered form) and, optionally, the entry bound |b[i][j]| >= 3
    for connected skew-symmetric matrices on >= 3 vertices.  The entry bound
    comes from the finite-mutation-type classification, not from the class
    search itself, so it can be switched off for auditing.
    """
    if budget is None:
        budget = default_budget()
    n = m.n
    entry_rule = (
        use_entry_bound and n >= 3 and m.is_skew_symmetric() and is_connected(m)
    )
    seed_key = canonical_key(m)
    seen = {seed_key}
    queue = deque([(m, ())])
    while queue:
        cur, path = queue.popleft()
        if entry_rule:
            for i in range(n):
                for j in range(n):
                    if abs(cur.b[i][j]) >= 3:
                        return FinitenessVerdict(
                            "infinite",
                            len(seen),
                            {"path": path, "entry": (i, j), "pattern": "entry>=3"},
                        )
        cert = certificate_for(cur)
        if cert:
            return FinitenessVerdict(
                "infinite", len(seen), {"path": path, **cert}
            )
        for k in range(n):
            nxt = mutate(cur, k)
            key = canonical_key(nxt)
            if key in seen:
                continue
            if len(seen) >= budget:
                return FinitenessVerdict("inconclusive", len(seen))
            seen.add(key)
            queue.append((nxt, path + (k,)))
    return FinitenessVerdict("finite", len(seen))


def replay_certificate(m: ExchangeMatrix, certificate: dict) -> bool:
    """Re-run an Infinite witness: apply its path, restrict, re-classify."""
    cur = m
    for k in certificate.get("path", ()):
        cur = mutate(cur, k)
    if "entry" in certificate:
        i, j = certificate["entry"]
        return abs(cur.b[i][j]) >= 3
    sub = restrict(cur, certificate["subset"])
    return _triangle_certificate(sub) == certificate["pattern"]


# -- reduction relation -------------------------------------------------------


def _connected_drops(m: ExchangeMatrix):
    """Single-vertex deletions that keep the matrix connected."""
    n = m.n
    for drop in range(n):
        subset = tuple(v for v in range(n) if v != drop)
        sub = restrict(m, subset)
        if is_connected(sub):
            yield drop, sub


def reduces_to(
    source: ExchangeMatrix, target: ExchangeMatrix, budget: int = None
):
    """Search for a witness that ``source`` reduces to ``target`` via
    mutations and restrictions (target matched up to isomorphism).

    Returns the op list [("mu", k), ("restrict", (v, ...))] or None.  The
    search walks connected intermediate states; restrictions to arbitrary
    (possibly disconnected) subsets are tried only as the final step, which
    covers the disconnected targets used in practice.  ``None`` is
    budget-relative, not a proof of absence.
    """
    if budget is None:
        budget = default_budget()
    from collections import Counter
    from itertools import combinations

    tkey = canonical_key(target)
    tn = target.n
    tneeded = Counter(abs(x) for x in target.flat if x)

    def final_match(m: ExchangeMatrix):
        if m.n < tn:
            return None
        if m.n == tn:
            return () if canonical_key(m) == tkey else None
        # cheap necessary condition: the state must carry at least the
        # target's multiset of nonzero |entries| before subsets are tried
        have = Counter(abs(x) for x in m.flat if x)
        if any(have.get(v, 0) < c for v, c in tneeded.items()):
            return None
        for subset in combinations(range(m.n), tn):
            sub = restrict(m, subset)
            subc = Counter(abs(x) for x in sub.flat if x)
            if subc != tneeded:
                continue
            if canonical_key(sub) == tkey:
                return subset
        return None

    start = (canonical_key(source), source, ())
    seen = {start[0]}
    queue = deque([start[1:]])
    sub_final = final_match(source)
    if sub_final is not None:
        return list(sub_final and [("restrict", sub_final)] or [])
    while queue:
        cur, ops = queue.popleft()
        neighbors = []
        for k in range(cur.n):
            neighbors.append((mutate(cur, k), ops + (("mu", k),)))
        if cur.n > tn:
            for drop, sub in _connected_drops(cur):
                subset = tuple(v for v in range(cur.n) if v != drop)
                neighbors.append((sub, ops + (("restrict", subset),)))
        for nxt, nops in neighbors:
            key = canonical_key(nxt)
            if key in seen:
                continue
            if len(seen) >= budget:
                return None
            seen.add(key)
            sub_final = final_match(nxt)
            if sub_final is not None:
                out = list(nops)
                if sub_final != ():
                    out.append(("restrict", sub_final))
                return out
            queue.append((nxt, nops))
    return None


def apply_reduction(m: ExchangeMatrix, ops) -> ExchangeMatrix:
    """Replay a reduction witness."""
    for op, arg in ops:
        if op == "mu":
            m = mutate(m, arg)
        elif op == "restrict":
            m = restrict(m, arg)
        else:
            raise ValueError(f"unknown reduction op {op!r}")
    return m


# -- facet lemma check --------------------------------------------------------


def _restricted_cover(m: ExchangeMatrix, avoid: int, budget: int) -> set:
    """Canonical forms reachable from m without ever mutating at ``avoid``.

    Relabelings that fix the avoided vertex commute with the restricted
    mutation moves, so deduplicating on a canonical form with that vertex
    marked by a private color is exact while keeping the state space near
    class size, not labeled-class size.
    """
    from .isomorphism import canonical_key_colored

    def marked(mm):
        return canonical_key_colored(
            mm, tuple(1 if v == avoid else 0 for v in range(mm.n))
        )

    seen = {marked(m)}
    covered = {canonical_key(m)}
    queue = deque([m])
    while queue:
        cur = queue.popleft()
        for k in range(m.n):
            if k == avoid:
                continue
            nxt = mutate(cur, k)
            key = marked(nxt)
            if key in seen:
                continue
            if len(seen) >= budget:
                queue.clear()
                break
            seen.add(key)
            covered.add(canonical_key(nxt))
            queue.append(nxt)
    return covered


def facet_check(m: ExchangeMatrix, budget: int = None) -> bool:
    """Every class member must be reachable avoiding some vertex.

    Runs n restricted BFS searches (mutations at i forbidden; states are
    canonical forms with vertex i marked) and checks the union of their
    plain canonical forms covers the full class.
    """
    from .catalog import recognize_type

    if budget is None:
        budget = default_budget()
    if not is_acyclic(m):
        raise NotAcyclic("facet check needs an acyclic input")
    t = recognize_type(m) if m.n > 1 else None
    if m.n > 1 and (t is None or t.affine not in ("~", "2", "3")):
        raise NotAffine(f"facet check needs an affine input, got {t}")
    full = enumerate_class(m, budget=budget)
    covered = set()
    for i in range(m.n):
        covered |= _restricted_cover(m, i, budget)
    return covered == full.keys
