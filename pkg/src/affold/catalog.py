"""Dynkin diagram catalog, group actions, type recognition, class counting.

Diagram constructors cover the standard affine and twisted affine families
plus the finite types needed for recognition.  Vertex numbering follows the
appendix figures of the format spec wherever a group action is defined
(A~{n,n}, D~n, E~6, E~7), and reads left-to-right otherwise.  Indices are
0-based at this level.

Type strings: ``A5``, ``A~1``, ``A~{2,3}``, ``B~3``, ``C~2``, ``D~7``,
``E~6``, ``F~4``, ``G~2``, ``A2(2)``, ``A7(2)``, ``D5(2)``, ``E6(2)``,
``D4(3)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import (
    Disconnected,
    FormatError,
    InvalidOrientation,
    InvalidRank,
    LengthMismatch,
    NonIntegerResult,
    UnknownTriple,
)
from .matrix import ExchangeMatrix, is_connected, make_exchange_matrix


@dataclass(frozen=True)
class DynkinType:
    """family in A..G; affine '' (finite), '~' (standard), '2'/'3' (twist);
    for A~ with rank >= 2 the unordered bi-orientation pair {p, q}."""

    family: str
    affine: str
    rank: int
    pq: tuple = None

    def __str__(self) -> str:
        if self.affine == "~":
            if self.family == "A" and self.pq is not None and self.rank >= 2:
                return "A~{%d,%d}" % self.pq
            return f"{self.family}~{self.rank}"
        if self.affine in ("2", "3"):
            return f"{self.family}{self.rank}({self.affine})"
        return f"{self.family}{self.rank}"


_TYPE_RE = re.compile(
    r"^([A-G])\s*(~)?\s*(?:\{\s*(\d+)\s*,\s*(\d+)\s*\}|(\d+))\s*(?:\((\d)\))?$"
)


def parse_type(text: str) -> DynkinType:
    m = _TYPE_RE.match(text.strip())
    if not m:
        raise FormatError(f"cannot parse Dynkin type {text!r}")
    family, tilde, p, q, rank, twist = m.groups()
    if tilde and twist:
        raise FormatError(f"type {text!r} mixes affine and twisted markers")
    if p is not None:
        if not tilde or family != "A":
            raise FormatError("bi-orientation pairs only occur for A~{p,q}")
        p, q = int(p), int(q)
        if p < 1 or q < 1:
            raise InvalidRank("A~{p,q} needs p, q >= 1")
        lo, hi = min(p, q), max(p, q)
        return DynkinType("A", "~", lo + hi - 1, (lo, hi))
    rank = int(rank)
    if twist:
        t = DynkinType(family, twist, rank)
    elif tilde:
        if family == "A":
            if rank == 1:
                return DynkinType("A", "~", 1, (1, 1))
            raise FormatError(
                "affine A of rank >= 2 needs a bi-orientation pair, e.g. A~{1,2}"
            )
        t = DynkinType(family, "~", rank)
    else:
        t = DynkinType(family, "", rank)
    _edges(t)  # validates parameters
    return t


def _path(edges, vs):
    for a, b in zip(vs, vs[1:]):
        edges.append((a, b, -1, -1))


def _edges(t: DynkinType) -> list:
    """Edge list [(i, j, c_ij, c_ji)] in the catalog numbering (0-based)."""
    f, a, r = t.family, t.affine, t.rank
    edges = []
    if a == "":
        if f == "A" and r >= 1:
            _path(edges, range(r))
        elif f == "B" and r >= 2:
            _path(edges, range(r - 1))
            edges.append((r - 2, r - 1, -2, -1))
        elif f == "C" and r >= 3:
            _path(edges, range(r - 1))
            edges.append((r - 2, r - 1, -1, -2))
        elif f == "D" and r >= 4:
            _path(edges, range(r - 2))
            edges.append((r - 3, r - 2, -1, -1))
            edges.append((r - 3, r - 1, -1, -1))
        elif f == "E" and r in (6, 7, 8):
            _path(edges, range(r - 1))
            edges.append((2, r - 1, -1, -1))
        elif f == "F" and r == 4:
            edges = [(0, 1, -1, -1), (1, 2, -2, -1), (2, 3, -1, -1)]
        elif f == "G" and r == 2:
            edges = [(0, 1, -1, -3)]
        else:
            raise InvalidRank(f"no finite type {t}")
    elif a == "~":
        if f == "A":
            p, q = t.pq
            n = p + q
            if n == 2:
                return [(0, 1, -2, -2)]
            cyc = _apq_cycle(p, q)
            for v, w in zip(cyc, cyc[1:] + [cyc[0]]):
                edges.append((v, w, -1, -1))
        elif f == "B" and r >= 3:
            # vertices 0..r: fork {0,1} at 2, path 2..r-1, double edge to r
            edges = [(0, 2, -1, -1), (1, 2, -1, -1)]
            _path(edges, range(2, r))
            edges.append((r - 1, r, -2, -1))
        elif f == "C" and r >= 2:
            # path 0..r with long roots at both ends
            edges = [(0, 1, -2, -1)]
            _path(edges, range(1, r))
            edges.append((r - 1, r, -1, -2))
        elif f == "D" and r == 4:
            edges = [(0, i, -1, -1) for i in (1, 2, 3, 4)]
        elif f == "D" and r >= 5:
            # appendix numbering: forks {1,2}@0 and {r-1,r}@(r-2), path 0,3,..,r-2
            edges = [(0, 1, -1, -1), (0, 2, -1, -1), (0, 3, -1, -1)]
            _path(edges, range(3, r - 1))
            edges.append((r - 2, r - 1, -1, -1))
            edges.append((r - 2, r, -1, -1))
        elif f == "E" and r == 6:
            edges = [(0, 1, -1, -1), (1, 2, -1, -1), (0, 3, -1, -1),
                     (3, 4, -1, -1), (0, 5, -1, -1), (5, 6, -1, -1)]
        elif f == "E" and r == 7:
            edges = [(0, 1, -1, -1), (0, 2, -1, -1), (2, 3, -1, -1),
                     (3, 4, -1, -1), (0, 5, -1, -1), (5, 6, -1, -1),
                     (6, 7, -1, -1)]
        elif f == "E" and r == 8:
            edges = [(0, 2, -1, -1), (2, 3, -1, -1), (1, 3, -1, -1),
                     (3, 4, -1, -1), (4, 5, -1, -1), (5, 6, -1, -1),
                     (6, 7, -1, -1), (7, 8, -1, -1)]
        elif f == "F" and r == 4:
            edges = [(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -2, -1),
                     (3, 4, -1, -1)]
        elif f == "G" and r == 2:
            edges = [(0, 1, -1, -1), (1, 2, -3, -1)]
        else:
            raise InvalidRank(f"no standard affine type {t}")
    elif a == "2":
        if f == "A" and r == 2:
            edges = [(0, 1, -1, -4)]
        elif f == "A" and r >= 4 and r % 2 == 0:
            # A_{2m}^(2): path of m+1 vertices, both end edges point inward
            m = r // 2
            edges = [(0, 1, -2, -1)]
            _path(edges, range(1, m))
            edges.append((m - 1, m, -2, -1))
        elif f == "A" and r >= 5 and r % 2 == 1:
            # A_{2m-1}^(2): fork {0,1} at 2, path, double edge at far end
            m = (r + 1) // 2
            edges = [(0, 2, -1, -1), (1, 2, -1, -1)]
            _path(edges, range(2, m))
            edges.append((m - 1, m, -1, -2))
        elif f == "D" and r >= 3:
            # D_n^(2): path of n vertices, both end edges point outward
            edges = [(0, 1, -1, -2)]
            _path(edges, range(1, r - 1))
            edges.append((r - 2, r - 1, -2, -1))
        elif f == "E" and r == 6:
            edges = [(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -1, -2),
                     (3, 4, -1, -1)]
        else:
            raise InvalidRank(f"no twisted type {t}")
    elif a == "3":
        if f == "D" and r == 4:
            edges = [(0, 1, -1, -1), (1, 2, -1, -3)]
        else:
            raise InvalidRank(f"no twisted type {t}")
    else:
        raise InvalidRank(f"no type {t}")
    return edges


def _apq_cycle(p: int, q: int) -> list:
    """Cycle vertex order for A~{p,q} (0-based).

    For p = q = n >= 2 this is the appendix order 1..n, 2n, 2n-1, .., n+1
    so the reflection action acts on the catalog labels; otherwise plain
    1..p+q."""
    n = p + q
    if p == q and n >= 4:
        half = p
        return list(range(half)) + [n - 1] + list(range(n - 2, half - 1, -1))
    return list(range(n))


def vertex_count(t: DynkinType) -> int:
    f, a, r = t.family, t.affine, t.rank
    if a == "":
        return {"F": 4, "G": 2}.get(f, r)
    if a == "~":
        if f == "A":
            return sum(t.pq)
        return {"F": 5, "G": 3}[f] if f in "FG" else r + 1
    if a == "2":
        if f == "A":
            return r // 2 + 1 if r % 2 == 0 else (r + 1) // 2 + 1
        if f == "D":
            return r
        return 5  # E6(2)
    return 3  # D4(3)


def _alternating_orientation(edges, n: int) -> list:
    """Orient each edge from even to odd BFS-distance parity (root vertex 0).

    All diagrams here are bipartite (trees, or even cycles when this policy
    applies), so the orientation is well defined, acyclic and invariant under
    every graph automorphism; vertex 0 is a source."""
    adj = [[] for _ in range(n)]
    for i, j, _, _ in edges:
        adj[i].append(j)
        adj[j].append(i)
    dist = [-1] * n
    dist[0] = 0
    queue = [0]
    while queue:
        v = queue.pop(0)
        for w in adj[v]:
            if dist[w] == -1:
                dist[w] = dist[v] + 1
                queue.append(w)
    oriented = []
    for i, j, cij, cji in edges:
        if dist[i] % 2 == 0:
            oriented.append((i, j, cij, cji))
        else:
            oriented.append((j, i, cji, cij))
    return oriented


def diagram(t, orientation=None) -> ExchangeMatrix:
    """Exchange matrix of a catalog diagram.

    ``orientation``: None picks the default policy (alternating for
    bipartite diagrams, the p/q bi-path for A~{p,q} with p != q); otherwise
    a list of directed 0-based pairs covering each edge exactly once.
    """
    if isinstance(t, str):
        t = parse_type(t)
    edges = _edges(t)
    n = vertex_count(t)
    if t.family == "A" and t.affine == "~" and t.rank == 1:
        return make_exchange_matrix([[0, 2], [-2, 0]])
    if orientation is None:
        if t.family == "A" and t.affine == "~" and t.pq[0] != t.pq[1]:
            p, q = t.pq
            cyc = _apq_cycle(p, q)
            oriented = []
            for idx, (v, w) in enumerate(zip(cyc, cyc[1:] + [cyc[0]])):
                if idx < p:
                    oriented.append((v, w, -1, -1))
                else:
                    oriented.append((w, v, -1, -1))
        else:
            oriented = _alternating_orientation(edges, n)
    else:
        wanted = {frozenset((i, j)): (i, j, cij, cji) for i, j, cij, cji in edges}
        oriented = []
        for i, j in orientation:
            key = frozenset((i, j))
            if key not in wanted:
                raise InvalidOrientation(f"({i + 1},{j + 1}) is not a diagram edge")
            ei, _, cij, cji = wanted.pop(key)
            if i == ei:
                oriented.append((i, j, cij, cji))
            else:
                oriented.append((i, j, cji, cij))
        if wanted:
            raise InvalidOrientation("orientation misses some diagram edges")
    rows = [[0] * n for _ in range(n)]
    for i, j, cij, cji in oriented:
        rows[i][j] = -cij
        rows[j][i] = cji
    return make_exchange_matrix(rows)


def cartan_matrix(t) -> tuple:
    """Cartan matrix of a catalog type, read off the diagram."""
    if isinstance(t, str):
        t = parse_type(t)
    if t.family == "A" and t.affine == "~" and t.rank == 1:
        return ((2, -2), (-2, 2))
    n = vertex_count(t)
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, cij, cji in _edges(t):
        rows[i][j] = cij
        rows[j][i] = cji
    return tuple(tuple(r) for r in rows)


def layout(t) -> list:
    """Planar [x, y] coordinates per vertex, shaped like the paper figures."""
    if isinstance(t, str):
        t = parse_type(t)
    n = vertex_count(t)
    f, a, r = t.family, t.affine, t.rank
    if a == "~" and f == "A":
        import math

        cyc = _apq_cycle(*t.pq) if t.pq else [0, 1]
        pos = [None] * n
        for idx, v in enumerate(cyc):
            ang = math.pi / 2 - 2 * math.pi * idx / len(cyc)
            pos[v] = [round(math.cos(ang), 4), round(math.sin(ang), 4)]
        return pos
    if a == "~" and f == "D" and r == 4:
        return [[0, 0], [0, 1], [-1, 0], [0, -1], [1, 0]]
    if a == "~" and f == "D":
        pos = [[0, 0], [-0.7, 0.7], [-0.7, -0.7]]
        for idx in range(3, r - 1):
            pos.append([idx - 2.0, 0])
        pos.append([r - 3.0, 0])
        pos.append([r - 3 + 0.7, 0.7])
        pos.append([r - 3 + 0.7, -0.7])
        return pos[:n]
    if a == "~" and f == "E" and r == 6:
        import math

        pos = [[0, 0]] + [None] * 6
        for arm, ang in ((0, math.pi / 2), (1, math.pi + math.pi / 6), (2, -math.pi / 6)):
            for k in (1, 2):
                pos[1 + 2 * arm + (k - 1)] = [
                    round(k * math.cos(ang), 4),
                    round(k * math.sin(ang), 4),
                ]
        return pos
    if a == "~" and f == "E" and r == 7:
        return [[0, 0], [0, 1], [-1, 0], [-2, 0], [-3, 0], [1, 0], [2, 0], [3, 0]]
    if a == "~" and f == "E" and r == 8:
        pos = [[0, 0], [2, 1], [1, 0], [2, 0], [3, 0], [4, 0], [5, 0], [6, 0], [7, 0]]
        return pos
    if a == "~" and f == "B" or (a == "2" and f == "A" and r % 2 == 1):
        pos = [[-0.7, 0.7], [-0.7, -0.7]]
        pos += [[float(i), 0] for i in range(n - 2)]
        return pos
    # remaining families are paths
    return [[float(i), 0] for i in range(n)]


@dataclass(frozen=True)
class GroupAction:
    """A finite group acting on vertex indices via generating permutations."""

    n: int
    generators: tuple
    tag: str
    orbits: tuple

    def orbit_of(self, v: int) -> tuple:
        for orb in self.orbits:
            if v in orb:
                return orb
        raise LengthMismatch(f"vertex {v + 1} outside 1..{self.n}")

    def orbit_index(self, v: int) -> int:
        for idx, orb in enumerate(self.orbits):
            if v in orb:
                return idx
        raise LengthMismatch(f"vertex {v + 1} outside 1..{self.n}")


def _perm_order(p: tuple) -> int:
    order = 1
    n = len(p)
    seen = [False] * n
    for s in range(n):
        if seen[s]:
            continue
        length = 0
        v = s
        while not seen[v]:
            seen[v] = True
            v = p[v]
            length += 1
        lo = order
        while lo % length:
            lo += order
        order = lo
    return order


def group_action(n: int, generators, tag: str) -> GroupAction:
    gens = tuple(tuple(g) for g in generators)
    for g in gens:
        if sorted(g) != list(range(n)):
            raise LengthMismatch("generator is not a permutation of the vertex set")
    expected = {"Z1": [], "Z2": [2], "Z3": [3], "Z2xZ2": [2, 2]}
    if tag not in expected:
        raise FormatError(f"unknown group tag {tag!r}")
    orders = expected[tag]
    if len(gens) != len(orders):
        raise LengthMismatch(f"group {tag} needs {len(orders)} generator(s)")
    for g, o in zip(gens, orders):
        if _perm_order(g) != o:
            raise FormatError(f"generator has order {_perm_order(g)}, expected {o}")
    if tag == "Z2xZ2":
        a, b = gens
        if tuple(a[b[i]] for i in range(n)) != tuple(b[a[i]] for i in range(n)):
            raise FormatError("Z2xZ2 generators must commute")
    seen = [False] * n
    orbits = []
    for s in range(n):
        if seen[s]:
            continue
        orb = {s}
        frontier = [s]
        seen[s] = True
        while frontier:
            v = frontier.pop()
            for g in gens:
                w = g[v]
                if not seen[w]:
                    seen[w] = True
                    orb.add(w)
                    frontier.append(w)
        orbits.append(tuple(sorted(orb)))
    orbits.sort(key=lambda o: o[0])
    return GroupAction(n, gens, tag, tuple(orbits))


def trivial_action(n: int) -> GroupAction:
    return group_action(n, [], "Z1")


def _cycles_to_perm(n: int, cycles) -> tuple:
    p = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            p[a] = b
    return tuple(p)


def table1_triples(max_vertices: int = None) -> list:
    """All (X, G, Y) folding triples, instantiated up to a vertex bound."""
    out = [
        ("A~{2,2}", "Z2", "A~1"),
        ("D~4", "Z2xZ2", "A2(2)"),
        ("D~4", "Z3", "D4(3)"),
        ("E~6", "Z3", "G~2"),
        ("E~6", "Z2", "E6(2)"),
        ("E~7", "Z2", "F~4"),
    ]
    bound = max_vertices if max_vertices is not None else 12
    for n in range(3, bound):
        if 2 * n <= bound:
            out.append(("A~{%d,%d}" % (n, n), "Z2", f"D{n + 1}(2)"))
    for r in range(5, bound):
        if r + 1 <= bound:
            out.append((f"D~{r}", "Z2", f"C~{r - 2}"))
            out.append((f"D~{r}", "Z2", f"A{2 * r - 3}(2)"))
            if r % 2 == 0:
                out.append((f"D~{r}", "Z2", f"B~{r // 2}"))
                out.append((f"D~{r}", "Z2xZ2", f"A{r - 2}(2)"))
    if max_vertices is not None:
        out = [t for t in out if vertex_count(parse_type(t[0])) <= max_vertices]
    return out


def standard_action(x, group: str, y: str) -> GroupAction:
    """The appendix group action for a folding triple (X, G, Y)."""
    t = parse_type(x) if isinstance(x, str) else x
    ty = parse_type(y)
    n = vertex_count(t)
    key = (str(t), group, str(ty))

    if key == ("A~{2,2}", "Z2", "A~1"):
        return group_action(4, [_cycles_to_perm(4, [[0, 3], [1, 2]])], "Z2")
    if t.family == "A" and t.affine == "~" and t.pq and t.pq[0] == t.pq[1] >= 3:
        m = t.pq[0]
        if key == (str(t), "Z2", f"D{m + 1}(2)"):
            cycles = [[i, m + i - 1] for i in range(1, m)]
            return group_action(2 * m, [_cycles_to_perm(2 * m, cycles)], "Z2")
    if key == ("D~4", "Z2xZ2", "A2(2)"):
        return group_action(
            5,
            [_cycles_to_perm(5, [[1, 2], [3, 4]]), _cycles_to_perm(5, [[1, 3], [2, 4]])],
            "Z2xZ2",
        )
    if key == ("D~4", "Z3", "D4(3)"):
        return group_action(5, [_cycles_to_perm(5, [[2, 3, 4]])], "Z3")
    if t.family == "D" and t.affine == "~" and t.rank >= 5:
        r = t.rank
        if key == (str(t), "Z2", f"C~{r - 2}"):
            return group_action(
                n, [_cycles_to_perm(n, [[1, 2], [r - 1, r]])], "Z2"
            )
        if key == (str(t), "Z2", f"A{2 * r - 3}(2)"):
            return group_action(n, [_cycles_to_perm(n, [[r - 1, r]])], "Z2")
        if r % 2 == 0 and key == (str(t), "Z2", f"B~{r // 2}"):
            # half turn: 0 <-> r-2, fork pairs swap across, path reflects
            cycles = [[0, r - 2], [1, r], [2, r - 1]]
            cycles += [[i, r - i] for i in range(3, (r + 1) // 2)]
            return group_action(n, [_cycles_to_perm(n, cycles)], "Z2")
        if r % 2 == 0 and key == (str(t), "Z2xZ2", f"A{r - 2}(2)"):
            cycles1 = [[0, r - 2], [1, r - 1], [2, r]]
            cycles1 += [[i, r - i] for i in range(3, (r + 1) // 2)]
            tau1 = _cycles_to_perm(n, cycles1)
            tau2 = _cycles_to_perm(n, [[1, 2], [r - 1, r]])
            return group_action(n, [tau1, tau2], "Z2xZ2")
    if key == ("E~6", "Z3", "G~2"):
        return group_action(7, [_cycles_to_perm(7, [[1, 3, 5], [2, 4, 6]])], "Z3")
    if key == ("E~6", "Z2", "E6(2)"):
        return group_action(7, [_cycles_to_perm(7, [[3, 5], [4, 6]])], "Z2")
    if key == ("E~7", "Z2", "F~4"):
        return group_action(8, [_cycles_to_perm(8, [[2, 5], [3, 6], [4, 7]])], "Z2")
    raise UnknownTriple(f"({x}, {group}, {y}) is not a folding triple")


def actions_for(t) -> list:
    """All (group, target, action) triples bundled with a catalog type."""
    t = parse_type(t) if isinstance(t, str) else t
    out = []
    for x, g, y in table1_triples():
        if x == str(t):
            out.append((g, y, standard_action(x, g, y)))
    return out


def apq_class_count(p: int, q: int):
    """Number of exchange matrices of type A~{p,q} up to isomorphism.

    Exact rational evaluation of the totient-sum formula; a fractional
    result signals a transcription bug and raises.
    """
    if p < 1 or q < 1:
        raise InvalidRank("need p, q >= 1")

    def phi(k: int) -> int:
        count = 0
        for d in range(1, k + 1):
            a, b = d, k
            while b:
                a, b = b, a % b
            if a == 1:
                count += 1
        return count

    total = Fraction(0)
    if p != q:
        for k in range(1, min(p, q) + 1):
            if p % k == 0 and q % k == 0:
                total += (
                    Fraction(phi(k), p + q)
                    * comb(2 * p // k, p // k)
                    * comb(2 * q // k, q // k)
                )
        total /= 2
    else:
        total = Fraction(comb(2 * p, p), 2)
        for k in range(1, p + 1):
            if p % k == 0:
                total += Fraction(phi(k), 4 * p) * comb(2 * p // k, p // k) ** 2
        total /= 2
    if total.denominator != 1:
        raise NonIntegerResult(f"class count for ({p},{q}) is {total}")
    return total.numerator


def _catalog_types(n: int) -> list:
    """All catalog types with n vertices (A~ cycles handled separately)."""
    out = []
    if n >= 1:
        out.append(DynkinType("A", "", n))
    if n >= 2:
        out.append(DynkinType("B", "", n))
    if n >= 3:
        out.append(DynkinType("C", "", n))
    if n >= 4:
        out.append(DynkinType("D", "", n))
    if n in (6, 7, 8):
        out.append(DynkinType("E", "", n))
    if n == 4:
        out.append(DynkinType("F", "", 4))
    if n == 2:
        out.append(DynkinType("G", "", 2))
        out.append(DynkinType("A", "~", 1, (1, 1)))
        out.append(DynkinType("A", "2", 2))
    if n >= 4:
        out.append(DynkinType("B", "~", n - 1))
    if n >= 3:
        out.append(DynkinType("C", "~", n - 1))
    if n >= 5:
        out.append(DynkinType("D", "~", n - 1))
    if n in (7, 8, 9):
        out.append(DynkinType("E", "~", n - 1))
    if n == 5:
        out.append(DynkinType("F", "~", 4))
        out.append(DynkinType("E", "2", 6))
    if n == 3:
        out.append(DynkinType("G", "~", 2))
        out.append(DynkinType("D", "3", 4))
    if n >= 3:
        out.append(DynkinType("A", "2", 2 * (n - 1)))
    if n >= 4:
        out.append(DynkinType("A", "2", 2 * (n - 1) - 1))
    if n >= 3:
        out.append(DynkinType("D", "2", n))
    return out


def _cartan_key(c: tuple):
    from . import backend

    n = len(c)
    flat = tuple(x for row in c for x in row)
    key, _, _ = backend.canonical_flat(flat, (0,) * n, n)
    return key


def _match_tree_type(m: ExchangeMatrix):
    """Match an acyclic member's Cartan counterpart against the catalog."""
    from .matrix import cartan_counterpart

    key = _cartan_key(cartan_counterpart(m))
    for t in _catalog_types(m.n):
        try:
            if _cartan_key(cartan_matrix(t)) == key:
                return t
        except InvalidRank:
            continue
    return None


def _match_cycle(m: ExchangeMatrix):
    """A~{p,q} from an acyclic member whose underlying graph is a cycle."""
    n = m.n
    deg = [sum(1 for j in range(n) if m.b[i][j] != 0) for i in range(n)]
    if n < 3 or any(x != 2 for x in deg):
        return None
    if any(abs(m.b[i][j]) > 1 for i in range(n) for j in range(n)):
        return None
    order = [0]
    prev = -1
    while len(order) < n:
        cur = order[-1]
        nxt = [j for j in range(n) if m.b[cur][j] != 0 and j != prev]
        if not nxt:
            return None
        prev = cur
        order.append(nxt[0])
    if m.b[order[-1]][order[0]] == 0:
        return None  # two components
    p = sum(
        1 for v, w in zip(order, order[1:] + [order[0]]) if m.b[v][w] > 0
    )
    q = n - p
    if p == 0 or q == 0:
        return None  # directed cycle: not acyclic anyway
    return DynkinType("A", "~", n - 1, (min(p, q), max(p, q)))


def recognize_type(m: ExchangeMatrix, budget: int = 100_000):
    """Search the mutation class for an acyclic member and name its type.

    Returns a DynkinType, or None (Unknown) when either the budget runs out
    without an acyclic member or the acyclic member is not a catalog diagram
    (e.g. mutation-infinite inputs).
    """
    from .matrix import is_acyclic
    from .mutclass import enumerate_class

    if not is_connected(m):
        raise Disconnected("recognition needs a connected matrix")
    cls = enumerate_class(m, budget=budget)
    for member in cls.members:
        rep = member.representative
        if is_acyclic(rep):
            cyc = _match_cycle(rep)
            if cyc is not None:
                return cyc
            return _match_tree_type(rep)
    return None
