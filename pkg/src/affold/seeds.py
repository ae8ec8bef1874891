"""Seeds with exact Laurent-polynomial cluster variables; folded seeds.

Cluster variables are stored as Laurent polynomials in the initial
variables at all times; the exchange-relation division is exact polynomial
division and must stay exact (the Laurent phenomenon guarantees it on valid
mutation sequences, so an inexact division signals a bug, not a fallback).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .catalog import GroupAction
from .errors import BudgetExceeded, NotAdmissible
from .folding import FoldedMatrix, fold, g_admissible, g_invariant
from .laurent import LaurentPolynomial
from .matrix import ExchangeMatrix, mutate

SEED_MEMORY_GUARD = 2_000_000


@dataclass(frozen=True)
class Seed:
    cluster: tuple  # n LaurentPolynomials in the initial variables
    matrix: ExchangeMatrix

    @property
    def n(self) -> int:
        return self.matrix.n

    def key(self) -> tuple:
        return (
            tuple(v.key() for v in self.cluster),
            self.matrix.b,
            self.matrix.d,
        )


def initial_seed(m: ExchangeMatrix) -> Seed:
    n = m.n
    return Seed(
        tuple(LaurentPolynomial.variable(n, i) for i in range(n)), m
    )


def seed_to_json(s: Seed) -> dict:
    """JSON form: each variable as [exponent-vector, coefficient-string]
    pairs in the canonical graded-lexicographic term order."""
    return {
        "variables": [
            [[list(exp), str(coeff)] for exp, coeff in v.sorted_terms()]
            for v in s.cluster
        ],
        "b": [list(row) for row in s.matrix.b],
        "d": list(s.matrix.d),
    }


def seed_from_json(data: dict) -> Seed:
    from .matrix import from_parts

    matrix = from_parts(data["b"], data["d"])
    cluster = tuple(
        LaurentPolynomial(
            matrix.n,
            {tuple(exp): int(coeff) for exp, coeff in terms},
        )
        for terms in data["variables"]
    )
    return Seed(cluster, matrix)


def mutate_seed(s: Seed, k: int) -> Seed:
    """Seed mutation: x_k' = (prod_{b[j][k]>0} x_j^{b[j][k]} +
    prod_{b[j][k]<0} x_j^{-b[j][k]}) / x_k, matrix mutated alongside."""
    n = s.n
    pos = LaurentPolynomial.one(n)
    neg = LaurentPolynomial.one(n)
    for j in range(n):
        bjk = s.matrix.b[j][k]
        if bjk > 0:
            pos = pos * s.cluster[j] ** bjk
        elif bjk < 0:
            neg = neg * s.cluster[j] ** (-bjk)
    new_var = (pos + neg).exact_div(s.cluster[k])
    cluster = list(s.cluster)
    cluster[k] = new_var
    return Seed(tuple(cluster), mutate(s.matrix, k))


def mutate_seed_seq(s: Seed, ks) -> Seed:
    for k in ks:
        s = mutate_seed(s, k)
    return s


@dataclass(frozen=True)
class FoldedSeed:
    cluster: tuple  # orbit-indexed variables in the reduced ring
    matrix: FoldedMatrix


@dataclass(frozen=True)
class NotInvariant:
    """Failure value for psi projection, with the offending orbit pair."""

    reason: str
    orbit: tuple = None
    witness: tuple = None


def psi_project(s: Seed, action: GroupAction):
    """Project via psi: one fresh variable per orbit (exponent projection).

    Succeeds iff all same-orbit variables project equally and the matrix is
    admissible; returns FoldedSeed or NotInvariant.

    psi is realized concretely as the orbitwise identification
    x_i -> y_{orbit(i)} (summing exponents across each orbit); any
    surjection making the initial seed admissible would serve, other
    choices are out of scope.
    """
    orbits = action.orbits
    m = len(orbits)
    projected = [v.project(orbits, m) for v in s.cluster]
    for oi, orb in enumerate(orbits):
        first = projected[orb[0]]
        for v in orb[1:]:
            if projected[v] != first:
                return NotInvariant("variable_mismatch", orb, (orb[0], v))
    report = g_admissible(s.matrix, action)
    if not report.admissible:
        return NotInvariant("matrix_" + report.witness_kind, witness=report.witness)
    folded = fold(s.matrix, action)
    return FoldedSeed(tuple(projected[orb[0]] for orb in orbits), folded)


def seed_is_psi_invariant(s: Seed, action: GroupAction) -> bool:
    """(G, psi)-invariance: orbitwise equal projections + invariant matrix."""
    orbits = action.orbits
    m = len(orbits)
    projected = [v.project(orbits, m) for v in s.cluster]
    for orb in orbits:
        first = projected[orb[0]]
        if any(projected[v] != first for v in orb[1:]):
            return False
    return g_invariant(s.matrix, action)


def orbit_mutate_seed(s: Seed, action: GroupAction, orbit) -> Seed:
    """Compose seed mutations over an orbit in ascending order.

    Order independence of the matrix part is asserted directly; the seed is
    required to be (G, psi)-admissible."""
    orbit = tuple(sorted(orbit))
    report = g_admissible(s.matrix, action)
    if not report.admissible:
        raise NotAdmissible(f"seed matrix not admissible: {report.witness_kind}")
    out = s
    for v in orbit:
        out = mutate_seed(out, v)
    if len(orbit) > 1:
        alt = s.matrix
        for v in reversed(orbit):
            alt = mutate(alt, v)
        assert alt.b == out.matrix.b, "orbit mutation depended on the order"
    return out


def mutate_folded_seed(fs: FoldedSeed, idx: int) -> FoldedSeed:
    """Plain seed mutation inside the folded (orbit-indexed) ring."""
    inner = Seed(fs.cluster, fs.matrix.matrix)
    out = mutate_seed(inner, idx)
    return FoldedSeed(out.cluster, FoldedMatrix(out.matrix, fs.matrix.action))


@dataclass
class PatternReport:
    triple: tuple
    depth: int
    seeds_seen: int
    invariant_seeds: int
    admissible_seeds: int
    orbit_reachable: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_folded_pattern(x, group: str, y: str, depth: int, seed_guard: int = SEED_MEMORY_GUARD) -> PatternReport:
    """Bounded-depth check of the folded-pattern theorems.

    BFS over labeled seeds under all single mutations to ``depth``; every
    (G,psi)-invariant seed found must be (G,psi)-admissible and must appear
    in the orbit-mutation-only BFS run to the same depth.  The commuting
    square psi(orbit_mutate(s)) == mutate(psi(s)) is asserted along the
    orbit BFS.
    """
    from .catalog import diagram, standard_action

    action = standard_action(x, group, y)
    s0 = initial_seed(diagram(x))
    violations = []

    # orbit-mutation BFS with the commuting-square assertion
    orbit_seen = {s0.key(): s0}
    frontier = [s0]
    for _ in range(depth):
        nxt = []
        for s in frontier:
            fs = psi_project(s, action)
            if isinstance(fs, NotInvariant):
                violations.append(
                    {"kind": "orbit_reach_not_admissible", "detail": fs.reason}
                )
                continue
            for idx, orb in enumerate(action.orbits):
                image = orbit_mutate_seed(s, action, orb)
                proj = psi_project(image, action)
                if isinstance(proj, NotInvariant):
                    violations.append(
                        {"kind": "orbit_image_not_admissible", "detail": proj.reason}
                    )
                else:
                    square = mutate_folded_seed(fs, idx)
                    if (
                        square.cluster != proj.cluster
                        or square.matrix.matrix.b != proj.matrix.matrix.b
                    ):
                        violations.append({"kind": "commuting_square", "orbit": idx})
                key = image.key()
                if key not in orbit_seen:
                    orbit_seen[key] = image
                    nxt.append(image)
        frontier = nxt

    # all-single-mutation BFS
    seen = {s0.key(): s0}
    frontier = [s0]
    inv = adm = 0
    for _ in range(depth):
        nxt = []
        for s in frontier:
            for k in range(s.n):
                image = mutate_seed(s, k)
                key = image.key()
                if key in seen:
                    continue
                if len(seen) >= seed_guard:
                    raise BudgetExceeded("seed BFS exceeded the memory guard")
                seen[key] = image
                nxt.append(image)
        frontier = nxt
    for key, s in seen.items():
        if seed_is_psi_invariant(s, action):
            inv += 1
            if g_admissible(s.matrix, action).admissible:
                adm += 1
            else:
                violations.append({"kind": "invariant_not_admissible"})
            if key not in orbit_seen:
                violations.append({"kind": "invariant_not_orbit_reachable"})
    return PatternReport(
        (x, group, y), depth, len(seen), inv, adm, len(orbit_seen), violations
    )


def positivity_audit(s: Seed, depth: int, seed_guard: int = SEED_MEMORY_GUARD):
    """BFS to ``depth``; every cluster variable produced must be a Laurent
    polynomial with strictly positive coefficients.  Violations carry their
    mutation path (none are expected; one signals an arithmetic bug)."""
    seen = {s.key()}
    frontier = [(s, ())]
    violations = []
    variables = set(s.cluster)
    for _ in range(depth):
        nxt = []
        for cur, path in frontier:
            for k in range(cur.n):
                image = mutate_seed(cur, k)
                key = image.key()
                if key in seen:
                    continue
                if len(seen) >= seed_guard:
                    raise BudgetExceeded("seed BFS exceeded the memory guard")
                seen.add(key)
                variables.add(image.cluster[k])
                if not image.cluster[k].is_positive():
                    violations.append(
                        {"path": tuple(v + 1 for v in path + (k,)), "variable": repr(image.cluster[k])}
                    )
                nxt.append((image, path + (k,)))
        frontier = nxt
    return {
        "seeds": len(seen),
        "variables": len(variables),
        "violations": violations,
    }
