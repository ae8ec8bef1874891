"""Acceptance criteria, one test per criterion, one printed line each.

Run with ``pytest tests/test_acceptance.py -v -s``.

Every tolerance here is exact (integer equality / bit-exact matrices).
Two published class-count values (the 7- and 9-vertex simply-laced E
types) disagree with exhaustive enumeration; those two assertions are
implemented faithfully as stated and fail, with the verification chain in
the failure message and in the decisions ledger.  The companion regression
test pins the independently verified values.
"""

from __future__ import annotations

import random
import time

import pytest

from affold import (
    apq_class_count,
    diagram,
    enumerate_class,
    facet_check,
    fold,
    fold_commutes,
    g_admissible,
    globally_foldable,
    group_action,
    initial_seed,
    labeled_class,
    make_exchange_matrix,
    mutate,
    mutate_quiver_3step,
    positivity_audit,
    reduces_to,
    standard_action,
    table1_triples,
    transpose,
    verify_folded_pattern,
    verify_invariance_equals_admissibility,
)
from affold.folding import invariant_orbit_reps
from affold.isomorphism import automorphism_group

from conftest import MU3_IMAGE, random_skew_symmetric, random_skew_symmetrizable

SWEEP_TRIPLES = table1_triples(max_vertices=9)
SWEPT_DIAGRAMS = sorted({x for x, _, _ in SWEEP_TRIPLES})


def _line(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {name}: {status}{suffix}")


# -- criterion 1: published class counts --------------------------------------

PUBLISHED_COUNTS = [("E~6", 130), ("E~7", 1080), ("E~8", 7660), ("F~4", 60), ("G~2", 6)]


@pytest.mark.parametrize("name,published", PUBLISHED_COUNTS)
def test_published_class_counts(name, published):
    t0 = time.time()
    cls = enumerate_class(diagram(name))
    iso = len(cls)
    ok = cls.closed and iso == published
    if not ok:
        # the stated fallback: try the labeled convention before failing
        labeled, closed = labeled_class(diagram(name), budget=600_000)
        labeled_text = str(len(labeled)) if closed else f">{len(labeled)}"
        _line(f"class-count {name}", False, f"iso={iso}, labeled={labeled_text}")
        pytest.fail(
            f"{name}: published count {published}; exhaustive enumeration gives "
            f"{iso} isomorphism classes (mutation-closed, members pairwise "
            f"non-isomorphic by brute force) and {labeled_text} labeled matrices. "
            f"Neither convention attains {published}; see decisions ledger: the "
            f"published table entry is a misprint."
        )
    _line(f"class-count {name}", True, f"{iso} in {time.time() - t0:.1f}s")


def test_verified_class_counts_regression():
    # independently verified truth for the two misprinted entries
    assert len(enumerate_class(diagram("E~6"))) == 132
    assert len(enumerate_class(diagram("E~8"))) == 7560
    _line("class-count regression (132 / 7560)", True)


# -- criterion 2: affine A counts ----------------------------------------------


def test_a22_class_size_and_formula_agreement():
    assert len(enumerate_class(diagram("A~{2,2}"))) == 4
    mismatches = []
    for total in range(2, 9):
        for p in range(1, total // 2 + 1):
            q = total - p
            want = apq_class_count(p, q)
            name = "A~1" if total == 2 else "A~{%d,%d}" % (p, q)
            got = len(enumerate_class(diagram(name)))
            if got != want:
                mismatches.append((p, q, want, got))
    _line("A~{p,q} counts (p+q <= 8)", not mismatches, "16 pairs")
    assert not mismatches


# -- criterion 3: golden values -------------------------------------------------


def test_golden_values(b_example_4x4, q_admissible_a22, e6_admissible, six_cycle):
    assert mutate(b_example_4x4, 2).rows() == MU3_IMAGE

    act22 = standard_action("A~{2,2}", "Z2", "A~1")
    assert fold(q_admissible_a22, act22).matrix.rows() == [[0, -2], [2, 0]]

    act_e6 = standard_action("E~6", "Z3", "G~2")
    assert fold(e6_admissible, act_e6).matrix.rows() == [
        [0, 1, 0], [-3, 0, -1], [0, 1, 0],
    ]

    act6 = group_action(6, [(3, 4, 5, 0, 1, 2)], "Z2")
    image = mutate(mutate(six_cycle, 3), 0)
    report = g_admissible(image, act6)
    assert report.invariant and not report.admissible
    assert tuple(v + 1 for v in report.witness) == (2, 5, 3)
    _line("golden values (mu3 image, two folds, witness)", True)


# -- criterion 4: invariance = admissibility sweep ------------------------------


def test_invariance_equals_admissibility_sweep():
    t0 = time.time()
    failures = []
    for x, g, y in SWEEP_TRIPLES:
        rep = verify_invariance_equals_admissibility(x, g, y)
        ok = (
            rep.invariant_count == rep.admissible_count
            and not rep.counterexamples
            and rep.order2_zero_ok
        )
        if rep.labeled_invariant_count is not None:
            ok = ok and rep.labeled_invariant_count == rep.labeled_admissible_count
        if not ok:
            failures.append((x, g, y, rep.to_json()))
    elapsed = time.time() - t0
    _line(
        "theorem sweep over %d triples" % len(SWEEP_TRIPLES),
        not failures,
        f"{elapsed:.0f}s",
    )
    assert not failures
    assert elapsed < 1800


# -- criterion 5: global foldability --------------------------------------------


def test_global_foldability():
    for x, g, y in SWEEP_TRIPLES:
        verdict = globally_foldable(diagram(x), standard_action(x, g, y))
        assert verdict.status == "foldable", (x, g, y, verdict)

    six = make_exchange_matrix(
        [
            [0, 1, 0, 0, 0, -1],
            [-1, 0, 1, 0, 0, 0],
            [0, -1, 0, 1, 0, 0],
            [0, 0, -1, 0, 1, 0],
            [0, 0, 0, -1, 0, 1],
            [1, 0, 0, 0, -1, 0],
        ]
    )
    act6 = group_action(6, [(3, 4, 5, 0, 1, 2)], "Z2")
    verdict = globally_foldable(six, act6)
    assert verdict.status == "not_foldable"
    # replay the witness: it must land on a non-admissible matrix
    cur = six
    for idx in verdict.witness:
        for v in act6.orbits[idx]:
            cur = mutate(cur, v)
    assert not g_admissible(cur, act6).admissible
    _line("global foldability (all triples + 6-cycle witness)", True)


# -- criterion 6: property suites ------------------------------------------------


def test_property_mutation_involution():
    rng = random.Random(61)
    for _ in range(1000):
        m = random_skew_symmetrizable(rng, rng.randint(2, 7))
        k = rng.randrange(m.n)
        assert mutate(mutate(m, k), k) == m
    _line("property: mutation involution x1000", True)


def test_property_symmetrizer_preserved():
    rng = random.Random(62)
    for _ in range(1000):
        m = random_skew_symmetrizable(rng, rng.randint(2, 7))
        out = mutate(m, rng.randrange(m.n))
        assert out.d == m.d
        n = m.n
        assert all(
            out.d[i] * out.b[i][j] == -out.d[j] * out.b[j][i]
            for i in range(n)
            for j in range(n)
        )
    _line("property: symmetrizer preserved x1000", True)


def test_property_three_step_equals_matrix_mutation():
    rng = random.Random(63)
    for _ in range(1000):
        m = random_skew_symmetric(rng, rng.randint(2, 6))
        k = rng.randrange(m.n)
        assert mutate_quiver_3step(m, k) == mutate(m, k)
    _line("property: 3-step quiver mutation x1000", True)


def test_property_transpose_commutes():
    rng = random.Random(64)
    for _ in range(1000):
        m = random_skew_symmetrizable(rng, rng.randint(2, 7))
        k = rng.randrange(m.n)
        assert mutate(transpose(m), k) == transpose(mutate(m, k))
    _line("property: transpose commutation x1000", True)


def test_property_fold_commuting_square_on_sweep_states():
    checked = 0
    for x, g, y in SWEEP_TRIPLES:
        action = standard_action(x, g, y)
        single = len(action.generators) == 1
        for member in enumerate_class(diagram(x)).members:
            rep = member.representative
            if single:
                found = [mm for mm, _ in invariant_orbit_reps(rep, action)]
            else:
                from affold.folding import invariant_labelings

                found = invariant_labelings(
                    rep, action, automorphism_group(rep)
                )
            for mm in found:
                for orbit in action.orbits:
                    assert fold_commutes(mm, action, orbit)
                    checked += 1
    _line("property: fold/mutate commuting square", True, f"{checked} squares")


def test_property_facet_check_on_swept_diagrams():
    t0 = time.time()
    for name in SWEPT_DIAGRAMS:
        assert facet_check(diagram(name)), name
    _line(
        "property: facet lemma on swept diagrams",
        True,
        f"{len(SWEPT_DIAGRAMS)} diagrams in {time.time() - t0:.0f}s",
    )


def test_property_no_reduction_to_two_kroneckers():
    two_a1 = make_exchange_matrix(
        [[0, 2, 0, 0], [-2, 0, 0, 0], [0, 0, 0, 2], [0, 0, -2, 0]]
    )
    for name in SWEPT_DIAGRAMS:
        assert reduces_to(diagram(name), two_a1) is None, name
    _line("property: no reduction to 2x Kronecker", True)


# -- criterion 7: seed level ------------------------------------------------------


def test_seed_level_positivity_and_pentagon():
    t0 = time.time()
    kronecker = initial_seed(make_exchange_matrix([[0, 2], [-2, 0]]))
    report = positivity_audit(kronecker, 6)
    assert report["violations"] == []

    a2 = initial_seed(make_exchange_matrix([[0, 1], [-1, 0]]))
    report = positivity_audit(a2, 10)
    assert report["violations"] == []
    assert report["variables"] == 5  # the classical five cluster variables

    # pentagon periodicity reproduced exactly
    from affold.seeds import mutate_seed

    seeds = [a2]
    for i in range(10):
        seeds.append(mutate_seed(seeds[-1], i % 2))
    assert tuple(map(str, seeds[5].cluster)) == ("x2", "x1")
    assert seeds[10].key() == seeds[0].key()
    _line("seed positivity + pentagon", True, f"{time.time() - t0:.1f}s")


def test_seed_level_folded_patterns():
    t0 = time.time()
    rep = verify_folded_pattern("A~{2,2}", "Z2", "A~1", depth=4)
    assert rep.ok, rep.violations
    for g, y in [("Z2xZ2", "A2(2)"), ("Z3", "D4(3)")]:
        rep = verify_folded_pattern("D~4", g, y, depth=3)
        assert rep.ok, rep.violations
    elapsed = time.time() - t0
    _line("seed folded patterns (depth 4 / depth 3)", True, f"{elapsed:.1f}s")
    assert elapsed < 600
