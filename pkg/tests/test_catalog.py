"""Dynkin catalog: grammar, diagrams, actions, recognition, class counts."""

from __future__ import annotations

import pytest

from affold import (
    apq_class_count,
    are_isomorphic,
    cartan_counterpart,
    diagram,
    enumerate_class,
    g_admissible,
    is_acyclic,
    is_automorphism,
    make_exchange_matrix,
    parse_type,
    recognize_type,
    restrict,
    standard_action,
    table1_triples,
    transpose,
)
from affold.catalog import _cartan_key, actions_for, cartan_matrix, layout, vertex_count
from affold.errors import (
    Disconnected,
    FormatError,
    InvalidOrientation,
    InvalidRank,
    NonIntegerResult,
    UnknownTriple,
)

ALL_TYPE_STRINGS = [
    "A1", "A2", "A5", "B2", "B4", "C3", "D4", "D6", "E6", "E7", "E8",
    "F4", "G2",
    "A~1", "A~{1,2}", "A~{2,2}", "A~{3,3}", "A~{1,4}",
    "B~3", "B~4", "C~2", "C~4", "D~4", "D~5", "D~6", "D~8",
    "E~6", "E~7", "E~8", "F~4", "G~2",
    "A2(2)", "A4(2)", "A6(2)", "A5(2)", "A7(2)",
    "D3(2)", "D5(2)", "E6(2)", "D4(3)",
]


class TestTypeGrammar:
    @pytest.mark.parametrize("text", ALL_TYPE_STRINGS)
    def test_roundtrip(self, text):
        assert str(parse_type(text)) == text

    def test_pq_unordered(self):
        assert str(parse_type("A~{3,2}")) == "A~{2,3}"

    def test_rejects_bare_affine_a(self):
        with pytest.raises(FormatError):
            parse_type("A~4")

    def test_rejects_unknown(self):
        with pytest.raises(FormatError):
            parse_type("H3")
        with pytest.raises(InvalidRank):
            parse_type("E9")
        with pytest.raises(InvalidRank):
            parse_type("D~3")


class TestDiagram:
    def test_g2_affine_cartan_is_the_printed_matrix(self):
        assert cartan_counterpart(diagram("G~2")) == (
            (2, -1, 0), (-1, 2, -3), (0, -1, 2),
        )

    def test_kronecker(self):
        assert diagram("A~1").rows() == [[0, 2], [-2, 0]]

    def test_a2_path(self):
        assert diagram("A2").rows() == [[0, 1], [-1, 0]]

    @pytest.mark.parametrize("text", ALL_TYPE_STRINGS)
    def test_cartan_counterpart_matches_catalog_cartan(self, text):
        t = parse_type(text)
        m = diagram(t)
        assert _cartan_key(cartan_counterpart(m)) == _cartan_key(cartan_matrix(t))

    @pytest.mark.parametrize("text", ALL_TYPE_STRINGS)
    def test_default_orientation_acyclic(self, text):
        assert is_acyclic(diagram(text))

    @pytest.mark.parametrize("text", ALL_TYPE_STRINGS)
    def test_layout_covers_vertices(self, text):
        t = parse_type(text)
        assert len(layout(t)) == vertex_count(t)

    def test_apq_orientation_counts(self):
        from affold.catalog import _apq_cycle

        m = diagram("A~{2,3}")
        cyc = _apq_cycle(2, 3)
        forward = sum(
            1 for v, w in zip(cyc, cyc[1:] + [cyc[0]]) if m.b[v][w] > 0
        )
        assert {forward, 5 - forward} == {2, 3}
        assert is_acyclic(m)

    def test_explicit_orientation(self):
        m = diagram("A2", orientation=[(1, 0)])
        assert m.rows() == [[0, -1], [1, 0]]
        with pytest.raises(InvalidOrientation):
            diagram("A2", orientation=[(0, 1), (1, 0)])
        with pytest.raises(InvalidOrientation):
            diagram("A3", orientation=[(0, 1)])


class TestStandardActions:
    @pytest.mark.parametrize("triple", table1_triples(max_vertices=9))
    def test_diagram_invariant_and_admissible(self, triple):
        x, g, y = triple
        action = standard_action(x, g, y)
        m = diagram(x)
        assert all(is_automorphism(m, gen) for gen in action.generators)
        assert g_admissible(m, action).admissible

    def test_e6_z3_orbits(self):
        action = standard_action("E~6", "Z3", "G~2")
        assert [tuple(v + 1 for v in o) for o in action.orbits] == [
            (1,), (2, 4, 6), (3, 5, 7),
        ]

    def test_a22_generator(self):
        action = standard_action("A~{2,2}", "Z2", "A~1")
        tau = action.generators[0]
        assert tau == (3, 2, 1, 0)  # 1<->4, 2<->3

    def test_d4_klein_orbits(self):
        action = standard_action("D~4", "Z2xZ2", "A2(2)")
        assert len(action.generators) == 2
        assert [tuple(v + 1 for v in o) for o in action.orbits] == [
            (1,), (2, 3, 4, 5),
        ]

    def test_unknown_triple(self):
        with pytest.raises(UnknownTriple):
            standard_action("E~8", "Z2", "F~4")

    def test_fold_lands_on_target_cartan(self):
        from affold import fold

        for x, g, y in table1_triples(max_vertices=9):
            action = standard_action(x, g, y)
            folded = fold(diagram(x), action)
            assert _cartan_key(cartan_counterpart(folded.matrix)) == _cartan_key(
                cartan_matrix(parse_type(y))
            ), (x, g, y)

    def test_actions_for_listing(self):
        tags = {(g, y) for g, y, _ in actions_for("E~6")}
        assert tags == {("Z3", "G~2"), ("Z2", "E6(2)")}
        assert len(actions_for("D~6")) == 4


class TestTransposePairs:
    PAIRS = [
        ("B~3", "A5(2)"),
        ("B~4", "A7(2)"),
        ("C~2", "D3(2)"),
        ("C~4", "D5(2)"),
        ("F~4", "E6(2)"),
        ("G~2", "D4(3)"),
        ("A4(2)", "A4(2)"),
        ("A6(2)", "A6(2)"),
        ("D~5", "D~5"),
        ("E~6", "E~6"),
    ]

    @pytest.mark.parametrize("x,y", PAIRS)
    def test_transpose_pairing(self, x, y):
        m = transpose(diagram(x))
        assert _cartan_key(cartan_counterpart(m)) == _cartan_key(
            cartan_matrix(parse_type(y))
        )


class TestRecognize:
    def test_directed_cycle_is_type_d(self):
        rows = [[0] * 4 for _ in range(4)]
        for i in range(4):
            rows[i][(i + 1) % 4] = 1
            rows[(i + 1) % 4][i] = -1
        assert str(recognize_type(make_exchange_matrix(rows))) == "D4"

    @pytest.mark.parametrize(
        "text",
        ["A3", "D4", "E6", "B3", "G2", "A~1", "A~{2,2}", "A~{1,3}",
         "D~4", "D~5", "E~6", "E~7", "F~4", "G~2", "C~2", "A2(2)",
         "A5(2)", "D3(2)", "E6(2)", "D4(3)"],
    )
    def test_catalog_fixed_point(self, text):
        assert str(recognize_type(diagram(text))) == text

    def test_mutated_diagram_recognized(self):
        from affold import mutate

        m = mutate(mutate(diagram("E~6"), 0), 3)
        assert str(recognize_type(m)) == "E~6"

    def test_disconnected_rejected(self):
        m = make_exchange_matrix([[0, 0], [0, 0]])
        with pytest.raises(Disconnected):
            recognize_type(m)

    def test_mutation_infinite_input_is_unknown(self, b_example_4x4):
        # the 4x4 worked example is mutation-infinite: no catalog name
        assert recognize_type(b_example_4x4, budget=2000) is None

    def test_d_restriction_of_big_affine_d(self):
        # central-path restriction of the 9-vertex affine D diagram
        sub = restrict(diagram("D~8"), [3, 4, 5])
        assert str(recognize_type(sub)) == "A3"


class TestApqCount:
    def test_hand_value_1_2(self):
        assert apq_class_count(1, 2) == 2

    def test_equal_pair_values(self):
        assert apq_class_count(1, 1) == 1
        assert apq_class_count(2, 2) == 4

    def test_matches_bfs_small(self):
        for p, q in [(1, 2), (1, 3), (2, 2), (2, 3)]:
            m = diagram("A~{%d,%d}" % (p, q))
            assert len(enumerate_class(m)) == apq_class_count(p, q)

    def test_invalid(self):
        with pytest.raises(InvalidRank):
            apq_class_count(0, 3)


def test_restriction_of_affine_d_is_type_a():
    # dropping both forks of the affine D diagram leaves a path
    d8 = diagram("D~8")
    sub = restrict(d8, [0, 3, 4, 5, 6])
    t = recognize_type(sub)
    assert str(t) == "A5"
