"""
Unit tests for allowed graphs and their compositions.
"""
import random

import pytest
from hypothesis import given, settings, strategies as st

from src.algebra.graphcalc import (
    GAMMA_0,
    GAMMA_1,
    block_permutation,
    breadth_first_order,
    check_graph_laws,
    circle_graph,
    components,
    compose_B,
    compose_D,
    compose_permutations,
    format_graph,
    incidence_graph,
    identity_permutation,
    make_graph,
    parse_graph,
    permute,
    random_graph,
    rooted_children,
    validate,
)
from src.utils.errors import IndexOutOfRange, InvalidArgument, ParseError


class TestValidate:
    """Tests for the allowed-graph rules."""

    def test_single_circle_is_allowed(self):
        """Test the one-circle graph validates."""
        assert validate(GAMMA_0).ok

    def test_forbidden_star(self):
        """Test one circle with two chords is rejected."""
        report = validate(make_graph(1, [(1,), (1,)]))
        assert not report.ok
        assert any(v.startswith("forbidden_star") or v.startswith("duplicate_chord") for v in report.violations)

    def test_double_chord_breaks_forest(self):
        """Test two chords between the same circles are rejected."""
        report = validate(make_graph(2, [(1, 2), (1, 2)]))
        assert not report.ok
        assert any(v.startswith("forest") for v in report.violations)

    def test_index_out_of_range(self):
        """Test a chord naming a missing circle."""
        report = validate(make_graph(2, [(1, 3)]))
        assert any(v.startswith("index_range") for v in report.violations)

    def test_random_graphs_are_allowed(self):
        """Test random_graph only produces allowed graphs."""
        rng = random.Random(11)
        for _ in range(100):
            assert validate(random_graph(rng, 5)).ok

    def test_chord_cycle_breaks_forest(self):
        """Test three chords closing a triangle of circles are rejected."""
        report = validate(make_graph(3, [(1, 2), (2, 3), (1, 3)]))
        assert report.violations == ["forest: circles and chords must form a forest"]

    def test_triple_chord_is_a_forest(self):
        """Test a chord on three circles is one star in the incidence graph."""
        assert validate(make_graph(3, [(1, 2, 3)])).ok
        incidence = incidence_graph(make_graph(3, [(1, 2, 3)]))
        assert incidence.number_of_nodes() == 4
        assert incidence.degree(("chord", 0)) == 3


class TestCompositions:
    """Tests for B, D and relabeling."""

    def test_B_of_two_circles(self):
        """Test B(Γ₀, Γ₀, 1, 1) is Γ₁."""
        assert compose_B(GAMMA_0, GAMMA_0, 1, 1) == GAMMA_1

    def test_B_examples(self):
        """Test B with shifted indices."""
        assert compose_B(GAMMA_1, GAMMA_0, 2, 1) == make_graph(3, [(1, 2), (2, 3)])
        assert compose_B(GAMMA_0, GAMMA_1, 1, 2) == make_graph(3, [(2, 3), (1, 3)])

    def test_B_index_out_of_range(self):
        """Test B rejects missing circle indices."""
        with pytest.raises(IndexOutOfRange):
            compose_B(GAMMA_0, GAMMA_0, 2, 1)

    def test_D_examples(self):
        """Test disjoint unions."""
        assert compose_D(GAMMA_0, GAMMA_0) == make_graph(2)
        assert compose_D(GAMMA_1, GAMMA_0) == make_graph(3, [(1, 2)])
        assert compose_D(GAMMA_0, GAMMA_1) == make_graph(3, [(2, 3)])

    def test_permute(self):
        """Test relabeling fixes Γ₁ and ignores wrong sizes."""
        assert permute((2, 1), GAMMA_1) == GAMMA_1
        assert permute((1, 2, 3, 4, 5), GAMMA_1) == GAMMA_1
        assert permute((2, 3, 1), make_graph(3, [(1, 2)])) == make_graph(3, [(2, 3)])

    def test_permute_rejects_non_permutations(self):
        """Test invalid permutations raise InvalidArgument."""
        with pytest.raises(InvalidArgument):
            permute((1, 1), GAMMA_1)

    def test_permutation_helpers(self):
        """Test identity, block and composed permutations."""
        assert identity_permutation(3) == (1, 2, 3)
        assert block_permutation(1, 2) == (2, 3, 1)
        g = make_graph(3, [(1, 2)])
        alpha, beta = (2, 3, 1), (3, 1, 2)
        assert permute(compose_permutations(beta, alpha), g) == permute(beta, permute(alpha, g))

    def test_components(self):
        """Test connected components ordered by least index."""
        assert components(make_graph(4, [(2, 4)])) == [[1], [2, 4], [3]]

    def test_components_through_triple_chords(self):
        """Test a multi-index chord joins all its circles."""
        assert components(make_graph(5, [(1, 3, 5)])) == [[1, 3, 5], [2], [4]]
        assert components(make_graph(0)) == []

    def test_rooted_children(self):
        """Test breadth-first children from the first circle of a component."""
        chain = make_graph(4, [(1, 2), (2, 3), (2, 4)])
        assert rooted_children(chain, [1, 2, 3, 4]) == {1: [2], 2: [3, 4], 3: [], 4: []}
        assert rooted_children(make_graph(3, [(2, 3)]), [2, 3]) == {2: [3], 3: []}
        assert breadth_first_order(chain, [1, 2, 3, 4]) == [1, 2, 3, 4]
        assert breadth_first_order(make_graph(3, [(1, 3), (2, 3)]), [1, 2, 3]) == [1, 3, 2]
        assert set(circle_graph(chain).edges()) == {(1, 2), (2, 3), (2, 4)}


class TestGraphText:
    """Tests for the graph text encoding."""

    def test_format(self):
        """Test the canonical encoding."""
        assert format_graph(GAMMA_1) == "nu=2; chords={1,2}"
        assert format_graph(GAMMA_0) == "nu=1; chords="

    def test_parse(self):
        """Test parsing ignores whitespace."""
        assert parse_graph("nu=3; chords={2,3}, {1,2}") == make_graph(3, [(1, 2), (2, 3)])
        assert parse_graph("nu = 1") == GAMMA_0

    def test_parse_error(self):
        """Test malformed encodings raise ParseError."""
        with pytest.raises(ParseError):
            parse_graph("circles=2")

    @given(st.integers(min_value=0, max_value=10_000))
    def test_format_parse_round_trip(self, seed):
        """Test random graphs survive formatting."""
        g = random_graph(random.Random(seed), 5)
        assert parse_graph(format_graph(g)) == g


class TestGraphLaws:
    """Tests for the composition laws on random triples."""

    def test_laws_hold_on_random_triples(self):
        """Test every law on 100 seeded triples with at most four circles."""
        tally = check_graph_laws(random.Random(0), 100, max_nu=4)
        assert set(tally) == {
            "B_associativity",
            "B_symmetry",
            "BD_interchange",
            "D_associativity",
            "D_symmetry",
            "BD_shifted_interchange",
        }
        for law, entry in tally.items():
            assert entry["failed"] == 0, law
            assert entry["passed"] > 0, law

    @given(st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=30, deadline=None)
    def test_B_preserves_allowed_graphs(self, seed):
        """Test B of allowed graphs is allowed."""
        rng = random.Random(seed)
        g1, g2 = random_graph(rng, 3), random_graph(rng, 3)
        assert validate(compose_B(g1, g2, g1.nu, 1)).ok
