"""
Tests for ribbon-graph surfaces and signed crossings.
"""
import random

import pytest
from pydantic import ValidationError

from src.algebra.fgroup import conjugacy_class, parse_word
from src.algebra.garlands import random_loops
from src.surfaces.factory import get_surface
from src.surfaces.ribbon import (
    RibbonSurface,
    a11_terms,
    boundary_components,
    genus,
    goldman_bracket,
    homological_pairing,
    linked_pairs,
    make_surface,
    pairing_matrix,
    self_check,
)
from src.utils.errors import CommonRoot, InvalidArgument, TrivialInput


def w(text):
    return parse_word(text)


@pytest.fixture
def torus():
    return get_surface("torus1")


@pytest.fixture
def pants():
    return get_surface("pants")


@pytest.fixture
def section13():
    return get_surface("section13")


class TestRibbonSurface:
    """Tests for surface construction and topology."""

    def test_make_surface_reads_rank(self):
        """Test the rank comes from the largest edge-end."""
        surface = make_surface([1, 2, -1, -2])
        assert surface.rank == 2
        assert surface.successor(-2) == 1

    def test_rejects_repeated_end(self):
        """Test an order listing an end twice is rejected."""
        with pytest.raises(InvalidArgument):
            make_surface([1, 1, -1, -2])

    def test_rejects_missing_end(self):
        """Test the model validator on a short order."""
        with pytest.raises(ValidationError):
            RibbonSurface(rank=2, vertex_order=(1, 2, -1))

    @pytest.mark.parametrize("order,boundaries,expected_genus", [
        ([1, 2, -1, -2], 1, 1),
        ([1, -1], 2, 0),
        ([1, -1, 2, -2], 3, 0),
        ([1, -2, 2, -1], 3, 0),
    ])
    def test_boundary_components(self, order, boundaries, expected_genus):
        """Test boundary counts and genus of small roses."""
        surface = make_surface(order)
        assert len(boundary_components(surface)) == boundaries
        assert genus(surface) == expected_genus
        assert self_check(surface)

    def test_boundary_letters_partition_ends(self, torus):
        """Test every edge-end appears on exactly one boundary cycle."""
        letters = [letter for cycle in boundary_components(torus) for letter in cycle]
        assert sorted(letters) == sorted(torus.vertex_order)


class TestLinkedPairs:
    """Tests for crossing detection."""

    def test_torus_generators_cross_once(self, torus):
        """Test a and b on the torus meet in one positive crossing."""
        terms = linked_pairs(torus, w("a"), w("b"))
        assert len(terms) == 1
        assert terms[0].geom_sign == 1
        assert (terms[0].u, terms[0].v) == (w("a"), w("b"))

    def test_torus_two_crossings(self, torus):
        """Test ab and aB cross twice, both negatively."""
        terms = linked_pairs(torus, w("ab"), w("aB"))
        assert [t.geom_sign for t in terms] == [-1, -1]

    def test_pants_generators_disjoint(self, pants):
        """Test the two cuffs of the pants do not meet."""
        assert linked_pairs(pants, w("a"), w("b")) == []

    def test_section13_crossings(self, section13):
        """Test aBB and aB on section13 give two crossings of opposite sign."""
        terms = linked_pairs(section13, w("aBB"), w("aB"))
        signs = {(t.p, t.q): t.geom_sign for t in terms}
        assert signs == {(0, 1): 1, (1, 0): -1}

    def test_visits_read_from_crossing(self, section13):
        """Test u and v are the words read from the crossing visits."""
        for term in linked_pairs(section13, w("aBB"), w("aB")):
            assert conjugacy_class(term.u) == conjugacy_class(w("aBB"))
            assert conjugacy_class(term.v) == conjugacy_class(w("aB"))

    def test_common_root_rejected(self, torus):
        """Test powers of one class are refused."""
        with pytest.raises(CommonRoot):
            linked_pairs(torus, w("ab"), w("abab"))
        with pytest.raises(CommonRoot):
            linked_pairs(torus, w("a"), w("A"))

    def test_trivial_loop_rejected(self, torus):
        """Test the identity is refused."""
        with pytest.raises(TrivialInput):
            linked_pairs(torus, w("aA"), w("b"))

    def test_conjugate_inputs_agree(self, torus):
        """Test only the conjugacy classes of the inputs matter."""
        plain = linked_pairs(torus, w("ab"), w("aB"))
        conjugated = linked_pairs(torus, w("Bbab"), w("baBB"))
        assert plain == conjugated


class TestHomology:
    """Tests for the homological pairing."""

    def test_torus_matrix(self, torus):
        """Test the generator pairing of the torus."""
        assert pairing_matrix(torus) == ((0, 1), (-1, 0))

    def test_known_values(self, torus, section13):
        """Test pairings of the worked examples."""
        assert homological_pairing(torus, w("a"), w("b")) == 1
        assert homological_pairing(torus, w("ab"), w("aB")) == -2
        assert homological_pairing(section13, w("aBB"), w("aB")) == 0

    @pytest.mark.parametrize("name", ["torus1", "pants", "section13"])
    def test_signed_count_is_homological(self, name):
        """Test the signed crossing count equals the homological pairing on 200 pairs."""
        surface = get_surface(name)
        rng = random.Random(11)
        for _ in range(200):
            w1, w2 = random_loops(rng, 2, surface.rank, 6)
            signed = sum(t.geom_sign for t in linked_pairs(surface, w1, w2))
            assert signed == homological_pairing(surface, w1, w2)

    def test_swapping_loops_negates(self, torus):
        """Test crossings of (w2, w1) are those of (w1, w2) with opposite sign."""
        rng = random.Random(12)
        for _ in range(100):
            w1, w2 = random_loops(rng, 2, 2, 6)
            forward = linked_pairs(torus, w1, w2)
            backward = linked_pairs(torus, w2, w1)
            assert len(forward) == len(backward)
            assert sum(t.geom_sign for t in forward) == -sum(t.geom_sign for t in backward)


class TestGoldman:
    """Tests for the Goldman bracket and the raw A_{1,1} terms."""

    def test_torus_generators(self, torus):
        """Test [a, b] is the class of ab."""
        assert goldman_bracket(torus, w("a"), w("b")) == {conjugacy_class(w("ab")): 1}

    def test_section13_vanishes(self, section13):
        """Test the two crossings of aBB and aB cancel."""
        assert goldman_bracket(section13, w("aBB"), w("aB")) == {}

    def test_antisymmetric(self, torus):
        """Test [w1, w2] = −[w2, w1] on random pairs."""
        rng = random.Random(13)
        for _ in range(100):
            w1, w2 = random_loops(rng, 2, 2, 6)
            forward = goldman_bracket(torus, w1, w2)
            backward = goldman_bracket(torus, w2, w1)
            assert forward == {cls: -coef for cls, coef in backward.items()}

    def test_a11_terms_negate_signs(self, section13):
        """Test each raw term carries minus the crossing sign."""
        terms = a11_terms(section13, w("aBB"), w("aB"))
        crossings = linked_pairs(section13, w("aBB"), w("aB"))
        assert [coef for coef, _, _ in terms] == [-t.geom_sign for t in crossings]
