import pytest

import poset_realizer.automorphisms.refinement as refinement
import poset_realizer.posets as posets
from poset_realizer.automorphisms import Clock, find_isomorphism, initial_colors, refine
from poset_realizer.constructions import crown
from poset_realizer.core import SearchTimeout


class TestColorings:

    def test_chain_is_discrete(self):
        colors = initial_colors([posets.chain(4)])[0]
        assert sorted(colors) == [0, 1, 2, 3]
        assert refinement.target_cell(colors) is None

    def test_crown_has_two_cells(self):
        colors = initial_colors([crown(3)])[0]
        assert colors == [0, 0, 0, 1, 1, 1]
        assert refinement.target_cell(colors) == 0

    def test_joint_coloring_detects_different_invariants(self):
        assert initial_colors([posets.chain(3), posets.antichain(3)]) is None

    def test_joint_coloring_is_canonical(self):
        first = posets.poset_from_covers('abc', [('a', 'b')])
        second = posets.poset_from_covers('abc', [('b', 'c')])
        left, right = initial_colors([first, second])
        assert sorted(left) == sorted(right)
        assert left[0] == right[1] and left[1] == right[2] and left[2] == right[0]

    def test_individualize(self):
        colors = refinement.individualize([0, 0, 1], 1)
        assert colors == [0, 1, 2]
        assert refine([posets.antichain(3)], [[0, 0, 0]]) == [[0, 0, 0]]

    def test_refinement_splits_by_neighbourhood(self):
        # the minimal point below the chain top is split from the isolated minimal point by its upper cover
        poset = posets.poset_from_covers('abcd', [('a', 'b'), ('c', 'd'), ('a', 'd')])
        colors = refine([poset], [[0, 1, 0, 1]])[0]
        assert colors[0] != colors[2]
        assert colors[1] != colors[3]

    def test_target_cell_prefers_smallest(self):
        assert refinement.target_cell([0, 0, 0, 1, 1, 2]) == 1
        assert refinement.target_cell([0, 1, 2]) is None
        assert refinement.target_cell([]) is None

    def test_discrete_order(self):
        assert refinement.discrete_order([2, 0, 1]) == [1, 2, 0]


class TestFindIsomorphism:

    def test_crown_rotation(self):
        poset = crown(3)
        colors = initial_colors([poset])[0]
        source = refinement.individualize(colors, 0)
        target = refinement.individualize(colors, 1)
        mapping = find_isomorphism(poset, poset, source, target)
        assert mapping[0] == 1
        assert poset.is_automorphism(mapping)

    def test_no_isomorphism(self):
        poset = posets.poset_from_covers('abc', [('a', 'b')])
        colors = initial_colors([poset])[0]
        # a and c are both minimal but only a has an upper cover
        assert colors[0] != colors[2]
        assert find_isomorphism(poset, poset, refinement.individualize(colors, 0),
                                refinement.individualize(colors, 1)) is None

    def test_sizes_differ(self):
        assert find_isomorphism(posets.chain(2), posets.chain(3), [0, 1], [0, 1, 2]) is None


class TestClock:

    def test_no_deadline(self):
        clock = Clock()
        for _ in range(100):
            clock.check()

    def test_expired_deadline(self):
        clock = Clock(deadline=0.0)
        with pytest.raises(SearchTimeout):
            for _ in range(16):
                clock.check()

    def test_timeout_sets_deadline(self):
        assert Clock(timeout=10).deadline is not None
