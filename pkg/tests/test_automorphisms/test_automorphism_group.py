import math

import numpy as np
import pytest

import poset_realizer.posets as posets
from poset_realizer.automorphisms import automorphism_group, brute_force_automorphism_count
from poset_realizer.automorphisms import brute_force_automorphisms, enumerate_elements, is_orbit_discrete
from poset_realizer.constructions import crown, main_theorem_poset, subdivided_crown
from poset_realizer.core import CapExceededError, SearchTimeout, UnknownPointError

from ..conf import corpus_seed, poset_corpus_size
from ..testing_utils import is_order_preserving


class TestAutomorphismGroup:

    @pytest.mark.parametrize(['poset', 'order'], [
        [posets.antichain(3), 6],
        [posets.chain(5), 1],
        [crown(3), 6],
        [crown(2), 4],
        [crown(1), 1],
        [posets.antichain(0), 1],
        [posets.antichain(1), 1],
        [posets.bounded(posets.antichain(4)), 24],
        [subdivided_crown(5).poset, 5],
    ])
    def test_orders(self, poset, order):
        assert automorphism_group(poset).order == order

    def test_generators_are_automorphisms(self):
        poset = crown(5)
        group = automorphism_group(poset)
        assert group.order == 10
        assert all(is_order_preserving(poset, g) for g in group.generators)
        assert group.generators == tuple(sorted(group.generators))

    def test_base_and_orbit_sizes(self):
        group = automorphism_group(crown(4))
        assert len(group.base) == len(group.orbit_sizes)
        assert int(np.prod(group.orbit_sizes)) == group.order == 8

    def test_fixing(self):
        poset = posets.antichain(4)
        assert automorphism_group(poset, fixing=[0]).order == 6
        assert automorphism_group(poset, fixing=[0, 1]).order == 2
        with pytest.raises(UnknownPointError):
            automorphism_group(poset, fixing=['missing'])

    def test_top_point_stabilizer_of_main_construction_is_trivial(self):
        realization = main_theorem_poset('C2^3')
        top = (realization.group.element_name(0), 3)
        assert automorphism_group(realization.poset, fixing=[top]).order == 1

    def test_point_cap(self):
        with pytest.raises(CapExceededError):
            automorphism_group(posets.antichain(5), point_cap=4)

    def test_environment_point_cap(self, monkeypatch):
        monkeypatch.setenv('POSET_REALIZER_CAP', '3')
        with pytest.raises(CapExceededError):
            automorphism_group(posets.chain(4))

    def test_timeout(self):
        with pytest.raises(SearchTimeout):
            automorphism_group(posets.antichain(40), timeout=1e-9)

    def test_workers_do_not_change_the_result(self):
        poset = main_theorem_poset('C2^3').poset
        serial = automorphism_group(poset, workers=1)
        parallel = automorphism_group(poset, workers=2)
        assert serial.to_dict() == parallel.to_dict()
        assert serial.base == parallel.base


class TestOracleEquivalence:

    @pytest.fixture(scope='class')
    def corpus(self):
        return posets.RandomPosetGenerator(max_points=8, seed=corpus_seed).corpus(poset_corpus_size)

    def test_orders_match_brute_force(self, corpus):
        for poset in corpus:
            assert automorphism_group(poset).order == brute_force_automorphism_count(poset)

    def test_elements_match_brute_force(self, corpus):
        for poset in corpus[:100]:
            group = automorphism_group(poset)
            assert enumerate_elements(group.generators, len(poset)) == list(brute_force_automorphisms(poset))

    def test_heights_and_orbits(self, corpus):
        for poset in corpus:
            group = automorphism_group(poset)
            assert is_orbit_discrete(poset, group)
            for g in group.generators:
                assert np.array_equal(poset.heights[list(g)], poset.heights)


class TestBruteForce:

    def test_antichain(self):
        assert brute_force_automorphism_count(posets.antichain(4)) == 24

    def test_order(self):
        assert list(brute_force_automorphisms(posets.antichain(2))) == [(0, 1), (1, 0)]

    def test_cap(self):
        with pytest.raises(CapExceededError):
            list(brute_force_automorphisms(posets.chain(11)))



def test_antichain_order_is_factorial():
    assert automorphism_group(posets.antichain(12)).order == math.factorial(12)
