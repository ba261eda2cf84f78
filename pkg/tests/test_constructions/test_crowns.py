import pytest

import poset_realizer as pr
import poset_realizer.posets as posets
from poset_realizer.automorphisms import are_isomorphic, automorphism_group
from poset_realizer.constructions import CyclicPrimePowerConstruction, abelian_join_poset, crown
from poset_realizer.constructions import cyclic_prime_power_poset, is_prime, realization_from_covers
from poset_realizer.constructions import subdivided_crown
from poset_realizer.core import ConstructionError
from poset_realizer.groups import cyclic

from ..conf import abelian_join_instances, cyclic_prime_power_instances


@pytest.mark.parametrize(['p', 'expected'], [[2, True], [3, True], [9, False], [1, False], [0, False], [97, True]])
def test_is_prime(p, expected):
    assert is_prime(p) == expected


class TestCrown:

    @pytest.mark.parametrize('n', [2, 3, 4, 6])
    def test_dihedral(self, n):
        realization = pr.CrownConstruction(n).build()
        assert len(realization) == 2 * n
        assert realization.group.order == 2 * n
        certificate = realization.certificate()
        assert certificate.verdict
        assert certificate.aut_order == 2 * n

    def test_two_point_crown_is_a_chain(self):
        realization = pr.CrownConstruction(1).build()
        assert are_isomorphic(realization.poset, posets.chain(2))
        assert realization.group.order == 1
        assert realization.certificate().verdict

    def test_complete_bipartite(self):
        poset = crown(2)
        assert poset.lt[:2, 2:].all()
        assert automorphism_group(poset).order == 4

    def test_invalid(self):
        with pytest.raises(ConstructionError):
            pr.CrownConstruction(0)


class TestSubdividedCrown:

    def test_one_point_base_is_a_chain(self):
        realization = subdivided_crown(1)
        assert are_isomorphic(realization.poset, posets.chain(3))
        assert automorphism_group(realization.poset).order == 1

    @pytest.mark.parametrize('n', [2, 3, 5, 12])
    def test_cyclic(self, n):
        realization = subdivided_crown(n)
        assert len(realization) == 3 * n
        certificate = realization.certificate(require_free=True)
        assert certificate.verdict
        assert certificate.aut_order == n
        assert certificate.orbit_count == 3

    def test_invalid(self):
        with pytest.raises(ConstructionError):
            subdivided_crown(-1)


class TestCyclicPrimePower:

    @pytest.mark.parametrize(['p', 'k'], list(cyclic_prime_power_instances))
    def test_instances(self, p, k):
        points, order = cyclic_prime_power_instances[(p, k)]
        realization = cyclic_prime_power_poset(p, k)
        assert len(realization) == points
        assert realization.group.order == order
        certificate = realization.certificate()
        assert certificate.verdict
        assert certificate.aut_order == order
        assert not certificate.params['unverified']

    @pytest.mark.parametrize(['p', 'k', 'regime', 'modulus'], [
        [2, 2, 'subdivided-crown', 4],
        [3, 1, 'subdivided-crown', 3],
        [5, 1, 'subdivided-crown', 5],
        [7, 2, 'antichain', 7],
    ])
    def test_regimes(self, p, k, regime, modulus):
        params = CyclicPrimePowerConstruction(p, k).params()
        assert params['regime'] == regime
        assert params['modulus'] == modulus

    def test_unverified_regime(self):
        construction = CyclicPrimePowerConstruction(7, 1, unverified=True)
        assert construction.params()['unverified']
        assert construction.params()['regime'] == 'subdivided-crown'
        assert construction.expected_size == 35
        assert len(construction.build()) == 35

    def test_unverified_flag_without_effect(self):
        assert not CyclicPrimePowerConstruction(3, 1, unverified=True).params()['unverified']

    @pytest.mark.parametrize(['p', 'k'], [[2, 1], [4, 1], [6, 2], [1, 3], [3, 0]])
    def test_invalid(self, p, k):
        with pytest.raises(ConstructionError):
            CyclicPrimePowerConstruction(p, k)


class TestAbelianJoin:

    @pytest.mark.parametrize('parts', list(abelian_join_instances))
    def test_instances(self, parts):
        points, order = abelian_join_instances[parts]
        realization = abelian_join_poset(parts)
        assert len(realization) == points
        certificate = realization.certificate()
        assert certificate.verdict
        assert certificate.aut_order == order

    @pytest.mark.parametrize('parts', [(2, 3), (3, 2), (4, 5), (2, 2, 2), (6, 7), (3, 3, 3, 3)])
    def test_order_is_multiplicative(self, parts):
        realization = abelian_join_poset(parts)
        product = 1
        for n in parts:
            product *= n
        assert automorphism_group(realization.poset).order == product

    def test_group_name(self):
        assert abelian_join_poset((2, 4)).group.name == 'C2xC4'

    @pytest.mark.parametrize('parts', [(), (3, 0)])
    def test_invalid(self, parts):
        with pytest.raises(ConstructionError):
            abelian_join_poset(parts)


def test_declared_covers_have_to_be_covers():
    with pytest.raises(ConstructionError):
        realization_from_covers(
            list(range(3)), [(0, 1), (1, 2), (0, 2)], cyclic(1), [[0, 1, 2]], 'test', {}
        )


@pytest.mark.parametrize(['tag', 'params', 'points'], [
    ['crown', dict(n=4), 8],
    ['subdivided-crown', dict(n=4), 12],
    ['cyclic-pk', dict(p=3, k=2), 27],
    ['abelian-join', dict(parts=[2, 3]), 15],
])
def test_registry(tag, params, points):
    assert len(pr.make_module(pr.Construction, tag, **params).build()) == points
