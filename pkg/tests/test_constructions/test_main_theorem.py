import pytest

import poset_realizer as pr
from poset_realizer.automorphisms import automorphism_group
from poset_realizer.constructions import MainTheoremConstruction, adjacency_audit, main_theorem_poset
from poset_realizer.core import ConstructionError, GeneratingSequenceError
from poset_realizer.groups import GeneratingSequence, group_from_dict, group_from_spec

from ..conf import main_construction_instances


@pytest.fixture(params=main_construction_instances, ids=[instance[0] for instance in main_construction_instances])
def instance(request):
    descriptor, tokens, d = request.param
    group = group_from_spec(descriptor)
    return group, tokens, d, main_theorem_poset(group, tokens)


def test_size_and_levels(instance):
    group, _, _, realization = instance
    assert len(realization) == 4 * group.order
    levels = [label[1] for label in realization.poset.points]
    assert [levels.count(level) for level in range(4)] == [group.order] * 4
    assert realization.poset.heights.max() == 3


def test_certificate(instance):
    group, _, d, realization = instance
    certificate = realization.certificate(require_free=True)
    assert certificate.verdict
    assert certificate.free
    assert certificate.orbit_count == 4
    assert certificate.aut_order == group.order
    assert certificate.params['d'] == d


def test_adjacency_audit(instance):
    _, _, d, realization = instance
    audit = adjacency_audit(realization)
    assert audit['passed']
    assert ('identity_isolated' in audit) == (d % 2 == 0)


def test_default_generators():
    construction = MainTheoremConstruction('C2^3')
    assert construction.generators.d == 3
    assert construction.params()['generators'] == construction.generators.names()


def test_default_generators_of_a_cayley_table_group():
    group = group_from_dict(group_from_spec('C2^3').to_dict())
    assert group.standard_generators == ()
    construction = MainTheoremConstruction(group)
    assert construction.generators.d == 3
    assert construction.build().certificate(require_free=True).verdict


def test_registered():
    realization = pr.make_module(pr.Construction, 'main', group='C2^3').build()
    assert realization.method == 'main'
    assert len(realization) == 32


def test_sequence_of_another_group():
    other = group_from_spec('C2^4')
    with pytest.raises(GeneratingSequenceError):
        MainTheoremConstruction('C2^3', GeneratingSequence(other, ['e1', 'e2', 'e3', 'e4']))


@pytest.mark.parametrize('descriptor', ['C4', 'C1', 'C2xC2', 'S3'])
def test_short_sequences(descriptor):
    with pytest.raises(ConstructionError):
        main_theorem_poset(descriptor)


def test_redundant_sequence():
    # the product of all three generators is redundant
    with pytest.raises(GeneratingSequenceError):
        main_theorem_poset('C2^3', ['e1', 'e2', 'e3', 7])


def test_non_generating_sequence():
    with pytest.raises(GeneratingSequenceError):
        main_theorem_poset('C2^4', ['e1', 'e2', 'e3'])


def test_audit_of_other_methods():
    with pytest.raises(ConstructionError):
        adjacency_audit(pr.SubdividedCrownConstruction(3).build())


def test_top_points_are_a_regular_orbit():
    realization = main_theorem_poset('C2^3')
    group = automorphism_group(realization.poset)
    tops = {x for x in range(len(realization)) if realization.poset.heights[x] == 3}
    assert any(set(orbit) == tops for orbit in group.orbits)
