import pytest

import poset_realizer.posets as posets
from poset_realizer.automorphisms import automorphism_group

from ..conf import corpus_seed, graph_corpus_size
from ..testing_utils import graph_automorphism_count


class TestMakeGraph:

    def test_edges_are_normalized(self):
        graph = posets.make_graph(4, [(2, 0), (3, 1)])
        assert posets.graph_edges(graph) == [(0, 2), (1, 3)]

    @pytest.mark.parametrize('edges', [[(0, 0)], [(0, 1), (1, 0)], [(0, 4)], [(-1, 0)]])
    def test_invalid_edges(self, edges):
        with pytest.raises(ValueError):
            posets.make_graph(4, edges)


class TestFacePoset:

    def test_single_edge(self):
        poset = posets.face_poset(posets.make_graph(2, [(0, 1)]))
        assert len(poset) == 3
        assert poset.maximal_points() == [2]
        assert poset.lower_covers[2] == (0, 1)

    def test_triangle(self):
        poset = posets.face_poset(posets.make_graph(3, [(0, 1), (1, 2), (0, 2)]))
        assert len(poset) == 6
        assert all(len(poset.lower_covers[e]) == 2 for e in range(3, 6))
        assert all(len(poset.upper_covers[v]) == 2 for v in range(3))
        assert poset.points[3:] == (('0-1', 1), ('0-2', 1), ('1-2', 1))

    def test_edgeless(self):
        poset = posets.face_poset(posets.make_graph(3, []))
        assert posets.is_antichain(poset, range(3))

    def test_bounded_triangle_is_lattice(self):
        lattice = posets.bounded(posets.face_poset(posets.make_graph(3, [(0, 1), (1, 2), (0, 2)])))
        assert len(lattice) == 8
        assert posets.is_lattice(lattice)


class TestFacePosetFunctoriality:

    @pytest.fixture(scope='class')
    def graphs(self):
        return posets.RandomGraphGenerator(max_vertices=7, seed=corpus_seed).corpus(graph_corpus_size)

    def test_sizes(self, graphs):
        for graph in graphs:
            poset = posets.face_poset(graph)
            assert len(poset) == graph.number_of_nodes() + graph.number_of_edges()
            assert int(poset.heights.max(initial=0)) <= 1

    def test_automorphism_orders(self, graphs):
        for graph in graphs:
            assert automorphism_group(posets.face_poset(graph)).order == graph_automorphism_count(graph)
