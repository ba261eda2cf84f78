import numpy as np
from networkx.algorithms.isomorphism import GraphMatcher

from ..core import Construction
from ..groups import permutation_group
from ..posets import bounded, face_poset, graph_edges, graph_from_dict, make_graph
from .realization import ConstructedRealization


def graph_automorphisms(graph):
    """All automorphisms of a simple graph on ``0..n-1`` as image tuples, sorted."""
    n = graph.number_of_nodes()
    matcher = GraphMatcher(graph, graph)
    return sorted(tuple(mapping[v] for v in range(n)) for mapping in matcher.isomorphisms_iter())


def graph_realizer_lattice(graph):
    """
    The face poset of a graph with a new minimum and a new maximum, a lattice with ``|V| + |E| + 2`` points.

    Its automorphism group is the automorphism group of the graph.
    """
    return bounded(face_poset(graph))


class GraphLatticeConstruction(Construction):
    """
    The bounded face poset of a graph with the action of the graph automorphisms.

    The group is the automorphism group of the graph materialized as a permutation group of the vertices. It acts on
    the vertices and edges of the face poset and fixes the added minimum and maximum.
    """

    method = 'graph-lattice'

    def __init__(self, graph=None):
        """
        Args:
            graph(networkx.Graph/dict): The graph or its Graph JSON object. Default: the triangle.
        """
        if graph is None:
            graph = make_graph(3, [(0, 1), (1, 2), (0, 2)])
        elif isinstance(graph, dict):
            graph = graph_from_dict(graph)
        self._graph = graph

    def params(self):
        return dict(vertices=self._graph.number_of_nodes(), edges=[list(e) for e in graph_edges(self._graph)])

    def build(self):
        graph = self._graph
        n = graph.number_of_nodes()
        edges = graph_edges(graph)
        edge_index = {edge: k for k, edge in enumerate(edges)}
        poset = graph_realizer_lattice(graph)
        group, elements = permutation_group(graph_automorphisms(graph), n, name='Aut(graph)')
        size = len(poset)
        action = np.empty((group.order, size), dtype=np.int64)
        for g, sigma in enumerate(elements.tolist()):
            action[g, 0], action[g, size - 1] = 0, size - 1
            action[g, 1:n + 1] = [1 + sigma[v] for v in range(n)]
            action[g, n + 1:size - 1] = [
                n + 1 + edge_index[tuple(sorted((sigma[u], sigma[v])))] for u, v in edges
            ]
        return ConstructedRealization(poset, group, action, self.method, self.params())
