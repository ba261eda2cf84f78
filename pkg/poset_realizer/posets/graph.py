import networkx as nx
import numpy as np

from .poset import Poset


def make_graph(n, edges):
    """
    Simple undirected graph on the vertices ``0..n-1``.

    Args:
        n(int): Number of vertices.
        edges(iterable(pair(int))): Unordered vertex pairs.

    Returns:
        networkx.Graph: The graph.

    Exceptions:
        ValueError: An edge is a loop, is repeated or references a vertex outside of ``0..n-1``.
    """
    assert n >= 0, 'The vertex count cannot be negative.'
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f'The edge ({u}, {v}) references a vertex outside of 0..{n - 1}.')
        if u == v:
            raise ValueError(f'The edge ({u}, {v}) is a loop.')
        if graph.has_edge(u, v):
            raise ValueError(f'The edge ({u}, {v}) is repeated.')
        graph.add_edge(u, v)
    return graph


def graph_edges(graph):
    """Sorted edge list with ``u < v`` in every pair."""
    return sorted(tuple(sorted((int(u), int(v)))) for u, v in graph.edges())


def face_poset(graph):
    """
    Face poset of a graph: the vertices and the edges, every edge above its two endpoints.

    Vertex ``v`` is labeled ``('v', 0)``, the edge ``{u, v}`` with ``u < v`` is labeled ``('u-v', 1)``. The vertices
    come first in increasing order, followed by the edges in sorted order.

    Args:
        graph(networkx.Graph): A simple graph on the vertices ``0..n-1``.

    Returns:
        Poset: The face poset of height at most 1.
    """
    n = graph.number_of_nodes()
    edges = graph_edges(graph)
    size = n + len(edges)
    lt = np.zeros((size, size), dtype=bool)
    for k, (u, v) in enumerate(edges):
        lt[u, n + k] = lt[v, n + k] = True
    labels = [(str(v), 0) for v in range(n)] + [(f'{u}-{v}', 1) for u, v in edges]
    return Poset(labels, lt, validate=False)
