import numpy as np

from ..random_component import RandomComponent
from .graph import make_graph
from .poset import Poset, transitive_closure


class RandomPosetGenerator(RandomComponent):
    """
    Random posets for the cross-check corpora.

    A poset is drawn by sampling a random relation on the pairs ``i < j`` of a random linear order with a random
    density, taking its transitive closure and shuffling the point indices.
    """

    def __init__(self, max_points=8, min_points=1, density_range=(0.1, 0.7), seed=None):
        """
        Args:
            max_points(int): Largest number of points of a drawn poset.
            min_points(int): Smallest number of points of a drawn poset.
            density_range(tuple(float, float)): Range of the probability of a declared relation between two points.
            seed(None/int/np.random.SeedSequence): Seed of the generator.
        """
        assert 0 <= min_points <= max_points, 'Invalid range of poset sizes.'
        super().__init__(seed)
        self._max_points = max_points
        self._min_points = min_points
        self._density_range = density_range

    def sample(self, n=None):
        """Draws a single poset with ``n`` points (default: a random size in the configured range)."""
        rng = self.random_generator
        if n is None:
            n = int(rng.integers(self._min_points, self._max_points + 1))
        density = rng.uniform(*self._density_range)
        relation = np.triu(rng.random((n, n)) < density, k=1)
        shuffle = rng.permutation(n)
        relation = relation[np.ix_(shuffle, shuffle)]
        return Poset(range(n), transitive_closure(relation), validate=False)

    def corpus(self, count):
        """A reproducible list of ``count`` posets. Every call starts from a freshly spawned generator."""
        self.next_generator()
        return [self.sample() for _ in range(count)]


class RandomGraphGenerator(RandomComponent):
    """Random simple graphs in the G(n, p) model with random ``n`` and ``p``."""

    def __init__(self, max_vertices=7, min_vertices=1, density_range=(0.2, 0.8), seed=None):
        assert 0 <= min_vertices <= max_vertices, 'Invalid range of graph sizes.'
        super().__init__(seed)
        self._max_vertices = max_vertices
        self._min_vertices = min_vertices
        self._density_range = density_range

    def sample(self, n=None):
        rng = self.random_generator
        if n is None:
            n = int(rng.integers(self._min_vertices, self._max_vertices + 1))
        density = rng.uniform(*self._density_range)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
        return make_graph(n, edges)

    def corpus(self, count):
        self.next_generator()
        return [self.sample() for _ in range(count)]
