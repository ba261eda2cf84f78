import numpy as np
import pytest

import poset_realizer as pr


class TestRandomComponent:

    @pytest.fixture
    def random_component(self):
        return pr.RandomComponent()

    def test_seed(self, random_component):
        """A passed SeedSequence is kept as it is."""
        seed_sequence = np.random.SeedSequence()
        random_component.seed(seed_sequence)
        assert seed_sequence == random_component.seed_sequence

    def test_integer_seed(self, random_component):
        entropy = random_component.seed(17)
        assert entropy == [17]
        assert random_component.seed_sequence.entropy == 17

    def test_default_seed(self, random_component):
        random_component.seed()
        assert isinstance(random_component.seed_sequence, np.random.SeedSequence)
        assert isinstance(random_component.random_generator, np.random.Generator)

    def test_reseed(self, random_component):
        random_component.seed()
        initial_seed = random_component.seed_sequence
        random_component.seed()
        assert random_component.seed_sequence != initial_seed

    def test_next_generator(self, random_component):
        """Every corpus starts from a defined state, no matter how many numbers the previous corpus drew."""
        random_component.seed(np.random.SeedSequence(123))
        first_corpus = random_component.random_generator.random(42)
        random_component.next_generator()
        second_corpus = random_component.random_generator.random(42)

        random_component.seed(np.random.SeedSequence(123))
        assert np.all(first_corpus[:30] == random_component.random_generator.random(30))
        random_component.next_generator()
        assert np.all(second_corpus == random_component.random_generator.random(64)[:42])


class TestRandomGenerators:

    def test_poset_corpus_is_reproducible(self):
        first = pr.RandomPosetGenerator(max_points=8, seed=5).corpus(20)
        second = pr.RandomPosetGenerator(max_points=8, seed=5).corpus(20)
        assert first == second

    def test_poset_corpus_sizes(self):
        corpus = pr.RandomPosetGenerator(max_points=6, min_points=2, seed=1).corpus(50)
        assert all(2 <= len(poset) <= 6 for poset in corpus)

    def test_consecutive_corpora_differ(self):
        generator = pr.RandomPosetGenerator(max_points=8, seed=3)
        assert generator.corpus(20) != generator.corpus(20)

    def test_graph_corpus(self):
        corpus = pr.RandomGraphGenerator(max_vertices=5, seed=2).corpus(30)
        assert all(1 <= graph.number_of_nodes() <= 5 for graph in corpus)
        assert all(u != v for graph in corpus for u, v in graph.edges())
