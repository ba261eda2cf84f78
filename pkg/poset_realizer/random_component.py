import numpy as np


class RandomComponent:
    """Base class of the seeded generators of random posets and graphs.

    A component keeps a SeedSequence and spawns a fresh numpy Generator from it for every corpus with
    ``next_generator()``. A corpus therefore only depends on the seed and on its position in the sequence of corpora,
    not on how many numbers the previous corpora consumed.

    All random numbers of a component are drawn from ``random_generator``.

    Example:

        >>> import poset_realizer as pr
        >>>
        >>> posets = pr.RandomPosetGenerator(max_points=8, seed=3)
        >>> corpus = posets.corpus(500)
    """

    @property
    def random_generator(self):
        """numpy.random.Generator: Source of all random numbers of the current corpus."""
        return self._random_generator

    @property
    def seed_sequence(self):
        """numpy.random.SeedSequence: Parent of the generators of all corpora."""
        return self._seed_sequence

    def __init__(self, seed=None):
        """
        Args:
            seed(None/int/np.random.SeedSequence): Initial seed. None draws fresh entropy from the operating system.
        """
        self.seed(seed)

    def seed(self, seed=None):
        """
        Resets the component to a new seed.

        Args:
            seed(None/int/np.random.SeedSequence): The seed sequence or its entropy. None draws fresh entropy.

        Returns:
            list(int): The entropy of the new seed sequence.
        """
        if seed is None:
            seed = np.random.SeedSequence()
        elif not isinstance(seed, np.random.SeedSequence):
            seed = np.random.SeedSequence(seed)
        self._seed_sequence = seed
        self.next_generator()
        return [self._seed_sequence.entropy]

    def next_generator(self):
        """Spawns the generator of the next corpus."""
        self._random_generator = np.random.default_rng(self._seed_sequence.spawn(1)[0])
