"""
Permutation groups given by generators.

Permutations are image tuples: ``p[x]`` is the image of the point ``x``. ``compose(a, b)`` applies ``b`` first, so that
an action ``g -> A(g)`` is a homomorphism iff ``A(g * h) == compose(A(g), A(h))``.
"""
import math

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..core import CapExceededError


def identity(degree):
    return tuple(range(degree))


def compose(a, b):
    """The permutation ``x -> a[b[x]]``."""
    return tuple(a[x] for x in b)


def inverse(p):
    result = [0] * len(p)
    for x, y in enumerate(p):
        result[y] = x
    return tuple(result)


def is_identity(p):
    return all(x == y for x, y in enumerate(p))


def permutation_order(p):
    """Order of a permutation: the least common multiple of its cycle lengths."""
    seen = [False] * len(p)
    order = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        order = order * length // math.gcd(order, length)
    return order


def orbit_partition(generators, degree):
    """
    Orbits of the group generated by the permutations.

    The orbits are the connected components of the graph with an edge ``x -- g(x)`` for every generator ``g``.

    Returns:
        tuple(tuple(int)): The orbits, each sorted, ordered by their smallest point.
    """
    if degree == 0:
        return ()
    if generators:
        sources = np.tile(np.arange(degree), len(generators))
        targets = np.concatenate([np.asarray(g, dtype=np.int64) for g in generators])
    else:
        sources = targets = np.zeros(0, dtype=np.int64)
    graph = coo_matrix((np.ones(sources.size, dtype=np.int8), (sources, targets)), shape=(degree, degree))
    _, labels = connected_components(graph, directed=True, connection='weak')
    orbits = {}
    for x, label in enumerate(labels.tolist()):
        orbits.setdefault(label, []).append(x)
    return tuple(sorted(tuple(orbit) for orbit in orbits.values()))


def orbit_of(point, generators):
    """Orbit of a single point (breadth first search over the generators)."""
    orbit, queue = {point}, [point]
    for x in queue:
        for g in generators:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                queue.append(y)
    return orbit


class _Level:
    """One level of a stabilizer chain: base point, strong generators and transversal of the basic orbit."""

    def __init__(self, point, degree):
        self.point = point
        self.generators = []
        self.transversal = {point: identity(degree)}

    def update_transversal(self):
        transversal = {self.point: self.transversal[self.point]}
        queue = [self.point]
        for x in queue:
            for g in self.generators:
                y = g[x]
                if y not in transversal:
                    transversal[y] = compose(g, transversal[x])
                    queue.append(y)
        self.transversal = transversal


def _sift(p, levels, start):
    """Strips ``p`` through the levels from ``start`` on. Returns the residue and the level where it dropped out."""
    for i in range(start, len(levels)):
        level = levels[i]
        image = p[level.point]
        if image not in level.transversal:
            return p, i
        p = compose(inverse(level.transversal[image]), p)
    return p, len(levels)


def stabilizer_chain(generators, degree):
    """
    Deterministic Schreier-Sims algorithm.

    Args:
        generators(iterable(tuple(int))): Generating permutations.
        degree(int): Number of points.

    Returns:
        list(_Level): Stabilizer chain with strong generators. The group order is the product of the basic orbit
        lengths.
    """
    generators = [tuple(g) for g in generators if not is_identity(g)]
    levels = []
    for g in generators:
        if all(g[level.point] == level.point for level in levels):
            moved = next(x for x in range(degree) if g[x] != x)
            levels.append(_Level(moved, degree))
    for i, level in enumerate(levels):
        fixed = [lv.point for lv in levels[:i]]
        level.generators = [g for g in generators if all(g[b] == b for b in fixed)]
        level.update_transversal()

    i = len(levels) - 1
    while i >= 0:
        level = levels[i]
        extended = False
        for x, u in list(level.transversal.items()):
            for s in level.generators:
                # Schreier generator, fixes the base point of the level
                schreier = compose(inverse(level.transversal[s[x]]), compose(s, u))
                if is_identity(schreier):
                    continue
                residue, j = _sift(schreier, levels, i + 1)
                if is_identity(residue):
                    continue
                if j == len(levels):
                    moved = next(y for y in range(degree) if residue[y] != y)
                    levels.append(_Level(moved, degree))
                for k in range(i + 1, j + 1):
                    levels[k].generators.append(residue)
                    levels[k].update_transversal()
                i = j
                extended = True
                break
            if extended:
                break
        if not extended:
            i -= 1
    return levels


def group_order(generators, degree):
    """Order of the group generated by the permutations (Schreier-Sims)."""
    return math.prod(len(level.transversal) for level in stabilizer_chain(generators, degree))


def enumerate_elements(generators, degree, cap=10 ** 4):
    """
    All elements of the generated group by closure under right multiplication with the generators.

    Exceptions:
        CapExceededError: The group has more than ``cap`` elements.
    """
    start = identity(degree)
    elements, queue = {start}, [start]
    for p in queue:
        for g in generators:
            q = compose(p, tuple(g))
            if q not in elements:
                if len(elements) >= cap:
                    raise CapExceededError(f'The permutation group has more than {cap} elements.')
                elements.add(q)
                queue.append(q)
    return sorted(elements)


class PermGroup:
    """
    Permutation group on the points ``0..degree-1``, typically the automorphism group of a poset.

    The generators are sorted lexicographically. ``order`` is the group order. If the group was produced by a
    stabilizer chain search, ``base`` and ``orbit_sizes`` hold the base points and the basic orbit lengths.
    """

    def __init__(self, degree, generators, order=None, base=(), orbit_sizes=()):
        self._degree = int(degree)
        gens = sorted({tuple(int(x) for x in g) for g in generators if not is_identity(g)})
        for g in gens:
            assert sorted(g) == list(range(self._degree)), 'A generator is not a permutation of the points.'
        self._generators = tuple(gens)
        self._order = int(order) if order is not None else group_order(self._generators, self._degree)
        self._orbits = orbit_partition(self._generators, self._degree)
        self._base = tuple(base)
        self._orbit_sizes = tuple(orbit_sizes)

    @property
    def degree(self):
        return self._degree

    @property
    def generators(self):
        return self._generators

    @property
    def order(self):
        return self._order

    @property
    def orbits(self):
        """tuple(tuple(int)): The orbits on the points, each sorted, ordered by their smallest point."""
        return self._orbits

    @property
    def base(self):
        return self._base

    @property
    def orbit_sizes(self):
        return self._orbit_sizes

    def __repr__(self):
        return f'PermGroup(degree={self._degree}, order={self._order}, generators={len(self._generators)})'

    def elements(self, cap=10 ** 4):
        """All elements, sorted. Raises a CapExceededError for groups with more than ``cap`` elements."""
        if self._order > cap:
            raise CapExceededError(f'The group order {self._order} exceeds the enumeration cap {cap}.')
        return enumerate_elements(self._generators, self._degree, cap)

    def closure_order(self, cap=1000):
        """
        Order by closure enumeration, independent of the stabilizer chain.

        Returns:
            int / None: The number of elements, or None if ``order`` exceeds ``cap`` and nothing was enumerated.
        """
        if self._order > cap:
            return None
        return len(enumerate_elements(self._generators, self._degree, cap + 1))

    def contains(self, p):
        """Membership test by sifting through a stabilizer chain."""
        p = tuple(int(x) for x in p)
        if len(p) != self._degree or sorted(p) != list(range(self._degree)):
            return False
        residue, _ = _sift(p, stabilizer_chain(self._generators, self._degree), 0)
        return is_identity(residue)

    def to_dict(self, labels=None):
        data = dict(
            degree=self._degree,
            order=self._order,
            generators=[list(g) for g in self._generators],
            orbits=[list(o) for o in self._orbits],
        )
        if labels is not None:
            from ..posets import format_label
            data['orbit_labels'] = [[format_label(labels[x]) for x in o] for o in self._orbits]
        return data


def is_cyclic_of_order(group, n, cap=10 ** 4):
    """
    True, iff the permutation group is cyclic of order ``n``.

    The test enumerates the elements and looks for an element of order ``n``.

    Exceptions:
        CapExceededError: The group order exceeds the enumeration cap.
    """
    if group.order != n:
        return False
    if n == 1:
        return True
    return any(permutation_order(p) == n for p in group.elements(cap))


def is_orbit_discrete(poset, group):
    """True, iff every orbit of the group is an antichain of the poset."""
    lt = poset.lt
    return all(not lt[np.ix_(orbit, orbit)].any() for orbit in group.orbits)
