import hashlib
import json
import warnings

import networkx as nx
import numpy as np

from ..core import CycleError, UnknownPointError


def _freeze_label(label):
    if isinstance(label, list):
        return tuple(_freeze_label(part) for part in label)
    return label


def format_label(label):
    """Human readable form of a point label: ``(g,2)`` for pairs, ``str(label)`` otherwise."""
    if isinstance(label, tuple):
        return '(' + ','.join(str(part) for part in label) + ')'
    return str(label)


def transitive_reduction(lt):
    """Cover matrix of a strict order matrix: ``x < y`` without any point strictly in between."""
    lt = np.asarray(lt, dtype=bool)
    if lt.shape[0] == 0:
        return lt.copy()
    lt_float = lt.astype(np.float32)
    return lt & ~((lt_float @ lt_float) > 0)


def transitive_closure(relation):
    """
    Strict transitive closure of an acyclic relation matrix.

    Args:
        relation(ndarray(bool)): ``relation[x, y]`` declares ``x < y``.

    Returns:
        ndarray(bool): The closure.

    Exceptions:
        CycleError: The relation contains a cycle. A witness cycle of point indices is attached.
    """
    relation = np.asarray(relation, dtype=bool)
    n = relation.shape[0]
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(zip(*(axis.tolist() for axis in np.nonzero(relation))))
    try:
        order = list(nx.topological_sort(graph))
    except nx.NetworkXUnfeasible:
        cycle = [u for u, _ in nx.find_cycle(graph)]
        raise CycleError(f'The declared relation contains the cycle {cycle}.', cycle)
    # below[y] is the down-set of y, filled in a topological order
    below = np.zeros((n, n), dtype=bool)
    for y in order:
        lower = np.flatnonzero(relation[:, y])
        if lower.size:
            below[y] = below[lower].any(axis=0)
            below[y, lower] = True
    return below.T.copy()


class Poset:
    """
    Finite poset given by its strict order matrix.

    The points are addressed by dense indices ``0..n-1`` internally and carry opaque, hashable labels (pairs
    ``(tag, level)`` for the constructions, plain integers otherwise) for human readable output. ``lt[x, y]`` is True
    iff ``x < y``. The cover relation (Hasse diagram) is derived from ``lt`` and stored as sorted adjacency lists.

    A Poset is immutable. All operations on posets are pure functions that return new posets.
    """

    @property
    def points(self):
        """tuple: The point labels. The index of a label is its position."""
        return self._points

    @property
    def lt(self):
        """ndarray(bool) of shape (n, n): Read-only strict order matrix."""
        return self._lt

    @property
    def cover_matrix(self):
        """ndarray(bool) of shape (n, n): ``cover_matrix[x, y]`` iff ``y`` covers ``x``."""
        return self._covers

    @property
    def lower_covers(self):
        """tuple(tuple(int)): Sorted indices of the points covered by each point."""
        return self._lower_covers

    @property
    def upper_covers(self):
        """tuple(tuple(int)): Sorted indices of the points covering each point."""
        return self._upper_covers

    @property
    def heights(self):
        """ndarray(int): Length of the longest chain below each point."""
        return self._heights

    @property
    def redundant_covers(self):
        """tuple(tuple(int, int)): Declared pairs that were implied by transitivity and therefore dropped."""
        return self._redundant_covers

    def __init__(self, points, lt, validate=True, redundant_covers=()):
        """
        Args:
            points(iterable): Unique hashable point labels. JSON lists are converted to tuples.
            lt(array-like(bool)): Strict order matrix.
            validate(bool): Check irreflexivity and transitivity of ``lt``.
            redundant_covers(iterable(tuple(int, int))): Declared non-cover pairs, kept as warning flag.
        """
        self._points = tuple(_freeze_label(p) for p in points)
        n = len(self._points)
        lt = np.array(lt, dtype=bool).reshape(n, n)
        self._index = {label: i for i, label in enumerate(self._points)}
        if len(self._index) != n:
            raise ValueError('The point labels of a poset have to be unique.')
        if validate:
            if n and lt.diagonal().any():
                raise ValueError('The order relation is not irreflexive.')
            if n and ((lt.astype(np.float32) @ lt.astype(np.float32) > 0) & ~lt).any():
                raise ValueError('The order relation is not transitive.')
        self._lt = lt
        self._lt.flags.writeable = False
        self._covers = transitive_reduction(lt)
        self._covers.flags.writeable = False
        self._lower_covers = tuple(tuple(int(x) for x in np.flatnonzero(self._covers[:, y])) for y in range(n))
        self._upper_covers = tuple(tuple(int(y) for y in np.flatnonzero(self._covers[x])) for x in range(n))
        self._heights = self._compute_heights()
        self._heights.flags.writeable = False
        self._redundant_covers = tuple(redundant_covers)

    def _compute_heights(self):
        n = len(self._points)
        heights = np.zeros(n, dtype=np.int64)
        # x < y implies a strictly larger down-set, so sorting by down-set size is a linear extension
        for y in np.argsort(self._lt.sum(axis=0), kind='stable'):
            lower = self._lower_covers[y]
            if lower:
                heights[y] = heights[list(lower)].max() + 1
        return heights

    def __len__(self):
        return len(self._points)

    def __repr__(self):
        return f'Poset({len(self)} points, {int(self._covers.sum())} covers)'

    def __eq__(self, other):
        return isinstance(other, Poset) and self._points == other._points and np.array_equal(self._lt, other._lt)

    def __hash__(self):
        return hash((self._points, self._lt.tobytes()))

    def index(self, point):
        """
        Index of a point label.

        Args:
            point: A point label (lists are accepted for tuple labels).

        Exceptions:
            UnknownPointError: The label is not a point of the poset.
        """
        try:
            return self._index[_freeze_label(point)]
        except (KeyError, TypeError):
            raise UnknownPointError(f'{point!r} is not a point of the poset.')

    def label(self, x):
        return self._points[x]

    def cover_pairs(self):
        """Sorted list of all index pairs ``(x, y)`` with ``y`` covering ``x``."""
        return [(x, y) for x in range(len(self)) for y in self._upper_covers[x]]

    def minimal_points(self):
        return [x for x in range(len(self)) if not self._lower_covers[x]]

    def maximal_points(self):
        return [x for x in range(len(self)) if not self._upper_covers[x]]

    def relabeled(self, labels):
        """Same order with new point labels."""
        return Poset(labels, self._lt, validate=False)

    def subposet(self, indices):
        """Induced subposet on the passed point indices (in the passed order)."""
        indices = list(indices)
        return Poset([self._points[i] for i in indices], self._lt[np.ix_(indices, indices)], validate=False)

    def is_automorphism(self, permutation):
        """True, if the image array is a bijection with ``x < y <=> p(x) < p(y)``."""
        permutation = np.asarray(permutation, dtype=np.int64)
        n = len(self)
        if permutation.shape != (n,) or not np.array_equal(np.sort(permutation), np.arange(n)):
            return False
        return bool(np.array_equal(self._lt[np.ix_(permutation, permutation)], self._lt))

    def digest(self):
        """Stable SHA-256 digest of the labels and the cover relation."""
        payload = json.dumps(
            dict(points=[format_label(p) for p in self._points], covers=self.cover_pairs()), sort_keys=True
        )
        return hashlib.sha256(payload.encode('utf-8')).hexdigest()


def poset_from_covers(points, covers, by_index=False):
    """
    Poset from declared cover pairs.

    The strict order is the transitive closure of the declared relation. The cover relation is recomputed as its
    transitive reduction; declared pairs that are implied by transitivity are dropped, recorded in
    ``redundant_covers`` and reported by a warning.

    Args:
        points(iterable): Unique point labels.
        covers(iterable(pair)): Declared pairs ``(a, b)`` meaning ``a < b``.
        by_index(bool): The pairs address points by index instead of by label.

    Returns:
        Poset: The poset.

    Exceptions:
        CycleError: The declared relation is cyclic. The witness cycle is given in point labels.
        UnknownPointError: A pair references an unknown point.
        ValueError: A cover entry is not a pair.
    """
    points = [_freeze_label(p) for p in points]
    index = {label: i for i, label in enumerate(points)}
    if len(index) != len(points):
        raise ValueError('The point labels of a poset have to be unique.')
    n = len(points)
    relation = np.zeros((n, n), dtype=bool)
    declared = []
    for pair in covers:
        if isinstance(pair, (str, bytes)) or not hasattr(pair, '__len__') or len(pair) != 2:
            raise ValueError(f'A cover has to be a pair (a, b), got {pair!r}.')
        a, b = pair
        try:
            x, y = (int(a), int(b)) if by_index else (index[_freeze_label(a)], index[_freeze_label(b)])
        except (KeyError, TypeError, ValueError):
            raise UnknownPointError(f'The pair ({a!r}, {b!r}) references an unknown point.')
        if by_index and not (0 <= x < n and 0 <= y < n):
            raise UnknownPointError(f'The pair ({a}, {b}) references an index outside of 0..{n - 1}.')
        relation[x, y] = True
        declared.append((x, y))
    try:
        lt = transitive_closure(relation)
    except CycleError as error:
        cycle = [points[i] for i in error.cycle]
        raise CycleError(f'The declared relation contains the cycle {[format_label(c) for c in cycle]}.', cycle)
    poset = Poset(points, lt, validate=False)
    redundant = sorted({(x, y) for x, y in declared if not poset.cover_matrix[x, y]})
    if redundant:
        warnings.warn(
            f'{len(redundant)} declared pairs are implied by transitivity and were dropped from the covers.', Warning
        )
        poset._redundant_covers = tuple(redundant)
    return poset


def chain(n):
    """Chain ``0 < 1 < ... < n-1``."""
    return Poset(range(n), np.triu(np.ones((n, n), dtype=bool), k=1), validate=False)


def antichain(n):
    """n pairwise incomparable points."""
    return Poset(range(n), np.zeros((n, n), dtype=bool), validate=False)


def height(poset, x):
    """Length of the longest chain below the point ``x`` (a label). 0 iff ``x`` is minimal."""
    return int(poset.heights[poset.index(x)])


def down_set(poset, x):
    """Labels of all points strictly below the point ``x``."""
    return frozenset(poset.points[y] for y in np.flatnonzero(poset.lt[:, poset.index(x)]))


def up_set(poset, x):
    """Labels of all points strictly above the point ``x``."""
    return frozenset(poset.points[y] for y in np.flatnonzero(poset.lt[poset.index(x)]))


def adjacent(poset, x, y):
    """
    Adjacency of two points: there is a point strictly below both of them.

    Args:
        poset(Poset): The poset.
        x, y: Two distinct point labels.
    """
    i, j = poset.index(x), poset.index(y)
    assert i != j, 'Adjacency is defined for distinct points only.'
    return bool((poset.lt[:, i] & poset.lt[:, j]).any())


def ordinal_sum(first, second):
    """
    Ordinal sum (join): the disjoint union with every point of ``first`` below every point of ``second``.

    The labels are kept if they are disjoint. Otherwise they are replaced by ``(0, label)`` and ``(1, label)``.
    """
    n1, n2 = len(first), len(second)
    lt = np.zeros((n1 + n2, n1 + n2), dtype=bool)
    lt[:n1, :n1] = first.lt
    lt[n1:, n1:] = second.lt
    lt[:n1, n1:] = True
    labels = first.points + second.points
    if len(set(labels)) != len(labels):
        labels = [(0, p) for p in first.points] + [(1, p) for p in second.points]
    return Poset(labels, lt, validate=False)


def bounded(poset, bottom='bottom', top='top'):
    """
    The poset with a new global minimum and a new global maximum added.

    The new points are the first (minimum) and last (maximum) points. Their labels are made unique by appending
    primes if necessary.
    """
    taken = set(poset.points)
    while bottom in taken:
        bottom += "'"
    while top in taken or top == bottom:
        top += "'"
    n = len(poset)
    lt = np.zeros((n + 2, n + 2), dtype=bool)
    lt[1:n + 1, 1:n + 1] = poset.lt
    lt[0, 1:] = True
    lt[:n + 1, n + 1] = True
    return Poset((bottom,) + poset.points + (top,), lt, validate=False)


def is_lattice(poset):
    """True, if every pair of points has a least upper bound and a greatest lower bound."""
    le = poset.lt | np.eye(len(poset), dtype=bool)
    for relation in (le, le.T):
        for x in range(len(poset)):
            for y in range(x + 1, len(poset)):
                upper = np.flatnonzero(relation[x] & relation[y])
                if upper.size == 0:
                    return False
                # a least element of the common upper bounds is below all of them
                if not relation[np.ix_(upper, upper)].all(axis=1).any():
                    return False
    return True


def minimal_points_determined(poset):
    """True, if distinct minimal points have distinct sets of upper covers."""
    signatures = [poset.upper_covers[x] for x in poset.minimal_points()]
    return len(set(signatures)) == len(signatures)


def is_antichain(poset, indices):
    """True, if the points with the passed indices are pairwise incomparable."""
    indices = list(indices)
    return not poset.lt[np.ix_(indices, indices)].any()


def twin_pairs(poset):
    """Pairs of distinct point indices with equal strict down-sets and equal strict up-sets."""
    lt = poset.lt
    groups = {}
    for x in range(len(poset)):
        groups.setdefault((lt[:, x].tobytes(), lt[x].tobytes()), []).append(x)
    return [(group[i], group[j]) for group in groups.values()
            for i in range(len(group)) for j in range(i + 1, len(group))]
