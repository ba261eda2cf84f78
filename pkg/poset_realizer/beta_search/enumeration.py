"""
Exhaustive enumeration of unlabeled posets by canonical augmentation.

Every poset with ``n + 1`` points arises from a poset with ``n`` points by adding a new maximal point whose strict
down-set is an order ideal. A child is accepted iff the new point lies in the automorphism orbit of the maximal point
with the highest canonical position. Together with the reduction of the ideals of a parent to one representative per
automorphism orbit, every isomorphism class is generated exactly once.

The points of an enumerated poset are the integers ``0..n-1`` in the order of their addition, so the integer order is
a linear extension.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..automorphisms import canonical_labeling, initial_colors
from ..automorphisms.perm_group import orbit_of
from ..core import CapExceededError
from ..posets import Poset
from ..settings import get_settings

logger = logging.getLogger(__name__)

#: Subtrees below the posets of this size are distributed across the workers.
SPLIT_SIZE = 6


@dataclass
class EnumeratedPoset:
    """A poset of the enumeration together with generators of its automorphism group."""
    poset: Poset
    generators: tuple

    def __len__(self):
        return len(self.poset)


@dataclass
class EnumerationReport:
    """
    Summary of the enumeration of one size.

    Attributes:
        size(int): Number of points.
        poset_count(int): Number of enumerated isomorphism classes.
        realizer_found(Poset/None): The first realizer of the searched group, if any.
        elapsed(float): Wall clock seconds.
    """
    size: int
    poset_count: int
    realizer_found: Poset = None
    elapsed: float = 0.0

    def to_dict(self):
        return dict(n=self.size, count=self.poset_count, found=self.realizer_found is not None,
                    elapsed=round(self.elapsed, 3))


def _down_masks(poset):
    return [int(sum(1 << int(y) for y in np.flatnonzero(poset.lt[:, x]))) for x in range(len(poset))]


def order_ideals(poset):
    """
    All order ideals (down-closed subsets) of an enumerated poset as bit masks, sorted.

    The point indices have to be a linear extension, which holds for all posets of the enumeration.
    """
    ideals = [0]
    for x, below in enumerate(_down_masks(poset)):
        bit = 1 << x
        ideals += [mask | bit for mask in ideals if below & ~mask == 0]
    return sorted(ideals)


def _image_mask(mask, permutation):
    image, x = 0, 0
    while mask:
        if mask & 1:
            image |= 1 << permutation[x]
        mask >>= 1
        x += 1
    return image


def ideal_orbit_representatives(poset, generators):
    """The smallest ideal of every orbit of the automorphisms on the order ideals."""
    ideals = order_ideals(poset)
    if not generators:
        return ideals
    representatives, seen = [], set()
    for mask in ideals:
        if mask in seen:
            continue
        representatives.append(mask)
        orbit, queue = {mask}, [mask]
        for current in queue:
            for g in generators:
                image = _image_mask(current, g)
                if image not in orbit:
                    orbit.add(image)
                    queue.append(image)
        seen |= orbit
    return representatives


def _child(parent, mask):
    n = len(parent)
    lt = np.zeros((n + 1, n + 1), dtype=bool)
    lt[:n, :n] = parent.lt
    lt[[x for x in range(n) if mask >> x & 1], n] = True
    return Poset(range(n + 1), lt, validate=False)


def children(node):
    """
    Accepted children of an enumerated poset, in a deterministic order.

    Args:
        node(EnumeratedPoset): The parent.

    Returns:
        list(EnumeratedPoset): The children that pass the canonical augmentation test.
    """
    accepted = []
    new = len(node.poset)
    for mask in ideal_orbit_representatives(node.poset, node.generators):
        child = _child(node.poset, mask)
        colors = initial_colors([child])[0]
        maximal = child.maximal_points()
        top_color = max(colors[x] for x in maximal)
        # the canonical position of a point respects the order of the root colors
        if colors[new] != top_color:
            continue
        labeling = canonical_labeling(child, colors=colors)
        position = {x: i for i, x in enumerate(labeling.order)}
        last = max(maximal, key=position.__getitem__)
        if last == new or new in orbit_of(last, labeling.generators):
            accepted.append(EnumeratedPoset(child, labeling.generators))
    return accepted


def _root():
    return EnumeratedPoset(Poset([0], np.zeros((1, 1), dtype=bool), validate=False), ())


def _descend(node, size):
    if len(node) == size:
        yield node
        return
    for child in children(node):
        yield from _descend(child, size)


def _subtree_task(task):
    lt_bytes, n, generators, size = task
    lt = np.frombuffer(lt_bytes, dtype=bool).reshape(n, n)
    node = EnumeratedPoset(Poset(range(n), lt, validate=False), generators)
    return [(p.poset.lt.tobytes(), p.generators) for p in _descend(node, size)]


def enumerate_classes(n, workers=None):
    """
    One representative of every isomorphism class of ``n``-point posets with its automorphism generators.

    Args:
        n(int): Number of points, ``1 <= n <=`` the ``enumeration_cap`` setting.
        workers(None/int): Number of worker processes. The stream does not depend on it.

    Yields:
        EnumeratedPoset: The representatives in a deterministic order.

    Exceptions:
        CapExceededError: ``n`` is out of range.
    """
    settings = get_settings(workers=workers)
    if not 1 <= n <= settings['enumeration_cap']:
        raise CapExceededError(f'The enumeration supports 1 <= n <= {settings["enumeration_cap"]}, got {n}.')
    if settings['workers'] <= 1 or n <= SPLIT_SIZE:
        yield from _descend(_root(), n)
        return
    roots = list(_descend(_root(), SPLIT_SIZE))
    tasks = [(r.poset.lt.tobytes(), SPLIT_SIZE, r.generators, n) for r in roots]
    with ProcessPoolExecutor(max_workers=settings['workers']) as executor:
        for results in executor.map(_subtree_task, tasks):
            for lt_bytes, generators in results:
                lt = np.frombuffer(lt_bytes, dtype=bool).reshape(n, n)
                yield EnumeratedPoset(Poset(range(n), lt, validate=False), generators)


def enumerate_posets(n, workers=None):
    """
    Exactly one poset per isomorphism class of ``n``-point posets, in a deterministic order.

    Args:
        n(int): Number of points, ``1 <= n <= 9``.
        workers(None/int): Number of worker processes. The stream does not depend on it.

    Yields:
        Poset: The representatives.
    """
    for node in enumerate_classes(n, workers):
        yield node.poset


def count_posets(n, workers=None):
    """Number of isomorphism classes of ``n``-point posets and the elapsed time as EnumerationReport."""
    start = time.perf_counter()
    count = sum(1 for _ in enumerate_classes(n, workers))
    report = EnumerationReport(n, count, elapsed=time.perf_counter() - start)
    logger.info('%d posets with %d points enumerated in %.1f s.', count, n, report.elapsed)
    return report
