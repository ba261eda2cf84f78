"""
Partition refinement and individualization-refinement search on finite posets.

A coloring assigns a color id to every point. Color ids are canonical: they are computed from sorted signatures that
only depend on the order structure and the previous colors, never on point indices. Therefore two colorings refined
jointly (one per poset) can be compared color by color, and an isomorphism has to map every color class onto the
color class with the same id.

The initial invariants are the height and the numbers of lower and upper covers of a point, together with the sizes
of its strict down-set and up-set. A refinement round splits the color classes by the multisets of colors of the
lower covers and of the upper covers until a fixed point is reached.
"""
import time

import numpy as np

from ..core import SearchTimeout


class Clock:
    """Deadline of a search. ``check()`` raises a SearchTimeout once the deadline has passed."""

    def __init__(self, timeout=None, deadline=None):
        """
        Args:
            timeout(None/float): Seconds from now. None disables the deadline.
            deadline(None/float): Absolute ``time.time()`` deadline. Overrides the timeout.
        """
        if deadline is None and timeout is not None:
            deadline = time.time() + timeout
        self.deadline = deadline
        self._calls = 0

    def check(self):
        if self.deadline is None:
            return
        self._calls += 1
        if self._calls % 16 == 0 and time.time() > self.deadline:
            raise SearchTimeout('The search did not finish within the configured timeout.')


def _compact(keys):
    """Maps hashable, sortable keys to dense ids 0..k-1 in the order of the sorted distinct keys."""
    ids = {key: i for i, key in enumerate(sorted(set(keys)))}
    return [ids[key] for key in keys]


def initial_keys(poset):
    """Isomorphism invariant key of every point."""
    lt = poset.lt
    below = lt.sum(axis=0).tolist()
    above = lt.sum(axis=1).tolist()
    heights = poset.heights.tolist()
    return [
        (heights[x], len(poset.lower_covers[x]), len(poset.upper_covers[x]), below[x], above[x])
        for x in range(len(poset))
    ]


def initial_colors(posets):
    """
    Joint initial coloring of one or more posets.

    Returns:
        list(list(int)) / None: One coloring per poset, or None if the color multisets differ between the posets.
    """
    keys = [initial_keys(p) for p in posets]
    flat = _compact([key for per_poset in keys for key in per_poset])
    colorings, start = [], 0
    for per_poset in keys:
        colorings.append(flat[start:start + len(per_poset)])
        start += len(per_poset)
    return refine(posets, colorings)


def refine(posets, colorings):
    """
    Joint refinement of colorings to the coarsest equitable colorings below them.

    Args:
        posets(list(Poset)): One or more posets.
        colorings(list(list(int))): One coloring per poset with jointly canonical ids.

    Returns:
        list(list(int)) / None: The refined colorings with dense canonical ids, or None if the color multisets of
        the posets differ at some point (no isomorphism respects the input colorings).
    """
    colorings = [list(c) for c in colorings]
    if len(colorings) > 1 and not _same_multisets(colorings):
        return None
    flat = _compact([c for coloring in colorings for c in coloring])
    colorings = _split(flat, colorings)
    count = len(set(flat))
    while True:
        signatures = []
        for poset, colors in zip(posets, colorings):
            lower, upper = poset.lower_covers, poset.upper_covers
            signatures.extend(
                (colors[x], tuple(sorted(colors[y] for y in lower[x])), tuple(sorted(colors[y] for y in upper[x])))
                for x in range(len(colors))
            )
        flat = _compact(signatures)
        colorings = _split(flat, colorings)
        if len(colorings) > 1 and not _same_multisets(colorings):
            return None
        new_count = len(set(flat))
        if new_count == count:
            return colorings
        count = new_count


def _split(flat, colorings):
    result, start = [], 0
    for coloring in colorings:
        result.append(flat[start:start + len(coloring)])
        start += len(coloring)
    return result


def _same_multisets(colorings):
    first = sorted(colorings[0])
    return all(sorted(c) == first for c in colorings[1:])


def individualize(colors, x):
    """Coloring in which the point ``x`` gets a new color directly behind its old color class."""
    individualized = [2 * c for c in colors]
    individualized[x] += 1
    return individualized


def target_cell(colors):
    """
    Color of the smallest non-singleton color class (ties broken by the smaller color id).

    Returns:
        int / None: The color, or None if the coloring is discrete.
    """
    sizes = np.bincount(np.asarray(colors, dtype=np.int64)) if colors else np.zeros(0, dtype=np.int64)
    candidates = np.flatnonzero(sizes > 1)
    if candidates.size == 0:
        return None
    return int(candidates[np.argmin(sizes[candidates])])


def cell_members(colors, color):
    return [x for x, c in enumerate(colors) if c == color]


def discrete_order(colors):
    """Points sorted by their color. Only meaningful for discrete colorings."""
    order = [0] * len(colors)
    for x, c in enumerate(colors):
        order[c] = x
    return order


def find_isomorphism(left, right, left_colors, right_colors, clock=None):
    """
    Search for an order isomorphism that respects two colorings.

    The search refines both colorings jointly, individualizes the first point ``x`` of the target cell on the left and
    branches over all points ``y`` of the same cell on the right. Discrete colorings define a candidate bijection that
    is verified against the full order matrices.

    Args:
        left(Poset): The source poset.
        right(Poset): The target poset.
        left_colors(list(int)): Coloring of the source.
        right_colors(list(int)): Coloring of the target with jointly canonical ids.
        clock(Clock): Optional deadline.

    Returns:
        list(int) / None: Image array of an isomorphism from left to right, or None if none exists.
    """
    clock = clock or Clock()
    if len(left) != len(right):
        return None
    refined = refine([left, right], [left_colors, right_colors])
    if refined is None:
        return None
    # stack entries: [left colors, right colors, left point, remaining right candidates]
    stack = [[refined[0], refined[1], None, None]]
    while stack:
        clock.check()
        entry = stack[-1]
        lc, rc, x, candidates = entry
        if candidates is None:
            color = target_cell(lc)
            if color is None:
                stack.pop()
                mapping = _discrete_mapping(lc, rc)
                if _is_isomorphism(left, right, mapping):
                    return mapping
                continue
            entry[2] = x = cell_members(lc, color)[0]
            entry[3] = candidates = cell_members(rc, color)[::-1]
        if not candidates:
            stack.pop()
            continue
        y = candidates.pop()
        child = refine([left, right], [individualize(lc, x), individualize(rc, y)])
        if child is not None:
            stack.append([child[0], child[1], None, None])
    return None


def _discrete_mapping(left_colors, right_colors):
    right_order = discrete_order(right_colors)
    return [right_order[c] for c in left_colors]


def _is_isomorphism(left, right, mapping):
    mapping = np.asarray(mapping, dtype=np.int64)
    return bool(np.array_equal(right.lt[np.ix_(mapping, mapping)], left.lt))


def are_isomorphic(first, second, clock=None):
    """
    Order isomorphism between two posets.

    Args:
        first(Poset): The source poset.
        second(Poset): The target poset.
        clock(Clock): Optional deadline.

    Returns:
        dict / None: Map from the point labels of ``first`` to the point labels of ``second``, or None if the posets
        are not isomorphic.
    """
    if len(first) != len(second):
        return None
    colorings = initial_colors([first, second])
    if colorings is None:
        return None
    mapping = find_isomorphism(first, second, colorings[0], colorings[1], clock)
    if mapping is None:
        return None
    return {first.points[x]: second.points[y] for x, y in enumerate(mapping)}
