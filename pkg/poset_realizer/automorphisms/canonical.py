"""
Canonical labeling of small posets.

The search tree of the individualization-refinement procedure is traversed depth first. Every leaf is a discrete
coloring and defines a relabeling of the poset; the canonical form is the relabeled order matrix that is smallest in
the byte order. Two leaves with the same relabeled matrix differ by an automorphism. The automorphisms found this way
prune the tree: children in the same orbit of the automorphisms that fix the current prefix are skipped, and after a
leaf that is equivalent to the first leaf or the best leaf the search jumps back to the common ancestor.
"""
from dataclasses import dataclass

import numpy as np

from .perm_group import orbit_of
from .refinement import Clock, cell_members, discrete_order, individualize, initial_colors, refine, target_cell


@dataclass(frozen=True)
class CanonicalLabeling:
    """
    Result of the canonical labeling.

    Attributes:
        order(tuple(int)): ``order[i]`` is the point with canonical position ``i``.
        form(bytes): The order matrix relabeled by ``order``. Equal forms iff isomorphic posets.
        generators(tuple(tuple(int))): Generators of the automorphism group.
        root_colors(tuple(int)): Refined coloring at the root of the search tree.
    """
    order: tuple
    form: bytes
    generators: tuple
    root_colors: tuple

    def position(self, x):
        return self.order.index(x)


def _form(poset, order):
    order = np.asarray(order, dtype=np.int64)
    return np.packbits(poset.lt[np.ix_(order, order)]).tobytes()


def _leaf_automorphism(first_order, second_order):
    """The automorphism that maps the leaf relabeling ``first_order`` onto ``second_order``."""
    perm = [0] * len(first_order)
    for x, y in zip(first_order, second_order):
        perm[x] = y
    return tuple(perm)


def _common_prefix(a, b):
    depth = 0
    for x, y in zip(a, b):
        if x != y:
            break
        depth += 1
    return depth


def canonical_labeling(poset, colors=None, clock=None):
    """
    Canonical labeling and automorphism group generators of a poset.

    Args:
        poset(Poset): The poset.
        colors(list(int)): The refined initial coloring, if it is already known.
        clock(Clock): Optional deadline.

    Returns:
        CanonicalLabeling: The canonical order, the canonical form and the automorphism generators.
    """
    clock = clock or Clock()
    root = list(colors) if colors is not None else initial_colors([poset])[0]
    automorphisms = []
    first = best = None  # (prefix, order, form)
    # stack entries: [colors, prefix, remaining candidates, explored candidates]
    stack = [[root, (), None, []]]
    while stack:
        clock.check()
        entry = stack[-1]
        colors, prefix, candidates, explored = entry
        if candidates is None:
            color = target_cell(colors)
            if color is None:
                stack.pop()
                order = discrete_order(colors)
                form = _form(poset, order)
                if first is None:
                    first = best = (prefix, order, form)
                    continue
                jump = None
                for reference in (first, best):
                    if reference[2] == form:
                        automorphisms.append(_leaf_automorphism(reference[1], order))
                        jump = _common_prefix(reference[0], prefix)
                        break
                if jump is None and form < best[2]:
                    best = (prefix, order, form)
                if jump is not None:
                    del stack[jump + 1:]
                continue
            entry[2] = candidates = cell_members(colors, color)[::-1]
        if not candidates:
            stack.pop()
            continue
        x = candidates.pop()
        if explored and _equivalent_to_explored(x, explored, prefix, automorphisms):
            continue
        explored.append(x)
        child = refine([poset], [individualize(colors, x)])[0]
        stack.append([child, prefix + (x,), None, []])
    generators = tuple(sorted(set(automorphisms)))
    return CanonicalLabeling(tuple(best[1]), best[2], generators, tuple(root))


def _equivalent_to_explored(x, explored, prefix, automorphisms):
    stabilizer = [g for g in automorphisms if all(g[p] == p for p in prefix)]
    if not stabilizer:
        return False
    orbit = orbit_of(x, stabilizer)
    return any(y in orbit for y in explored)


def canonical_form(poset):
    """Isomorphism invariant bytes of a poset: equal forms iff isomorphic posets of the same size."""
    return len(poset).to_bytes(4, 'big') + canonical_labeling(poset).form
