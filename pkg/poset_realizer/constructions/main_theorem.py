"""
The 4|G| construction for groups with an irredundant generating sequence of length ``d >= 3``.

The points are ``G x {0, 1, 2, 3}``. Point ``(g, l)`` has the index ``l * |G| + g`` and the label
``(name of g, l)``. With the convention ``h_0 = h_-1 = e`` the cover relation is

* ``d`` odd: ``(g,1)`` covers ``(g h_{i+1}^-1 h_i, 0)`` for ``i = -1..d-1``, ``(g,2)`` covers ``(g,1)`` and ``(g,3)``
  covers ``(g h_k, 2)`` for the even ``k`` in ``0..d`` and ``(g h_k, 1)`` for the odd ``k`` in ``0..d``.
* ``d`` even: ``(g,1)`` covers ``(g,0)`` and ``(g h_{i+1}^-1 h_i, 0)`` for ``i = 1..d-1``, ``(g,2)`` covers ``(g,1)``
  and ``(g,3)`` covers ``(g,2)``, ``(g h_k, 2)`` for the odd ``k`` in ``1..d`` and ``(g h_k, 1)`` for the even ``k``
  in ``1..d``.

The group acts freely by left multiplication on the first coordinate and the poset has the four levels as orbits.
"""
import numpy as np

from ..core import Construction, ConstructionError, GeneratingSequenceError
from ..groups import FiniteGroup, GeneratingSequence, generating_set, group_from_spec, irredundant_reduce
from ..posets import adjacent, minimal_points_determined
from .realization import realization_from_covers


class MainTheoremConstruction(Construction):
    """Poset with ``4|G|`` points whose automorphism group is ``G``."""

    method = 'main'

    def __init__(self, group, generators=None):
        """
        Args:
            group(FiniteGroup/str): The group or a group descriptor.
            generators(GeneratingSequence/iterable): Irredundant generating sequence ``(h_1, ..., h_d)`` with
                ``d >= 3`` as sequence or as element tokens. Default: the standard generators of the group, or a
                greedy generating set if it has none, reduced to an irredundant sequence.
        """
        self._group = group if isinstance(group, FiniteGroup) else group_from_spec(group)
        if generators is None:
            # groups read from a Cayley table file have no standard generators
            generators = irredundant_reduce(self._group, self._group.standard_generators or generating_set(self._group))
        elif not isinstance(generators, GeneratingSequence):
            generators = GeneratingSequence(self._group, generators)
        elif generators.group != self._group:
            raise GeneratingSequenceError('The generating sequence belongs to another group.')
        if generators.d < 3:
            raise ConstructionError(
                f'The construction needs an irredundant generating sequence with d >= 3, got d = {generators.d}.'
            )
        self._generators = generators

    @property
    def generators(self):
        return self._generators

    def params(self):
        return dict(group=self._group.name, generators=self._generators.names(), d=self._generators.d)

    def build(self):
        group, h = self._group, (0,) + tuple(self._generators)
        d, n = self._generators.d, group.order
        mul, inv = group.mul, group.inv

        def point(g, level):
            return level * n + g

        # offsets s with (g,1) covering (g*s, 0); h[0] is the identity, h[-1] is represented by h[0]
        if d % 2:
            offsets = [0] + [mul(inv(h[i + 1]), h[i]) for i in range(0, d)]
        else:
            offsets = [0] + [mul(inv(h[i + 1]), h[i]) for i in range(1, d)]
        if len(set(offsets)) != len(offsets):
            raise ConstructionError(
                f'The points of height 1 do not cover {len(offsets)} distinct minimal points, the generating sequence '
                f'{self._generators.names()} is not irredundant.'
            )
        covers = []
        for g in range(n):
            covers.extend((point(mul(g, s), 0), point(g, 1)) for s in offsets)
            covers.append((point(g, 1), point(g, 2)))
            if d % 2 == 0:
                covers.append((point(g, 2), point(g, 3)))
            for k in range(0, d + 1):
                if k == 0 and d % 2 == 0:
                    continue
                level = 2 if (k % 2 == 0) == (d % 2 == 1) else 1
                covers.append((point(mul(g, h[k]), level), point(g, 3)))
        labels = [(group.element_name(g), level) for level in range(4) for g in range(n)]
        action = np.concatenate([level * n + group.table for level in range(4)], axis=1)
        return realization_from_covers(labels, covers, group, action, self.method, self.params())


def main_theorem_poset(group, generators=None):
    """The ``4|G|`` realization of ``group`` for an irredundant generating sequence with ``d >= 3``."""
    return MainTheoremConstruction(group, generators).build()


def adjacency_audit(realization):
    """
    Adjacency properties of a main construction that identify the generating points below ``(e, 3)``.

    Points ``(h_k, 1)`` are indexed by ``k = 0..d`` with ``h_0 = e``. For odd ``d`` consecutive points are adjacent for
    ``0 <= k < d``, and points with ``|k - l| >= 3`` are not. For even ``d`` the same holds for ``k, l >= 1`` and
    ``(e, 1)`` is adjacent to none of the ``(h_k, 1)``.

    Args:
        realization(ConstructedRealization): A realization built by the main construction.

    Returns:
        dict: The checked properties, each True or False, and ``passed`` as their conjunction.
    """
    if realization.method != MainTheoremConstruction.method:
        raise ConstructionError('The adjacency audit applies to the main construction only.')
    poset, group = realization.poset, realization.group
    h = [0] + [group.element_index(name) for name in realization.params['generators']]
    d = len(h) - 1
    labels = [(group.element_name(x), 1) for x in h]
    start = 0 if d % 2 else 1
    consecutive = all(adjacent(poset, labels[k], labels[k + 1]) for k in range(start, d))
    far = not any(
        adjacent(poset, labels[k], labels[l])
        for k in range(start, d + 1) for l in range(k + 3, d + 1)
    )
    audit = dict(
        consecutive_adjacent=consecutive,
        far_not_adjacent=far,
        minimal_points_determined=minimal_points_determined(poset),
    )
    if d % 2 == 0:
        audit['identity_isolated'] = not any(adjacent(poset, labels[0], labels[k]) for k in range(1, d + 1))
    audit['passed'] = all(audit.values())
    return audit
