"""
Crowns, subdivided crowns and the posets built from them.

Points of a crown-like block on ``Z_n`` are stored level by level: ``(i, l)`` has the index ``offset + l * n + i``.
Labels are ``(str(i), level)``; blocks stacked on top of each other continue the level count.
"""
import numpy as np

from ..core import Construction, ConstructionError
from ..groups import cyclic, dihedral, direct_product
from .realization import realization_from_covers


def is_prime(p):
    if p < 2:
        return False
    return all(p % q for q in range(2, int(p ** 0.5) + 1))


def _crown_covers(n, offset=0):
    covers = []
    for i in range(n):
        covers.append((offset + i, offset + n + i))
        covers.append((offset + i, offset + n + (i + 1) % n))
    return covers


def _subdivided_crown_covers(n, offset=0):
    covers = []
    for i in range(n):
        covers.append((offset + i, offset + n + i))
        covers.append((offset + n + i, offset + 2 * n + i))
        if n > 1:
            covers.append((offset + (i + 1) % n, offset + 2 * n + i))
    return covers


def _labels(n, levels, first_level=0):
    return [(str(i), first_level + level) for level in range(levels) for i in range(n)]


def _rotation(n, levels, shift, offset=0):
    """Image array of the rotation ``i -> i + shift`` on a block with ``levels`` levels."""
    i = np.arange(n)
    return np.concatenate([offset + level * n + (i + shift) % n for level in range(levels)])


def crown(n):
    """
    The crown on ``Z_n``: ``2n`` points with ``(i,0) < (i,1)`` and ``(i,0) < (i+1,1)``.

    For ``n = 1`` this is the 2-point chain, for ``n = 2`` the complete bipartite order on 2 + 2 points.
    """
    return CrownConstruction(n).build().poset


class CrownConstruction(Construction):
    """
    The crown on ``Z_n`` with the action of its automorphism group.

    For ``n >= 2`` the automorphism group is the dihedral group ``D_n`` of order ``2n``: ``r`` rotates the indices
    and ``s`` maps ``(i,1)`` to ``(-i,1)`` and ``(i,0)`` to ``(-i-1,0)``. The 2-point chain of ``n = 1`` is rigid.
    """

    method = 'crown'

    def __init__(self, n=3):
        if n < 1:
            raise ConstructionError(f'The crown needs n >= 1, got {n}.')
        self._n = int(n)

    def params(self):
        return dict(n=self._n)

    def build(self):
        n = self._n
        covers = sorted(set(_crown_covers(n)))
        labels = _labels(n, 2)
        if n == 1:
            group = cyclic(1)
            action = np.arange(2)[None, :]
        else:
            group = dihedral(n)
            i = np.arange(n)
            reflection = np.concatenate([(-i - 1) % n, n + (-i) % n])
            action = np.empty((2 * n, 2 * n), dtype=np.int64)
            for index in range(2 * n):
                a, b = index % n, index // n
                rotation = _rotation(n, 2, a)
                action[index] = rotation[reflection] if b else rotation
        return realization_from_covers(labels, covers, group, action, self.method, self.params())


class SubdividedCrownConstruction(Construction):
    """
    The subdivided crown on ``Z_n``: ``3n`` points with ``(i,0) < (i,1) < (i,2)`` and ``(i+1,0) < (i,2)``.

    For ``n >= 2`` the automorphism group is cyclic of order ``n`` and acts by rotation. ``n = 1`` gives the 3-point
    chain.
    """

    method = 'subdivided-crown'

    def __init__(self, n=3):
        if n < 1:
            raise ConstructionError(f'The subdivided crown needs n >= 1, got {n}.')
        self._n = int(n)

    def params(self):
        return dict(n=self._n)

    def build(self):
        n = self._n
        action = np.stack([_rotation(n, 3, a) for a in range(n)])
        return realization_from_covers(
            _labels(n, 3), _subdivided_crown_covers(n), cyclic(n), action, self.method, self.params()
        )


def subdivided_crown(n):
    """The subdivided crown on ``Z_n`` with the rotation action of ``C_n``."""
    return SubdividedCrownConstruction(n).build()


class CyclicPrimePowerConstruction(Construction):
    """
    Poset realizing the cyclic group of order ``p^k``.

    The base is the crown ``Q`` on ``Z_{p^k}``. Its rotations are cut down to the cyclic group by a second block
    ``Q'`` on ``Z_m`` that lies above the maximal points of ``Q`` along the projection ``q: Z_{p^k} -> Z_m``:

    * ``p`` in {3, 5}: ``Q'`` is the subdivided crown on ``Z_p`` and ``(i,1) < (q(i),0)``. Size ``2p^k + 3p``.
    * ``p = 2``, ``k >= 2``: ``Q'`` is the subdivided crown on ``Z_4`` and ``(i,1) < (q(i),0)``. Size ``2^(k+1) + 12``.
    * ``p >= 7``: ``Q'`` is the antichain ``Z_p`` and ``(i,1)`` is below ``q(i)-1``, ``q(i)`` and ``q(i)+2``.
      Size ``2p^k + p``.

    The first regime is well defined for every odd prime and is used for primes ``p >= 7`` as well if
    ``unverified`` is set. Its correctness is only established for 3 and 5, so such results have to be checked by
    the certificate.
    """

    method = 'cyclic-pk'

    def __init__(self, p=3, k=1, unverified=False):
        """
        Args:
            p(int): The prime.
            k(int): The exponent ``k >= 1``.
            unverified(bool): Use the subdivided crown block for any odd prime.
        """
        p, k = int(p), int(k)
        if not is_prime(p):
            raise ConstructionError(f'p = {p} is not a prime.')
        if k < 1:
            raise ConstructionError(f'The exponent has to be positive, got k = {k}.')
        if p == 2 and k == 1:
            raise ConstructionError('There is no construction for C2 here: the 2-point antichain realizes C2.')
        self._p, self._k, self._unverified = p, k, bool(unverified)
        if p == 2:
            self._regime, self._modulus = 'subdivided-crown', 4
        elif p in (3, 5) or self._unverified:
            self._regime, self._modulus = 'subdivided-crown', p
        else:
            self._regime, self._modulus = 'antichain', p

    @property
    def expected_size(self):
        n = self._p ** self._k
        return 2 * n + (3 * self._modulus if self._regime == 'subdivided-crown' else self._modulus)

    def params(self):
        return dict(
            p=self._p, k=self._k, regime=self._regime, modulus=self._modulus,
            unverified=self._unverified and self._p not in (2, 3, 5),
        )

    def build(self):
        n, m = self._p ** self._k, self._modulus
        group = cyclic(n)
        covers = _crown_covers(n)
        labels = _labels(n, 2)
        offset = 2 * n
        if self._regime == 'subdivided-crown':
            covers += _subdivided_crown_covers(m, offset)
            labels += _labels(m, 3, first_level=2)
            covers += [(n + i, offset + i % m) for i in range(n)]
            levels = 3
        else:
            labels += _labels(m, 1, first_level=2)
            covers += [(n + i, offset + (i % m + delta) % m) for i in range(n) for delta in (-1, 0, 2)]
            levels = 1
        action = np.stack([
            np.concatenate([_rotation(n, 2, a), _rotation(m, levels, a % m, offset)]) for a in range(n)
        ])
        realization = realization_from_covers(labels, covers, group, action, self.method, self.params())
        if len(realization.poset) != self.expected_size:
            raise ConstructionError(
                f'The construction has {len(realization.poset)} points instead of {self.expected_size}.'
            )
        return realization


def cyclic_prime_power_poset(p, k, unverified=False):
    """Poset realizing ``C_{p^k}``, see ``CyclicPrimePowerConstruction``."""
    return CyclicPrimePowerConstruction(p, k, unverified).build()


class AbelianJoinConstruction(Construction):
    """
    Ordinal sum of the subdivided crowns on ``Z_{n_1}, ..., Z_{n_d}`` (the first part at the bottom).

    The direct product of the cyclic groups acts by rotating every part separately. The point ``(i, l)`` of the
    part ``t`` is labeled ``(str(i), 3t + l)``.
    """

    method = 'abelian-join'

    def __init__(self, parts=(3, 3)):
        parts = [int(n) for n in parts]
        if not parts:
            raise ConstructionError('The abelian join needs at least one part.')
        if any(n < 1 for n in parts):
            raise ConstructionError(f'Every part has to be positive, got {parts}.')
        self._parts = parts

    def params(self):
        return dict(parts=list(self._parts))

    def build(self):
        parts = self._parts
        group = direct_product([cyclic(n) for n in parts], name='x'.join(f'C{n}' for n in parts))
        offsets = np.cumsum([0] + [3 * n for n in parts])
        labels, covers = [], []
        for t, n in enumerate(parts):
            labels += _labels(n, 3, first_level=3 * t)
            covers += _subdivided_crown_covers(n, offsets[t])
            if t > 0:
                previous = parts[t - 1]
                # maximal points of the part below are covered by the minimal points of this part
                covers += [
                    (offsets[t - 1] + 2 * previous + j, offsets[t] + i) for j in range(previous) for i in range(n)
                ]
        digits = np.array(np.unravel_index(np.arange(group.order), parts)).T
        action = np.stack([
            np.concatenate([_rotation(n, 3, int(a), offsets[t]) for t, (n, a) in enumerate(zip(parts, row))])
            for row in digits
        ])
        return realization_from_covers(
            labels, [(int(x), int(y)) for x, y in covers], group, action, self.method, self.params()
        )


def abelian_join_poset(parts):
    """Realization of ``C_{n_1} x ... x C_{n_d}`` by an ordinal sum of subdivided crowns with ``3 * sum(n_i)`` points."""
    return AbelianJoinConstruction(parts).build()
