"""Named group families materialized as Cayley tables."""
import itertools

import numpy as np

from ..core import CapExceededError
from ..settings import get_settings
from .finite_group import FiniteGroup


def check_group_order(order, name, max_order=None):
    max_order = max_order or get_settings()['max_group_order']
    if order > max_order:
        raise CapExceededError(
            f'The group {name} has order {order}. Only groups up to order {max_order} are materialized.'
        )


def cyclic(n):
    """Cyclic group ``C_n`` written additively. Element ``k`` is named ``'k'``."""
    assert n >= 1, 'The cyclic group needs a positive order.'
    check_group_order(n, f'C{n}')
    table = np.add.outer(np.arange(n), np.arange(n)) % n
    return FiniteGroup(table, name=f'C{n}', standard_generators=(1,) if n > 1 else (), validate=False)


def _dihedral_name(a, b):
    rotation = '' if a == 0 else ('r' if a == 1 else f'r^{a}')
    reflection = 's' if b else ''
    return rotation + reflection or 'e'


def dihedral(n):
    """
    Dihedral group ``D_n`` of order ``2n``.

    The element with index ``a + n*b`` is ``r^a s^b``. With ``s r s = r^-1`` the product is
    ``r^a s^b * r^c s^d = r^(a + (-1)^b c) s^(b + d)``.
    """
    assert n >= 1, 'The dihedral group needs a positive parameter.'
    check_group_order(2 * n, f'D{n}')
    index = np.arange(2 * n)
    a, b = index % n, index // n
    sign = np.where(b == 1, -1, 1)
    rotation = (a[:, None] + sign[:, None] * a[None, :]) % n
    reflection = (b[:, None] + b[None, :]) % 2
    table = rotation + n * reflection
    generators = (1, n) if n > 1 else (n,)
    names = [_dihedral_name(int(x), int(y)) for x, y in zip(a, b)]
    return FiniteGroup(table, name=f'D{n}', element_names=names, standard_generators=generators, validate=False)


def cycle_notation(permutation):
    """Cycle notation with 1-based points, e.g. ``(12)(34)``. Points are comma separated for degrees above 9."""
    separator = ',' if len(permutation) > 9 else ''
    seen, cycles = set(), []
    for start in range(len(permutation)):
        if start in seen or permutation[start] == start:
            continue
        cycle, point = [], start
        while point not in seen:
            seen.add(point)
            cycle.append(str(point + 1))
            point = permutation[point]
        cycles.append('(' + separator.join(cycle) + ')')
    return ''.join(cycles) or '()'


def _permutation_codes(permutations):
    degree = permutations.shape[1]
    if degree == 0:
        return np.zeros(len(permutations), dtype=np.int64)
    radix = degree ** np.arange(degree - 1, -1, -1, dtype=np.int64)
    return permutations @ radix


def permutation_group_table(permutations):
    """
    Cayley table of a group of permutations.

    Args:
        permutations(ndarray(int)): Permutations as image arrays, lexicographically sorted with the identity first.
            Has to be closed under composition.

    Returns:
        ndarray(int): ``table[a, b]`` is the index of the composition ``a o b`` (``b`` applied first).
    """
    permutations = np.asarray(permutations, dtype=np.int64)
    count, degree = permutations.shape
    table = np.empty((count, count), dtype=np.int64)
    if degree ** degree < 2 ** 62:
        codes = _permutation_codes(permutations)
        for a in range(count):
            table[a] = np.searchsorted(codes, _permutation_codes(permutations[a][permutations]))
    else:
        lookup = {row.tobytes(): i for i, row in enumerate(permutations)}
        for a in range(count):
            table[a] = [lookup[row.tobytes()] for row in permutations[a][permutations]]
    return table


def close_permutations(generators, degree):
    """All products of the generator permutations, sorted lexicographically (identity first)."""
    identity = tuple(range(degree))
    generators = [tuple(int(x) for x in g) for g in generators]
    elements = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for element in frontier:
            for generator in generators:
                product = tuple(element[x] for x in generator)
                if product not in elements:
                    elements.add(product)
                    new.append(product)
        frontier = new
    return np.array(sorted(elements), dtype=np.int64).reshape(len(elements), degree)


def permutation_group(generators, degree, name=None, max_order=None):
    """
    Group generated by permutations, materialized as a Cayley table.

    Elements are named in cycle notation. The passed generators are the standard generators.

    Args:
        generators(iterable(iterable(int))): Image arrays of the generating permutations.
        degree(int): Number of points.
        name(str): Optional label.
        max_order(int): Override of the ``max_group_order`` setting.

    Returns:
        tuple(FiniteGroup, ndarray): The group and the image arrays of its elements (row ``i`` is element ``i``).
    """
    generators = [list(g) for g in generators]
    elements = close_permutations(generators, degree)
    check_group_order(len(elements), name or 'generated by permutations', max_order)
    table = permutation_group_table(elements)
    codes = {tuple(row): i for i, row in enumerate(elements.tolist())}
    standard = []
    for generator in generators:
        index = codes[tuple(generator)]
        if index != 0 and index not in standard:
            standard.append(index)
    names = [cycle_notation(row) for row in elements.tolist()]
    group = FiniteGroup(table, name=name, element_names=names, standard_generators=standard, validate=False)
    return group, elements


def symmetric(n):
    """Symmetric group ``S_n`` on the points ``1..n``. The standard generators are the transpositions (i i+1)."""
    assert n >= 1, 'The symmetric group needs a positive degree.'
    order = 1
    for k in range(2, n + 1):
        order *= k
    check_group_order(order, f'S{n}')
    elements = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(order, n)
    table = permutation_group_table(elements)
    names = [cycle_notation(row) for row in elements.tolist()]
    codes = {tuple(row): i for i, row in enumerate(elements.tolist())}
    generators = []
    for i in range(n - 1):
        transposition = list(range(n))
        transposition[i], transposition[i + 1] = i + 1, i
        generators.append(codes[tuple(transposition)])
    return FiniteGroup(table, name=f'S{n}', element_names=names, standard_generators=generators, validate=False)


def quaternion():
    """Quaternion group ``Q8`` with elements ``1, -1, i, -i, j, -j, k, -k``. Standard generators: ``i, j``."""
    # Unit products: units[u][v] = (sign, unit) of u*v for the units 1, i, j, k.
    units = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ]
    table = np.empty((8, 8), dtype=np.int64)
    for x in range(8):
        for y in range(8):
            sign, unit = units[x // 2][y // 2]
            negative = (x % 2 + y % 2 + (sign < 0)) % 2
            table[x, y] = 2 * unit + negative
    names = ['1', '-1', 'i', '-i', 'j', '-j', 'k', '-k']
    return FiniteGroup(table, name='Q8', element_names=names, standard_generators=(2, 4), validate=False)


def direct_product(groups, name=None):
    """
    Direct product of groups.

    The elements are tuples with the first factor being the most significant digit, so the identity is index 0.
    Elements are named ``(x,y,...)`` from the factor names; the standard generators are the embedded standard
    generators of all factors.

    Args:
        groups(iterable(FiniteGroup)): The factors.
        name(str): Optional label. Default: factor names joined by ``x``.

    Returns:
        FiniteGroup: The product group.
    """
    groups = list(groups)
    assert len(groups) > 0, 'The direct product needs at least one factor.'
    if len(groups) == 1:
        return groups[0]
    name = name or 'x'.join(g.name or '?' for g in groups)
    shape = tuple(g.order for g in groups)
    order = int(np.prod(shape))
    check_group_order(order, name)
    digits = np.array(np.unravel_index(np.arange(order), shape))
    table = np.zeros((order, order), dtype=np.int64)
    for factor, group in enumerate(groups):
        table = table * group.order + group.table[digits[factor][:, None], digits[factor][None, :]]
    names = [
        '(' + ','.join(g.element_name(int(d)) for g, d in zip(groups, column)) + ')' for column in digits.T
    ]
    generators = []
    for factor, group in enumerate(groups):
        for generator in group.standard_generators:
            embedded = [0] * len(groups)
            embedded[factor] = generator
            generators.append(int(np.ravel_multi_index(embedded, shape)))
    return FiniteGroup(table, name=name, element_names=names, standard_generators=generators, validate=False)
