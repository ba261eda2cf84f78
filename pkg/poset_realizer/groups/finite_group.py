import numpy as np

from ..core import CayleyTableError, GeneratingSequenceError, GroupSpecError


class FiniteGroup:
    """
    Finite group given by its Cayley table.

    The elements are the indices ``0..n-1`` and ``table[a, b]`` is the index of the product ``a * b``. The identity is
    always the element 0. The table is validated on construction and read-only afterwards, so a FiniteGroup can be
    shared by any number of workers.

    Beside the table, a group carries human readable element names and an ordered tuple of standard generators.
    The standard generators are the ones that are addressed as ``e1, e2, ...`` on the command line (e.g. the basis of
    ``C2^3`` or the adjacent transpositions of ``S4``).
    """

    @property
    def order(self):
        """int: Number of elements."""
        return self._table.shape[0]

    @property
    def table(self):
        """ndarray(int) of shape (n, n): Read-only multiplication table."""
        return self._table

    @property
    def identity(self):
        """int: Index of the identity. Always 0."""
        return 0

    @property
    def name(self):
        """str/None: Label of the group."""
        return self._name

    @property
    def element_names(self):
        """tuple(str): Human readable name of every element."""
        return self._element_names

    @property
    def standard_generators(self):
        """tuple(int): Element indices of the standard generators of the group family."""
        return self._standard_generators

    @property
    def inverses(self):
        """ndarray(int): ``inverses[a]`` is the index of the inverse of ``a``."""
        return self._inverses

    def __init__(self, table, name=None, element_names=None, standard_generators=(), validate=True):
        """
        Args:
            table(array-like(int)): Square multiplication table with identity 0.
            name(str): Optional label of the group.
            element_names(iterable(str)): Names of the elements. Default: the decimal indices.
            standard_generators(iterable(int)): Indices of the standard generators of the group family.
            validate(bool): Check the group axioms. Only the named families that are correct by construction skip
                the check.

        Exceptions:
            CayleyTableError: The table violates a group axiom. The failing triple is attached if the violation is
                an associativity failure.
        """
        table = np.array(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise CayleyTableError(f'The Cayley table has to be a non-empty square array, got shape {table.shape}.')
        n = table.shape[0]
        self._name = name
        self._element_names = tuple(element_names) if element_names is not None else tuple(map(str, range(n)))
        if len(self._element_names) != n:
            raise CayleyTableError(f'{len(self._element_names)} element names for a group of order {n}.')
        if len(set(self._element_names)) != n:
            raise CayleyTableError('The element names are not unique.')
        self._standard_generators = tuple(int(g) for g in standard_generators)
        if validate:
            _validate_table(table)
        self._inverses = np.argmax(table == 0, axis=1)
        self._table = table
        self._table.flags.writeable = False
        self._name_index = {name_: i for i, name_ in enumerate(self._element_names)}

    def __repr__(self):
        return f'FiniteGroup({self._name or "unnamed"}, order={self.order})'

    def __len__(self):
        return self.order

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and np.array_equal(self._table, other._table)

    def __hash__(self):
        return hash(self._table.tobytes())

    def mul(self, *elements):
        """Product of the passed elements from left to right. The empty product is the identity."""
        result = 0
        for element in elements:
            result = int(self._table[result, element])
        return result

    def inv(self, a):
        """Index of the inverse of ``a``."""
        return int(self._inverses[a])

    def power(self, a, exponent):
        """``a`` to the power ``exponent`` (negative exponents allowed)."""
        if exponent < 0:
            a, exponent = self.inv(a), -exponent
        result = 0
        for _ in range(exponent):
            result = int(self._table[result, a])
        return result

    def element_name(self, a):
        return self._element_names[a]

    def element_index(self, token):
        """
        Resolves an element token to its index.

        Accepted tokens are (checked in this order): an element name, ``e<i>`` for the i-th standard generator
        (1-based) and a decimal element index.

        Args:
            token(str/int): The token to resolve.

        Returns:
            int: The element index.

        Exceptions:
            GroupSpecError: The token does not denote an element of the group.
        """
        if isinstance(token, (int, np.integer)):
            if 0 <= token < self.order:
                return int(token)
            raise GroupSpecError(f'Element index {token} is out of range for a group of order {self.order}.')
        token = str(token).strip()
        if token in self._name_index:
            return self._name_index[token]
        if len(token) > 1 and token[0] == 'e' and token[1:].isdigit():
            position = int(token[1:])
            if 1 <= position <= len(self._standard_generators):
                return self._standard_generators[position - 1]
            raise GroupSpecError(
                f'Generator {token} requested, but {self} has {len(self._standard_generators)} standard generators.'
            )
        if token.isdigit():
            return self.element_index(int(token))
        raise GroupSpecError(f'Unknown element "{token}" of {self}.')

    def is_abelian(self):
        return bool(np.array_equal(self._table, self._table.T))

    def to_dict(self):
        """JSON serializable representation of the Cayley-table file format."""
        return dict(
            order=self.order, table=self._table.tolist(), name=self._name, elements=list(self._element_names)
        )


def _generating_set(table):
    """Greedy generating set of the magma given by the table, built by right multiplication from the identity."""
    n = table.shape[0]
    generators = []
    reached = np.zeros(n, dtype=bool)
    reached[0] = True
    for x in range(n):
        if reached[x]:
            continue
        generators.append(x)
        reached = _right_closure(table, reached, generators)
    return generators


def _right_closure(table, reached, generators):
    reached = reached.copy()
    frontier = np.flatnonzero(reached)
    generators = np.asarray(generators, dtype=np.int64)
    while frontier.size and generators.size:
        products = np.unique(table[np.ix_(frontier, generators)])
        frontier = products[~reached[products]]
        reached[frontier] = True
    return reached


def _validate_table(table):
    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        raise CayleyTableError(f'The Cayley table contains entries outside of 0..{n - 1}.')
    identity_range = np.arange(n)
    if not np.array_equal(table[0], identity_range) or not np.array_equal(table[:, 0], identity_range):
        raise CayleyTableError('Element 0 is not a two-sided identity.')
    sorted_rows = np.sort(table, axis=1)
    sorted_columns = np.sort(table, axis=0)
    if not (sorted_rows == identity_range).all():
        row = int(np.flatnonzero((sorted_rows != identity_range).any(axis=1))[0])
        raise CayleyTableError(f'Row {row} of the Cayley table is not a permutation, inverses are missing.')
    if not (sorted_columns == identity_range[:, None]).all():
        column = int(np.flatnonzero((sorted_columns != identity_range[:, None]).any(axis=0))[0])
        raise CayleyTableError(f'Column {column} of the Cayley table is not a permutation, inverses are missing.')
    # Light's associativity test: it suffices to check (x*g)*y == x*(g*y) for the elements g of a generating set.
    for g in _generating_set(table):
        left = table[table[:, g], :]
        right = table[:, table[g, :]]
        mismatch = np.argwhere(left != right)
        if mismatch.size:
            x, y = (int(v) for v in mismatch[0])
            raise CayleyTableError(
                f'The operation is not associative: ({x}*{g})*{y} != {x}*({g}*{y}).', triple=(x, g, y)
            )


def generated_subgroup(group, elements):
    """
    Subgroup generated by the passed elements.

    Args:
        group(FiniteGroup): The group.
        elements(iterable(int)): Element indices. May be empty.

    Returns:
        frozenset(int): Closure of the elements and the identity under multiplication.
    """
    elements = [int(e) for e in elements]
    assert all(0 <= e < group.order for e in elements), 'Element index out of range.'
    reached = np.zeros(group.order, dtype=bool)
    reached[0] = True
    reached = _right_closure(group.table, reached, elements)
    return frozenset(int(e) for e in np.flatnonzero(reached))


def generates(group, elements):
    """Returns True, if the elements generate the whole group."""
    return len(generated_subgroup(group, elements)) == group.order


def is_irredundant(group, sequence):
    """
    Test for irredundant (minimal) generating sequences.

    Args:
        group(FiniteGroup): The group.
        sequence(iterable(int)): The element sequence.

    Returns:
        bool: True, if the sequence generates the group and no sequence obtained by dropping a single element does.
    """
    sequence = list(sequence)
    if not generates(group, sequence):
        return False
    return not any(generates(group, sequence[:i] + sequence[i + 1:]) for i in range(len(sequence)))


def irredundant_reduce(group, sequence):
    """
    Reduction of a generating sequence to an irredundant one.

    The sequence is scanned from its end to its beginning and every element that is not needed to generate the group
    is removed. An element that is needed once stays needed after further removals, so a single pass suffices. The
    earliest elements of the input are thereby preferred, which makes the result reproducible for a fixed input
    order.

    Args:
        group(FiniteGroup): The group.
        sequence(iterable(int)): A generating sequence.

    Returns:
        GeneratingSequence: The reduced sequence.

    Exceptions:
        GeneratingSequenceError: The input does not generate the group.
    """
    kept = [int(s) for s in sequence]
    if not generates(group, kept):
        raise GeneratingSequenceError(f'The sequence {kept} does not generate {group}.')
    for position in reversed(range(len(kept))):
        candidate = kept[:position] + kept[position + 1:]
        if generates(group, candidate):
            kept = candidate
    return GeneratingSequence(group, kept)


def generating_set(group):
    """Greedy generating set: every element that is not generated by the previously chosen ones is added."""
    return _generating_set(group.table)


def element_order(group, x):
    """Least ``m >= 1`` with ``x^m`` being the identity."""
    order, power = 1, int(x)
    while power != 0:
        power = int(group.table[power, x])
        order += 1
    return order


class GeneratingSequence:
    """
    Ordered irredundant generating sequence ``(h_1, ..., h_d)`` of a group.

    The sequence is validated on construction: it has to generate the group, it must not contain the identity or
    repeated elements and dropping any single element must yield a sequence that does not generate the group.
    """

    @property
    def group(self):
        """FiniteGroup: The generated group."""
        return self._group

    @property
    def elems(self):
        """tuple(int): The element indices ``h_1, ..., h_d``."""
        return self._elems

    @property
    def d(self):
        """int: Length of the sequence."""
        return len(self._elems)

    def __init__(self, group, elems):
        """
        Args:
            group(FiniteGroup): The group.
            elems(iterable(int/str)): Element indices or element tokens as accepted by ``FiniteGroup.element_index``.

        Exceptions:
            GeneratingSequenceError: The sequence is not an irredundant generating sequence.
        """
        self._group = group
        self._elems = tuple(group.element_index(e) for e in elems)
        names = [group.element_name(e) for e in self._elems]
        if group.identity in self._elems:
            raise GeneratingSequenceError(f'The sequence {names} contains the identity.')
        if len(set(self._elems)) != len(self._elems):
            raise GeneratingSequenceError(f'The sequence {names} contains repeated elements.')
        if not generates(group, self._elems):
            raise GeneratingSequenceError(f'The sequence {names} does not generate {group}.')
        if not is_irredundant(group, self._elems):
            raise GeneratingSequenceError(f'The sequence {names} is not irredundant.')

    def __iter__(self):
        return iter(self._elems)

    def __len__(self):
        return len(self._elems)

    def __getitem__(self, item):
        return self._elems[item]

    def __repr__(self):
        return f'GeneratingSequence({", ".join(self.names())})'

    def names(self):
        return [self._group.element_name(e) for e in self._elems]
