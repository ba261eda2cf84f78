import json
import os

from ..core import VerificationError

#: Path of the shipped table of known bounds.
KNOWN_BOUNDS_FILE = os.path.join(os.path.dirname(__file__), 'data', 'known_bounds.json')


def cyclic_prime_power_bounds(p, k):
    """
    Known values for the cyclic group of order ``p^k``.

    Returns:
        dict: ``alpha`` (minimum number of vertices of a realizing graph), ``beta_lower`` and ``beta_upper`` (bounds
        on the minimum number of points of a realizing poset).
    """
    n = p ** k
    if n == 2:
        return dict(alpha=2, beta_lower=2, beta_upper=2)
    if p == 2:
        return dict(alpha=n + 6, beta_lower=2 * n, beta_upper=2 * n + 12)
    if p in (3, 5):
        return dict(alpha=n + 2 * p, beta_lower=2 * n, beta_upper=2 * n + 3 * p)
    return dict(alpha=n + p, beta_lower=2 * n, beta_upper=2 * n + p)


class KnownBounds:
    """
    Table of known minimum realizer sizes of cyclic groups of prime power order.

    Every entry holds the group descriptor, ``alpha`` for graphs, the bounds ``beta_lower <= beta_upper`` for posets,
    the exact ``beta`` where it is known and the citation tags of its sources.
    """

    def __init__(self, entries, sources=None):
        self._entries = {entry['group']: dict(entry) for entry in entries}
        self._sources = dict(sources or {})

    @classmethod
    def load(cls, path=None):
        """Loads the table. Default: the table shipped with the package."""
        with open(path or KNOWN_BOUNDS_FILE, 'r') as f:
            data = json.load(f)
        return cls(data['groups'], data.get('sources'))

    @property
    def sources(self):
        return dict(self._sources)

    def descriptors(self):
        return list(self._entries)

    def __contains__(self, descriptor):
        return descriptor in self._entries

    def __getitem__(self, descriptor):
        return dict(self._entries[descriptor])

    def check(self):
        """
        Consistency of the table: the bounds are ordered, the exact values lie within them and all entries agree with
        ``cyclic_prime_power_bounds``.

        Exceptions:
            VerificationError: An entry is inconsistent.
        """
        for descriptor, entry in self._entries.items():
            if not entry['beta_lower'] <= entry['beta_upper']:
                raise VerificationError(f'{descriptor}: beta_lower exceeds beta_upper.')
            exact = entry.get('beta')
            if exact is not None and not entry['beta_lower'] <= exact <= entry['beta_upper']:
                raise VerificationError(f'{descriptor}: the exact beta lies outside of the bounds.')
            expected = cyclic_prime_power_bounds(entry['p'], entry['k'])
            actual = {key: entry[key] for key in expected}
            if actual != expected:
                raise VerificationError(f'{descriptor}: {actual} differs from the known formulas {expected}.')
            unknown = [tag for tag in entry['source'] if tag not in self._sources]
            if unknown:
                raise VerificationError(f'{descriptor}: unknown source tags {unknown}.')

    def comparison_table(self):
        """Rows comparing the graph and the poset values, ordered by prime and exponent."""
        rows = []
        for entry in sorted(self._entries.values(), key=lambda e: (e['p'], e['k'])):
            rows.append(dict(
                group=entry['group'], order=entry['p'] ** entry['k'], alpha=entry['alpha'],
                beta_lower=entry['beta_lower'], beta_upper=entry['beta_upper'], beta=entry.get('beta'),
                source=list(entry['source']),
            ))
        return rows
