import json

import pytest

from poset_realizer.beta_search import KNOWN_BOUNDS_FILE, KnownBounds, cyclic_prime_power_bounds
from poset_realizer.constructions import CyclicPrimePowerConstruction
from poset_realizer.core import VerificationError


@pytest.fixture
def bounds():
    return KnownBounds.load()


@pytest.fixture
def table_data():
    with open(KNOWN_BOUNDS_FILE) as f:
        return json.load(f)


@pytest.mark.parametrize(['p', 'k', 'expected'], [
    [2, 1, dict(alpha=2, beta_lower=2, beta_upper=2)],
    [2, 2, dict(alpha=10, beta_lower=8, beta_upper=20)],
    [3, 1, dict(alpha=9, beta_lower=6, beta_upper=15)],
    [5, 2, dict(alpha=35, beta_lower=50, beta_upper=65)],
    [7, 1, dict(alpha=14, beta_lower=14, beta_upper=21)],
    [13, 1, dict(alpha=26, beta_lower=26, beta_upper=39)],
])
def test_formulas(p, k, expected):
    assert cyclic_prime_power_bounds(p, k) == expected


@pytest.mark.parametrize(['p', 'k'], [[2, 2], [2, 3], [3, 1], [3, 2], [5, 1], [7, 1], [7, 2], [11, 1]])
def test_upper_bound_is_the_construction_size(p, k):
    assert cyclic_prime_power_bounds(p, k)['beta_upper'] == CyclicPrimePowerConstruction(p, k).expected_size


def test_shipped_table_is_consistent(bounds):
    bounds.check()


def test_entries(bounds):
    assert 'C3' in bounds
    assert 'C6' not in bounds
    assert bounds['C3']['beta'] == 9
    assert bounds['C2']['beta'] == 2
    assert bounds['C25']['beta'] is None
    assert all(tag in bounds.sources for tag in bounds['C3']['source'])


def test_comparison_table_order(bounds):
    rows = bounds.comparison_table()
    assert [row['group'] for row in rows][:4] == ['C2', 'C4', 'C8', 'C16']
    assert all(row['beta_lower'] <= row['beta_upper'] for row in rows)
    assert len(rows) == len(bounds.descriptors())


def test_graph_values_do_not_exceed_poset_bounds(bounds):
    assert all(row['alpha'] <= row['beta_lower'] for row in bounds.comparison_table() if row['order'] > 10)


@pytest.mark.parametrize(['key', 'value'], [['beta_lower', 30], ['beta', 1], ['alpha', 3], ['source', ['missing']]])
def test_inconsistent_entries(table_data, key, value):
    entry = next(e for e in table_data['groups'] if e['group'] == 'C9')
    entry[key] = value
    with pytest.raises(VerificationError):
        KnownBounds(table_data['groups'], table_data['sources']).check()
