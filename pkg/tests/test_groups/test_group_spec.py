import json
import warnings

import numpy as np
import pytest

import poset_realizer.groups as groups
from poset_realizer.core import CapExceededError, CayleyTableError, GroupSpecError


class TestGroupFromSpec:

    def test_cyclic(self):
        c4 = groups.group_from_spec('C4')
        assert c4.order == 4
        assert groups.element_order(c4, 1) == 4

    def test_elementary_abelian(self):
        group = groups.group_from_spec('C2^3')
        assert group.order == 8
        assert group.name == 'C2^3'
        assert all(groups.element_order(group, x) == 2 for x in range(1, 8))
        assert len(group.standard_generators) == 3

    @pytest.mark.parametrize(['spec', 'order'], [
        ['S4', 24], ['D4', 8], ['Q8', 8], ['S3xC2', 12], ['C3xC3', 9], ['D3^2', 36], ['C1', 1], [' C5 ', 5],
    ])
    def test_orders(self, spec, order):
        assert groups.group_from_spec(spec).order == order

    @pytest.mark.parametrize('spec', ['', 'Z4', 'C', 'C4^', 'C0', 'C2^0', 'C2xx', 'Q9', 'c4'])
    def test_parse_errors(self, spec):
        with pytest.raises(GroupSpecError):
            groups.group_from_spec(spec)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            groups.group_from_spec('C2^13')


class TestCayleyTableFiles:

    def test_roundtrip(self, tmp_path):
        path = tmp_path / 'q8.json'
        path.write_text(json.dumps(groups.quaternion().to_dict()))
        group = groups.group_from_spec(f'file:{path}')
        assert group == groups.quaternion()
        assert group.element_names == groups.quaternion().element_names
        assert group.name == 'Q8'

    def test_identity_renumbering(self, tmp_path):
        # C3 with the identity stored as element 2
        data = dict(order=3, table=[[1, 2, 0], [2, 0, 1], [0, 1, 2]], elements=['a', 'b', 'e'])
        path = tmp_path / 'c3.json'
        path.write_text(json.dumps(data))
        with pytest.warns(Warning):
            group = groups.load_cayley_table(str(path))
        assert group.element_name(0) == 'e'
        assert group.order == 3
        assert groups.element_order(group, 1) == 3

    def test_declared_order_mismatch(self):
        with pytest.raises(CayleyTableError):
            groups.group_from_dict(dict(order=3, table=[[0, 1], [1, 0]]))

    def test_no_identity(self):
        with pytest.raises(CayleyTableError, match='identity'):
            groups.group_from_dict(dict(table=[[1, 1], [1, 1]]))

    def test_non_associative_file_reports_triple(self, tmp_path):
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        path = tmp_path / 'loop.json'
        path.write_text(json.dumps(dict(order=5, table=table)))
        with pytest.raises(CayleyTableError) as info:
            groups.group_from_spec(f'file:{path}')
        assert len(info.value.triple) == 3

    def test_missing_file(self, tmp_path):
        with pytest.raises(GroupSpecError):
            groups.group_from_spec(f'file:{tmp_path / "missing.json"}')

    def test_missing_table_entry(self):
        with pytest.raises(GroupSpecError):
            groups.group_from_dict(dict(order=2))

    def test_valid_file_without_warning(self, tmp_path):
        path = tmp_path / 'c4.json'
        path.write_text(json.dumps(dict(order=4, table=(np.add.outer(range(4), range(4)) % 4).tolist())))
        with warnings.catch_warnings():
            warnings.simplefilter('error')
            assert groups.load_cayley_table(str(path)).order == 4
