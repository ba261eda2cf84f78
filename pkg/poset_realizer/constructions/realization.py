from dataclasses import dataclass, field

import numpy as np

from ..automorphisms import verify_realization
from ..core import ConstructionError
from ..groups import FiniteGroup
from ..posets import Poset, transitive_closure


@dataclass
class ConstructedRealization:
    """
    Poset built by a construction together with the canonical action of the group on it.

    Attributes:
        poset(Poset): The poset. The labels are pairs ``(element or index name, level)``.
        group(FiniteGroup): The realized group.
        action(ndarray(int)): ``action[g, x]`` is the index of the image of point ``x`` under the element ``g``.
        method(str): Tag of the construction.
        params(dict): JSON serializable parameters of the construction.
    """
    poset: Poset
    group: FiniteGroup
    action: np.ndarray
    method: str
    params: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.poset)

    def certificate(self, require_free=False, verify=True, workers=None, timeout=None, point_cap=None):
        """Verifies the canonical action. See ``verify_realization``."""
        certificate = verify_realization(
            self.group, self.poset, self.action, require_free=require_free, verify=verify, workers=workers,
            timeout=timeout, point_cap=point_cap
        )
        certificate.method = self.method
        certificate.params = self.params
        return certificate

    def action_to_dict(self):
        """Action JSON object: the image array of every group element, keyed by the element index."""
        return dict(
            group=self.group.name,
            elements=list(self.group.element_names),
            action={str(g): row for g, row in enumerate(self.action.tolist())},
        )


def realization_from_covers(points, covers, group, action, method, params):
    """
    Builds a realization from declared cover pairs.

    The order is the transitive closure of the declared pairs. The declared pairs have to be exactly the cover
    relation of the resulting order; a construction that declares implied pairs or misses covers is defective.

    Args:
        points(list): The point labels.
        covers(iterable(tuple(int, int))): Index pairs ``(x, y)`` with ``y`` covering ``x``.
        group(FiniteGroup): The group.
        action(array-like(int)): The canonical action of shape (|G|, |P|).
        method(str): Tag of the construction.
        params(dict): Parameters of the construction.

    Exceptions:
        ConstructionError: The declared covers differ from the transitive reduction of the order.
    """
    n = len(points)
    relation = np.zeros((n, n), dtype=bool)
    covers = sorted(set(covers))
    for x, y in covers:
        relation[x, y] = True
    poset = Poset(points, transitive_closure(relation), validate=False)
    if poset.cover_pairs() != covers:
        raise ConstructionError(
            f'The declared covers of the {method} construction differ from the transitive reduction of its order.'
        )
    return ConstructedRealization(poset, group, np.asarray(action, dtype=np.int64), method, params)
