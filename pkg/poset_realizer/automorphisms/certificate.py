"""Realization certificates: independent checks that a group action realizes a group as the automorphisms of a poset."""
import logging
from dataclasses import dataclass, field

import numpy as np

from ..core import VerificationError
from ..groups import FiniteGroup, generating_set, group_from_dict
from ..posets import Poset, poset_from_dict, poset_to_dict
from ..settings import get_settings
from .automorphism_group import automorphism_group
from .perm_group import orbit_partition

logger = logging.getLogger(__name__)


@dataclass
class RealizationCertificate:
    """
    Outcome of the verification of an action of a group on a poset.

    ``verdict`` is True iff the action is an injective homomorphism into the automorphisms of the poset and the
    automorphism group has exactly the order of the group, i.e. the group is realized by the poset. ``free`` is
    reported separately; it is part of the verdict only if the certificate was requested with ``require_free``.
    If the automorphism search was skipped, ``aut_order`` is None, ``verified`` is False and the verdict is False:
    the checks of the action alone do not establish a realization.
    """
    group: FiniteGroup
    poset: Poset
    action: np.ndarray
    order_preserving: bool
    homomorphism: bool
    injective: bool
    free: bool
    orbit_count: int
    aut_order: int = None
    automorphisms: object = None
    require_free: bool = False
    verified: bool = True
    method: str = None
    params: dict = field(default_factory=dict)
    audit: dict = None

    @property
    def verdict(self):
        verdict = self.order_preserving and self.homomorphism and self.injective
        if self.require_free:
            verdict = verdict and self.free
        return bool(verdict and self.verified and self.aut_order == self.group.order)

    def to_dict(self, embed=True):
        """
        JSON object of the certificate.

        Args:
            embed(bool): Embed the Cayley table, the poset and the action, so that the certificate can be rechecked
                by ``recheck_certificate`` without further input.
        """
        data = dict(
            group_name=self.group.name,
            group_order=self.group.order,
            poset_points=len(self.poset),
            poset_hash=self.poset.digest(),
            aut_order=self.aut_order,
            orbit_count=self.orbit_count,
            free=self.free,
            order_preserving=self.order_preserving,
            homomorphism=self.homomorphism,
            injective=self.injective,
            require_free=self.require_free,
            verified=self.verified,
            verdict=self.verdict,
            method=self.method,
            params=self.params,
        )
        if self.audit is not None:
            data['adjacency_audit'] = self.audit
        if embed:
            data['group'] = self.group.to_dict()
            data['poset'] = poset_to_dict(self.poset)
            data['action'] = self.action.tolist()
        return data


def _check_action_shape(group, poset, action):
    try:
        action = np.array(action, dtype=np.int64)
    except (TypeError, ValueError):
        raise VerificationError('The action has to be an integer array of shape (|G|, |P|).')
    n = len(poset)
    if action.shape != (group.order, n):
        raise VerificationError(f'The action has shape {action.shape}, expected ({group.order}, {n}).')
    if n and not (np.sort(action, axis=1) == np.arange(n)).all():
        row = int(np.flatnonzero((np.sort(action, axis=1) != np.arange(n)).any(axis=1))[0])
        raise VerificationError(f'The action of the element {group.element_name(row)} is not a permutation.')
    action.flags.writeable = False
    return action


def verify_realization(group, poset, action, require_free=False, verify=True, workers=None, timeout=None,
                       point_cap=None):
    """
    Checks an action of a group on a poset.

    The following properties are checked:
        * every ``action[g]`` is an automorphism of the poset,
        * ``action[g * h] == action[g] o action[h]`` (checked for ``g`` of a generating set and all ``h``, which is
          equivalent),
        * the action is injective,
        * the action is free (no element besides the identity fixes a point),
        * the automorphism group of the poset has the order of the group (skipped if ``verify`` is False).

    Args:
        group(FiniteGroup): The group.
        poset(Poset): The poset.
        action(array-like(int)): ``action[g, x]`` is the index of the image of the point ``x`` under ``g``.
        require_free(bool): Make freeness part of the verdict.
        verify(bool): Compute the automorphism group. Otherwise the certificate is marked as unverified and its
            verdict is False.
        workers, timeout, point_cap: Passed to ``automorphism_group``.

    Returns:
        RealizationCertificate: The certificate.

    Exceptions:
        VerificationError: The action is not an array of permutations of shape (|G|, |P|), or the automorphism
            group order is inconsistent with its closure enumeration.
    """
    action = _check_action_shape(group, poset, action)
    n = len(poset)
    lt = poset.lt
    order_preserving = all(np.array_equal(lt[np.ix_(row, row)], lt) for row in action)
    table = group.table
    homomorphism = all(np.array_equal(action[table[s]], action[s][action]) for s in generating_set(group))
    identity_rows = np.flatnonzero((action == np.arange(n)).all(axis=1))
    injective = identity_rows.tolist() == [0]
    free = not (action[1:] == np.arange(n)).any() if n else True
    orbit_count = len(orbit_partition([tuple(row) for row in action.tolist()], n))
    certificate = RealizationCertificate(
        group=group, poset=poset, action=action, order_preserving=order_preserving, homomorphism=bool(homomorphism),
        injective=injective, free=bool(free), orbit_count=orbit_count, require_free=require_free, verified=verify,
    )
    if verify:
        automorphisms = automorphism_group(poset, workers=workers, timeout=timeout, point_cap=point_cap)
        closure_order = automorphisms.closure_order(get_settings()['closure_crosscheck_cap'])
        if closure_order is not None and closure_order != automorphisms.order:
            raise VerificationError(
                f'The stabilizer chain order {automorphisms.order} differs from the closure order {closure_order}.'
            )
        certificate.automorphisms = automorphisms
        certificate.aut_order = automorphisms.order
    logger.info(
        'Certificate of %s on %d points: aut order %s, verdict %s.', group.name, n, certificate.aut_order,
        certificate.verdict
    )
    return certificate


def recheck_certificate(data, workers=None, timeout=None, point_cap=None):
    """
    Recomputes a certificate from its embedded JSON object.

    Returns:
        tuple(RealizationCertificate, bool): The recomputed certificate and whether its verdict and automorphism
        order agree with the recorded ones.

    Exceptions:
        VerificationError: The object does not embed the group, the poset and the action.
    """
    missing = [key for key in ('group', 'poset', 'action') if key not in data]
    if missing:
        raise VerificationError(f'The certificate does not embed {", ".join(missing)}.')
    group = group_from_dict(data['group'], default_name=data.get('group_name'))
    poset = poset_from_dict(data['poset'])
    certificate = verify_realization(
        group, poset, data['action'], require_free=bool(data.get('require_free', False)), workers=workers,
        timeout=timeout, point_cap=point_cap
    )
    certificate.method = data.get('method')
    certificate.params = data.get('params', {})
    # an unverified record makes no claim to contradict
    agrees = not data.get('verified', True) or (
        certificate.verdict == data.get('verdict') and certificate.aut_order == data.get('aut_order')
    )
    return certificate, agrees
