import itertools
import logging
import time
from dataclasses import dataclass, field

from ..automorphisms import PermGroup, automorphism_group, compose, group_order, is_cyclic_of_order
from ..core import CapExceededError, VerificationError
from ..groups import element_order, generating_set, irredundant_reduce
from ..posets import poset_to_dict, twin_pairs
from ..settings import get_settings
from .enumeration import EnumerationReport, enumerate_classes

logger = logging.getLogger(__name__)


def is_cyclic_group(group):
    return any(element_order(group, x) == group.order for x in range(group.order))


def prime_power(n):
    """``(p, k)`` with ``n = p^k`` for a prime ``p`` and ``k >= 1``, or None."""
    if n < 2:
        return None
    p = next(q for q in range(2, n + 1) if n % q == 0)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


def _homomorphism_from_images(group, generators, images, degree):
    """
    Extends ``generators[i] -> images[i]`` to a map on all group elements.

    Returns:
        list(tuple(int)) / None: The images of all elements, or None if the assignment is not a homomorphism.
    """
    table = group.table
    phi = [None] * group.order
    phi[0] = tuple(range(degree))
    queue = [0]
    for x in queue:
        for s, image in zip(generators, images):
            y = int(table[x, s])
            candidate = compose(phi[x], image)
            if phi[y] is None:
                phi[y] = candidate
                queue.append(y)
            elif phi[y] != candidate:
                return None
    return phi


def is_isomorphic_to(group, automorphisms, cap=None):
    """
    Brute force isomorphism test between a FiniteGroup and a permutation group.

    All tuples of permutations are tried as images of an irredundant generating sequence of the group. A tuple
    defines an isomorphism iff it extends consistently to a homomorphism that is injective.

    Exceptions:
        CapExceededError: The group is larger than the ``realizes_group_cap`` setting.
    """
    cap = cap or get_settings()['realizes_group_cap']
    if group.order != automorphisms.order:
        return False
    if group.order > cap:
        raise CapExceededError(f'The brute force isomorphism is limited to groups of order {cap}.')
    if group.order == 1:
        return True
    sequence = irredundant_reduce(group, generating_set(group))
    candidates = [p for p in automorphisms.elements() if p != tuple(range(automorphisms.degree))]
    for images in itertools.product(candidates, repeat=sequence.d):
        phi = _homomorphism_from_images(group, sequence.elems, images, automorphisms.degree)
        if phi is not None and len(set(phi)) == group.order:
            return True
    return False


def realizes(poset, group, automorphisms=None):
    """
    True, iff the automorphism group of the poset is isomorphic to the group.

    Cyclic groups are compared by ``is_cyclic_of_order``, all other groups by a brute force isomorphism search.

    Args:
        poset(Poset): The poset.
        group(FiniteGroup): The group.
        automorphisms(PermGroup): The automorphism group of the poset, if it is already known.
    """
    automorphisms = automorphisms or automorphism_group(poset)
    if automorphisms.order != group.order:
        return False
    if is_cyclic_group(group):
        return is_cyclic_of_order(automorphisms, group.order, get_settings()['enumeration_element_cap'])
    return is_isomorphic_to(group, automorphisms)


@dataclass
class BetaResult:
    """
    Result of the search for the smallest realizer of a group.

    ``beta`` is the smallest size with a realizer or None, if there is none up to ``max_points``.
    """
    group: object
    max_points: int
    beta: int = None
    witness: object = None
    reports: list = field(default_factory=list)

    @property
    def verdict(self):
        if self.beta is None:
            return f'beta({self.group.name}) > {self.max_points}'
        return f'beta({self.group.name}) = {self.beta}'

    def to_dict(self):
        return dict(
            group=self.group.name,
            max_points=self.max_points,
            sizes=[report.to_dict() for report in self.reports],
            beta=self.beta,
            verdict=self.verdict,
            witness=None if self.witness is None else poset_to_dict(self.witness),
        )


def beta(group, max_points, workers=None):
    """
    Smallest number of points of a poset that realizes the group, searched up to ``max_points``.

    All posets are enumerated size by size. The search stops after the first size with a realizer; that size is
    enumerated completely, and its first realizer in the enumeration order is the witness.

    Args:
        group(FiniteGroup): The group.
        max_points(int): Largest searched size, at most the ``enumeration_cap`` setting.
        workers(None/int): Number of worker processes for the enumeration.

    Returns:
        BetaResult: The value or the verdict ``beta > max_points`` together with a report per size.
    """
    settings = get_settings(workers=workers)
    if max_points > settings['enumeration_cap']:
        raise CapExceededError(f'The search is limited to {settings["enumeration_cap"]} points, got {max_points}.')
    result = BetaResult(group, max_points)
    for n in range(1, max_points + 1):
        start = time.perf_counter()
        count, witness = 0, None
        for node in enumerate_classes(n, workers):
            count += 1
            if witness is None and group_order(node.generators, n) == group.order:
                automorphisms = PermGroup(n, node.generators, order=group.order)
                if realizes(node.poset, group, automorphisms):
                    witness = node.poset
        report = EnumerationReport(n, count, witness, time.perf_counter() - start)
        result.reports.append(report)
        logger.info('Size %d: %d posets, realizer found: %s.', n, count, witness is not None)
        if witness is not None:
            result.beta, result.witness = n, witness
            break
    return result


@dataclass
class OrbitAudit:
    """
    Orbit sizes of a realizer of a cyclic group of prime power order ``p^k``.

    A realizer of a group of order ``p^k > 2`` needs at least two orbits of size ``p^k``. ``swap_witness`` holds a
    transposition that is an automorphism if a realizer had a single such orbit. For ``C2`` the transposition is the
    generator itself, so one orbit suffices.
    """
    orbit_sizes: tuple
    full_orbits: int
    required: int
    passed: bool
    swap_witness: tuple = None

    def to_dict(self):
        return dict(orbit_sizes=list(self.orbit_sizes), full_orbits=self.full_orbits, required=self.required,
                    passed=self.passed, swap_witness=None if self.swap_witness is None else list(self.swap_witness))


def swap_witness(poset, orbit):
    """
    Transposition of two points of an orbit that is an automorphism of the poset.

    Two incomparable points with equal strict down-sets and up-sets can be swapped while all other points stay fixed.

    Returns:
        tuple(int) / None: The image array of the transposition, or None if the orbit contains no such pair.
    """
    orbit = set(orbit)
    for x, y in twin_pairs(poset):
        if x in orbit and y in orbit:
            permutation = list(range(len(poset)))
            permutation[x], permutation[y] = y, x
            if not poset.is_automorphism(permutation):
                raise VerificationError(f'Swapping the twins {x} and {y} is not an automorphism.')
            return tuple(permutation)
    return None


def orbit_size_audit(poset, group, automorphisms=None):
    """
    Checks that a realizer of a cyclic group of order ``p^k`` has at least two orbits of size ``p^k``.

    Args:
        poset(Poset): A realizer of the group.
        group(FiniteGroup): Cyclic group of prime power order.
        automorphisms(PermGroup): The automorphism group of the poset, if it is already known.

    Returns:
        OrbitAudit: The orbit sizes in descending order and the outcome.

    Exceptions:
        VerificationError: The group is not cyclic of prime power order or the poset does not realize it.
    """
    if prime_power(group.order) is None or not is_cyclic_group(group):
        raise VerificationError(f'{group.name} is not a cyclic group of prime power order.')
    automorphisms = automorphisms or automorphism_group(poset)
    if not realizes(poset, group, automorphisms):
        raise VerificationError(f'The poset does not realize {group.name}.')
    sizes = tuple(sorted((len(orbit) for orbit in automorphisms.orbits), reverse=True))
    full = sum(1 for size in sizes if size == group.order)
    required = 1 if group.order == 2 else 2
    witness = None
    if full < 2:
        largest = max(automorphisms.orbits, key=len)
        witness = swap_witness(poset, largest)
    return OrbitAudit(sizes, full, required, full >= required, witness)
