import logging
import math
from concurrent.futures import ProcessPoolExecutor

from ..core import CapExceededError
from ..settings import get_settings
from .perm_group import PermGroup, orbit_of
from .refinement import Clock, cell_members, find_isomorphism, individualize, initial_colors, refine, target_cell

logger = logging.getLogger(__name__)

_worker_state = {}


def _init_worker(poset, deadline):
    _worker_state['poset'] = poset
    _worker_state['deadline'] = deadline


def _search_task(colorings):
    poset = _worker_state['poset']
    left, right = colorings
    return find_isomorphism(poset, poset, left, right, Clock(deadline=_worker_state['deadline']))


def automorphism_group(poset, fixing=(), workers=None, timeout=None, point_cap=None):
    """
    Automorphism group of a poset.

    The group is computed along a stabilizer chain. On every level the first point ``b`` of the target cell of the
    refined coloring becomes the next base point. For every other point ``c`` of that cell that is not yet known to
    be in the orbit of ``b``, an individualization-refinement search looks for an automorphism that fixes the previous
    base points and maps ``b`` to ``c``. The group order is the product of the orbit lengths of the base points.

    Args:
        poset(Poset): The poset.
        fixing(iterable): Point labels that have to be fixed. The result is their pointwise stabilizer.
        workers(None/int): Number of worker processes. None takes the ``workers`` setting.
        timeout(None/float): Timeout in seconds. None takes the ``timeout`` setting.
        point_cap(None/int): Largest accepted poset size. None takes the ``point_cap`` setting.

    Returns:
        PermGroup: The automorphism group. The generators are sorted lexicographically and do not depend on the
        number of workers.

    Exceptions:
        CapExceededError: The poset has more points than the cap.
        SearchTimeout: The search did not finish in time.
    """
    settings = get_settings(workers=workers, timeout=timeout, point_cap=point_cap)
    n = len(poset)
    if n > settings['point_cap']:
        raise CapExceededError(f'The poset has {n} points, the configured cap is {settings["point_cap"]}.')
    clock = Clock(settings['timeout'])
    colors = initial_colors([poset])[0]
    for label in fixing:
        colors = refine([poset], [individualize(colors, poset.index(label))])[0]

    executor = None
    if settings['workers'] > 1:
        executor = ProcessPoolExecutor(
            max_workers=settings['workers'], initializer=_init_worker, initargs=(poset, clock.deadline)
        )
    try:
        base, orbit_sizes, generators = [], [], []
        while True:
            color = target_cell(colors)
            if color is None:
                break
            cell = cell_members(colors, color)
            b = cell[0]
            level_generators = _level_generators(poset, colors, b, cell[1:], clock, executor, settings['workers'])
            orbit_sizes.append(len(orbit_of(b, level_generators)))
            generators.extend(level_generators)
            base.append(b)
            colors = refine([poset], [individualize(colors, b)])[0]
            logger.debug('Base point %d with orbit length %d.', b, orbit_sizes[-1])
    finally:
        if executor is not None:
            executor.shutdown()
    order = math.prod(orbit_sizes)
    logger.debug('Automorphism group of %r has order %d.', poset, order)
    return PermGroup(n, generators, order=order, base=base, orbit_sizes=orbit_sizes)


def _level_generators(poset, colors, b, candidates, clock, executor, workers=1):
    """Automorphisms that fix the individualized points and move ``b`` into every point of its orbit."""
    source = individualize(colors, b)
    found = []
    if executor is None:
        for c in candidates:
            if c in orbit_of(b, found):
                continue
            perm = find_isomorphism(poset, poset, source, individualize(colors, c), clock)
            if perm is not None:
                found.append(tuple(perm))
        return found
    # all candidates are searched in parallel, the results are accepted in the serial order
    tasks = [(source, individualize(colors, c)) for c in candidates]
    results = list(executor.map(_search_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    for c, perm in zip(candidates, results):
        if perm is not None and c not in orbit_of(b, found):
            found.append(tuple(perm))
    return found
