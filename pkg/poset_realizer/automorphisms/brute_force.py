"""Exhaustive reference implementations for cross-checks of the refinement engine on small posets."""
from ..core import CapExceededError


def brute_force_automorphisms(poset, cap=10):
    """
    All automorphisms of a small poset by exhaustive backtracking.

    The points are assigned one after another to all unused images. A partial assignment is abandoned as soon as
    it violates ``x < y <=> p(x) < p(y)`` on the assigned points. No invariant other than the order itself is used.

    Args:
        poset(Poset): A poset with at most ``cap`` points.
        cap(int): Largest accepted poset size.

    Yields:
        tuple(int): Image arrays of the automorphisms in lexicographic order.
    """
    n = len(poset)
    if n > cap:
        raise CapExceededError(f'The brute force search is limited to {cap} points, the poset has {n}.')
    lt = poset.lt.tolist()
    images = [0] * n
    used = [False] * n

    def consistent(x, y):
        for z in range(x):
            w = images[z]
            if lt[z][x] != lt[w][y] or lt[x][z] != lt[y][w]:
                return False
        return True

    def assign(x):
        if x == n:
            yield tuple(images)
            return
        for y in range(n):
            if not used[y] and consistent(x, y):
                images[x], used[y] = y, True
                yield from assign(x + 1)
                used[y] = False

    yield from assign(0)


def brute_force_automorphism_count(poset, cap=10):
    return sum(1 for _ in brute_force_automorphisms(poset, cap))
