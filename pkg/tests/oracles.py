"""Slow reference implementations used as test oracles.

Everything here works on plain Python sets and enumerates pairs directly;
nothing is shared with the package's bit-vector kernel.
"""

from itertools import combinations
from math import gcd


def dilated_sum(a, k, b):
    return {x + k * y for x in a for y in b}


def residue_sum(a, b, n):
    return {(x + y) % n for x in a for y in b}


def classes(a, k):
    """{offset: [elements]} for the residue split of a."""
    out = {}
    for x in a:
        out.setdefault(x % k, []).append(x)
    return out


def delta(a, k, part_r, part_s):
    return dilated_sum(part_r, k, a) - dilated_sum(part_r, k, part_s)


def canonical_family(size, diameter, gcd_one=True, reflection=False):
    """All 0 in A within [0, D] of the given size, filtered directly from the definition."""
    out = []
    for rest in combinations(range(1, diameter + 1), size - 1):
        a = (0,) + rest
        if gcd_one and size > 1:
            g = 0
            for x in a:
                g = gcd(g, x)
            if g != 1:
                continue
        if reflection:
            m = max(a)
            if sorted(m - x for x in a) < list(a):
                continue
        out.append(a)
    return sorted(out)


def min_size(k, size, diameter, **kw):
    return min(len(dilated_sum(a, k, a)) for a in canonical_family(size, diameter, **kw))
