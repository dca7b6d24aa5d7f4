"""Exact counting and enumeration of surjections and set partitions."""
from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb


def surjection_count(q: int, l: int) -> int:
    """|Surj(q, l)| by inclusion-exclusion."""
    if q < 0 or l < 0:
        raise ValueError("negative argument")
    return sum((-1) ** k * comb(l, k) * (l - k) ** q for k in range(l + 1))


@lru_cache(maxsize=None)
def stirling2(q: int, j: int) -> int:
    if q < 0 or j < 0:
        raise ValueError("negative argument")
    if q == j:
        return 1
    if q == 0 or j == 0:
        return 0
    return j * stirling2(q - 1, j) + stirling2(q - 1, j - 1)


def bell(q: int) -> int:
    return sum(stirling2(q, j) for j in range(q + 1))


@lru_cache(maxsize=None)
def partitions_into_parts(m: int, n: int) -> int:
    """Number of partitions of the integer m into exactly n positive parts."""
    if m < 0 or n < 0:
        raise ValueError("negative argument")
    if m == 0 and n == 0:
        return 1
    if m <= 0 or n <= 0 or n > m:
        return 0
    return partitions_into_parts(m - 1, n - 1) + partitions_into_parts(m - n, n)


def surjections(q: int, l: int):
    """Surjections {1..q} -> {1..l} as tuples (f(1), ..., f(q)), lexicographic."""
    for f in itertools.product(range(1, l + 1), repeat=q):
        if len(set(f)) == l:
            yield f


def set_partitions(items):
    """Set partitions of ``items`` (a sorted sequence), blocks ordered by minimum."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]


def set_partitions_into(items, j: int):
    for p in set_partitions(items):
        if len(p) == j:
            yield sorted(p, key=min)


def dimension_formula(q: int, l: int) -> int:
    """sum over m of C(q,m) |Surj(m,l)| Bell(q-m)."""
    return sum(comb(q, m) * surjection_count(m, l) * bell(q - m) for m in range(l, q + 1))


