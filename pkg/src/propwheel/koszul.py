"""Permutations and Koszul signs.

Every sign in the package is produced here.  Permutations are 1-indexed:
``Permutation((2, 3, 1))`` sends 1 -> 2, 2 -> 3, 3 -> 1.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Sequence


class Permutation(tuple):
    """A bijection of {1..n}, stored as the tuple of images."""

    def __new__(cls, images: Iterable[int] = ()):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(images)

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n or x in seen:
                    raise ValueError(f"bad cycle {tuple(cyc)} for n={n}")
                seen.add(x)
            for k, x in enumerate(cyc):
                images[x - 1] = cyc[(k + 1) % len(cyc)]
        return cls(images)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """``self o other``: apply ``other`` first."""
        if len(self) != len(other):
            raise ValueError("arity mismatch")
        return Permutation(self[other[i] - 1] for i in range(len(other)))

    __matmul__ = compose

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, x in enumerate(self, 1):
            inv[x - 1] = i
        return Permutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its minimum."""
        seen, out = set(), []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (len(self) - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def cycle_str(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({tuple(self)})"


def all_permutations(n: int):
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def adjacent_transpositions(n: int) -> list[Permutation]:
    return [Permutation.transposition(n, k, k + 1) for k in range(1, n)]


def inversions(seq: Sequence) -> int:
    """Number of pairs i < j with seq[i] > seq[j]."""
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


def signature(p: Sequence[int]) -> int:
    return sort_sign(p)


def sort_sign(seq: Sequence) -> int:
    """Sign of the permutation that sorts ``seq`` (entries distinct)."""
    # parity is n minus the number of cycles of the sorting permutation
    order = sorted(range(len(seq)), key=seq.__getitem__)
    seen = [False] * len(seq)
    swaps = 0
    for start in range(len(seq)):
        if seen[start]:
            continue
        k = start
        while not seen[k]:
            seen[k] = True
            k = order[k]
            swaps += 1
        swaps -= 1
    return -1 if swaps % 2 else 1


def koszul_sign(p: Sequence[int], degrees: Sequence[int]) -> int:
    """Sign of moving factor ``i`` (of degree ``degrees[i-1]``) to slot ``p(i)``.

    Product of ``(-1)**(d_a*d_b)`` over the pairs whose order ``p`` inverts.
    """
    if len(p) != len(degrees):
        raise ValueError("arity mismatch")
    for d in degrees:
        if d < 0:
            raise ValueError(f"negative degree {d}")
    n = len(p)
    odd = 0
    for a in range(n):
        for b in range(a + 1, n):
            if p[a] > p[b] and degrees[a] % 2 and degrees[b] % 2:
                odd += 1
    return -1 if odd % 2 else 1


def restrict_and_reindex(p: Permutation, subset: Iterable[int]) -> Permutation:
    """Permutation of {1..|S|} induced by ``p: S -> p(S)``.

    Both ``S`` and ``p(S)`` are enumerated in increasing order.
    """
    S = sorted(set(subset))
    n = len(p)
    for s in S:
        if not 1 <= s <= n:
            raise ValueError(f"{s} is not in 1..{n}")
    image = sorted(p(s) for s in S)
    rank = {v: k for k, v in enumerate(image, 1)}
    return Permutation(rank[p(s)] for s in S)
