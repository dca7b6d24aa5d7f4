"""Exact rational linear algebra on sparse vectors.

Vectors are dicts ``{key: Fraction}`` with sortable keys.  Pivots are the
smallest key of each reduced row, so elimination order is deterministic.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence


class InconsistentSystem(ArithmeticError):
    pass


def vadd(acc: dict, v: Mapping, scale=1) -> dict:
    for k, c in v.items():
        x = acc.get(k, 0) + scale * c
        if x:
            acc[k] = x
        else:
            acc.pop(k, None)
    return acc


def vscale(v: Mapping, s) -> dict:
    return {k: c * s for k, c in v.items()} if s else {}


class Echelon:
    """Incrementally row-reduced span of vectors, with optional tags.

    Each stored row remembers which combination of tagged inputs produced it,
    so :meth:`express` can write a vector in terms of the tagged generators.
    """

    def __init__(self):
        self.rows: dict = {}       # pivot key -> (row, tagcombo)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Mapping, tags: Mapping | None = None):
        v = {k: Fraction(c) for k, c in v.items() if c}
        combo = dict(tags or {})
        while v:
            hits = [k for k in v if k in self.rows]
            if not hits:
                break
            k = min(hits)
            row, rtags = self.rows[k]
            f = v[k] / row[k]
            vadd(v, row, -f)
            vadd(combo, rtags, -f)
        return v, combo

    def add(self, v: Mapping, tag: Hashable | None = None) -> bool:
        """Insert ``v``; return True if it was independent of the span."""
        res, combo = self.reduce(v, {tag: Fraction(1)} if tag is not None else None)
        if not res:
            return False
        self.rows[min(res)] = (res, combo)
        return True

    def express(self, v: Mapping):
        """Return ``(combo, residual)`` with ``v = sum combo[t] * tagged_t + span_untagged + residual``."""
        res, combo = self.reduce(v)
        return {t: -c for t, c in combo.items() if t is not None}, res


def rank(vectors: Iterable[Mapping]) -> int:
    e = Echelon()
    return sum(e.add(v) for v in vectors)


def solve(columns: Sequence[Mapping], target: Mapping) -> list[Fraction]:
    """Some ``x`` with ``sum x_i columns[i] = target``; raises if none exists."""
    e = Echelon()
    for i, col in enumerate(columns):
        e.add(col, tag=i)
    combo, res = e.express(target)
    if res:
        raise InconsistentSystem("no solution")
    x = [Fraction(0)] * len(columns)
    for t, c in combo.items():
        x[t] += c
    return x


def kernel(columns: Sequence[Mapping]) -> list[list[Fraction]]:
    """Basis of ``{x : sum x_i columns[i] = 0}``."""
    e = Echelon()
    out = []
    for i, col in enumerate(columns):
        res, combo = e.reduce(col, {i: Fraction(1)})
        if res:
            e.rows[min(res)] = (res, combo)
        else:
            x = [Fraction(0)] * len(columns)
            for t, c in combo.items():
                x[t] += c
            out.append(x)
    return out


class RationalMatrix:
    """Dense exact matrix; column j holds the image of basis vector j."""

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows, self.cols = rows, cols
        self.entries = [[Fraction(0)] * cols for _ in range(rows)]
        if entries is not None:
            for i, r in enumerate(entries):
                for j, x in enumerate(r):
                    self.entries[i][j] = Fraction(x)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, rows, columns: Sequence[Mapping[int, object]]):
        m = cls(rows, len(columns))
        for j, col in enumerate(columns):
            for i, x in col.items():
                m.entries[i][j] = Fraction(x)
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = RationalMatrix(self.rows, other.cols)
        for i in range(self.rows):
            ri = self.entries[i]
            for k, a in enumerate(ri):
                if a:
                    ok = other.entries[k]
                    oi = out.entries[i]
                    for j in range(other.cols):
                        if ok[j]:
                            oi[j] += a * ok[j]
        return out

    def __eq__(self, other):
        return (isinstance(other, RationalMatrix) and (self.rows, self.cols) == (other.rows, other.cols)
                and self.entries == other.entries)

    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(min(self.rows, self.cols))), Fraction(0))

    def rank(self) -> int:
        return rank({i: x for i, x in enumerate(col) if x} for col in zip(*self.entries)) if self.rows else 0

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.entries)
        return f"RationalMatrix({self.rows}x{self.cols}: {body})"
