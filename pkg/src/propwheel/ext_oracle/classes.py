"""Explicit cohomology bases and symmetric group actions on them.

Each basis diagram of biarity (q, l) with j wheels names a top-degree
cocycle of the complex with l + j source factors: the fibers and then the
wheels are the blocks, block k owns the letters ``off_k + 1 .. off_k + |B_k|``,
and input a goes to ``off_k + (rank of a in B_k)``.  This is the external
product of the generators ``pi^{(x)|B|}`` of Ext^{|B|-1}(a, a^{(x)|B|}).
The external product of cochains carries the Koszul sign
``(f (x) g)(p (x) p') = (-1)^{|g||p|} f(p) (x) g(p')``, which on top-degree
cochains is ``(-1)^{|f||g|}`` times plain concatenation.
For wheels the signature idempotent is applied over the wheel factors.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from ..combinatorics import set_partitions_into, surjections
from ..diagrams import WheeledDiagram
from ..koszul import Permutation, restrict_and_reindex, signature
from .bar import (LIMITS, BarCochainComplex, OracleLimits, _antisym_source,
                  build_complex)
from .linalg import Echelon, InconsistentSystem, RationalMatrix


def surjection_diagram(f, l: int) -> WheeledDiagram:
    """The wheel-free diagram whose j-th fiber is f^{-1}(j); ``f`` is a tuple of values."""
    fibers = tuple(tuple(a for a, v in enumerate(f, 1) if v == j) for j in range(1, l + 1))
    return WheeledDiagram(len(f), l, fibers)


def diagrams_with_wheels(q: int, l: int, j: int) -> list[WheeledDiagram]:
    """Diagrams of biarity (q, l) with exactly j wheels, in a fixed order."""
    out = []
    for m in range(l, q + 1):
        for J in itertools.combinations(range(1, q + 1), m):
            rest = [a for a in range(1, q + 1) if a not in J]
            for f in surjections(m, l):
                fibers = tuple(tuple(J[i] for i in range(m) if f[i] == t) for t in range(1, l + 1))
                for part in set_partitions_into(rest, j):
                    wheels = tuple(sorted(tuple(sorted(b)) for b in part))
                    out.append(WheeledDiagram(q, l, fibers, wheels))
    return out


def canonical_cocycle(d: WheeledDiagram, cx: BarCochainComplex) -> dict:
    blocks = list(d.fibers) + list(d.wheels)
    if cx.l != len(blocks) or cx.q != d.q:
        raise ValueError("diagram does not fit the complex")
    dvec = tuple(len(b) for b in blocks)
    g = [0] * d.q
    off = 0
    for b in blocks:
        for r, a in enumerate(b, 1):
            g[a - 1] = off + r
        off += len(b)
    degs = [n - 1 for n in dvec]
    e = sum(degs[a] * degs[b] for a in range(len(degs)) for b in range(a + 1, len(degs)))
    vec = {(dvec, tuple(g)): Fraction(-1 if e % 2 else 1)}
    wheel_groups = list(range(d.l + 1, cx.l + 1))
    return _antisym_source(cx, vec, wheel_groups)


class ExtBasis:
    """Ext^{q-l-j}(a^{(x)l} (x) Lambda^j a, a^{(x)q}) with the basis of canonical cocycles."""

    def __init__(self, q: int, l: int, j: int = 0, limits: OracleLimits = LIMITS):
        if l + j < 1:
            raise ValueError("need at least one source factor")
        self.q, self.l, self.j = q, l, j
        self.cx = build_complex(l + j, q, limits)
        self.degree = q - l - j
        self.diagrams = diagrams_with_wheels(q, l, j)
        self.index = {d: i for i, d in enumerate(self.diagrams)}
        self.echelon = Echelon()
        for b in self.cx.bases.get(self.degree - 1, ()):
            self.echelon.add(self.cx.d({b: Fraction(1)}))
        self.cocycles = []
        for i, d in enumerate(self.diagrams):
            z = canonical_cocycle(d, self.cx)
            if self.cx.d(z):
                raise InconsistentSystem(f"canonical cochain of {d} is not a cocycle")
            if not self.echelon.add(z, i):
                raise InconsistentSystem(f"canonical cocycle of {d} is a boundary mod the others")
            self.cocycles.append(z)

    def __len__(self):
        return len(self.diagrams)

    def coordinates(self, vec: dict) -> dict:
        """Coordinates of a cocycle in the canonical basis, modulo boundaries."""
        combo, residual = self.echelon.express(vec)
        if residual:
            raise InconsistentSystem("vector is not in the span of cocycles and boundaries")
        return {i: c for i, c in combo.items() if c}

    def act(self, p: Permutation, side: str, vec: dict) -> dict:
        if side == "inputs":
            if p.n != self.q:
                raise ValueError("input permutation has the wrong size")
            return self.cx.act_target(p, vec)
        if side == "outputs":
            if p.n != self.l:
                raise ValueError("output permutation has the wrong size")
            tau = Permutation(tuple(p) + tuple(range(self.l + 1, self.l + self.j + 1)))
            return self.cx.act_source(tau, vec)
        raise ValueError(f"unknown side {side!r}")

    def matrix(self, p: Permutation, side: str) -> RationalMatrix:
        cols = [self.coordinates(self.act(p, side, z)) for z in self.cocycles]
        return RationalMatrix.from_columns(len(self), cols)


def action_on_cohomology(p: Permutation, side: str, l: int, q: int,
                         limits: OracleLimits = LIMITS) -> RationalMatrix:
    """Matrix of p on Ext^{q-l}(a^{(x)l}, a^{(x)q}) in the basis indexed by surjections."""
    return ExtBasis(q, l, 0, limits).matrix(p, side)


def closed_form_matrix(p: Permutation, side: str, l: int, q: int) -> RationalMatrix:
    """The same action from the closed formulas on surjections.

    Inputs: [f].s = prod_i eps(s restricted to (f s)^{-1}(i)) [f s].
    Outputs (transpositions of a, b only): (-1)^{(|f^-1(a)|-1)(|f^-1(b)|-1)} [tau f].
    """
    basis = diagrams_with_wheels(q, l, 0)
    index = {d: i for i, d in enumerate(basis)}
    cols = []
    for d in basis:
        f = tuple(d.output_of(a) for a in range(1, q + 1))
        if side == "inputs":
            g = tuple(f[p(a) - 1] for a in range(1, q + 1))
            sign = 1
            for i in range(1, l + 1):
                fib = [a for a in range(1, q + 1) if g[a - 1] == i]
                sign *= signature(restrict_and_reindex(p, fib))
        else:
            moved = [a for a in range(1, l + 1) if p(a) != a]
            if len(moved) != 2:
                raise ValueError("the output formula is stated for transpositions")
            a, b = moved
            g = tuple(p(v) for v in f)
            sign = (-1) ** ((f.count(a) - 1) * (f.count(b) - 1))
        cols.append({index[surjection_diagram(g, l)]: Fraction(sign)})
    return RationalMatrix.from_columns(len(basis), cols)


def integer_partitions(n: int, largest: int | None = None):
    """Partitions of n as non-increasing tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def cycle_type_representative(shape) -> Permutation:
    n = sum(shape)
    cycles, start = [], 1
    for k in shape:
        cycles.append(list(range(start, start + k)))
        start += k
    return Permutation.from_cycles(n, cycles)


def character_table(q: int, max_wheels: int | None = None,
                    limits: OracleLimits = LIMITS) -> dict:
    """Character of S_q on the sum over j of Ext(Lambda^j a, a^{(x)q}), by cycle type.

    Returns ``{cycle type: {j: trace}}``; the trace of the whole sum is the sum over j.
    """
    if q > 4 and limits.max_q < q:
        raise ValueError("character table is limited to q <= 4")
    top = q if max_wheels is None else min(q, max_wheels)
    bases = {j: ExtBasis(q, 0, j, limits) for j in range(1, top + 1)}
    table = {}
    for shape in integer_partitions(q):
        p = cycle_type_representative(shape)
        table[shape] = {j: b.matrix(p, "inputs").trace() for j, b in bases.items()}
    return table
