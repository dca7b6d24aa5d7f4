"""Compare the diagram engine's symmetric group actions with the oracle's.

The engine basis and the canonical cocycle basis are matched diagram by
diagram, up to a sign per diagram.  Those signs are fixed by walking the
orbits of the generators from one representative each, and the comparison
then demands that every generator matrix agrees after the change of basis.
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction

from ..diagrams import Element
from ..koszul import Permutation, adjacent_transpositions
from .. import wheeled_prop as wp
from .bar import LIMITS, OracleLimits
from .classes import ExtBasis


def _columns_engine(diagrams, index, p, side):
    act = wp.act_inputs if side == "inputs" else wp.act_outputs
    cols = []
    for d in diagrams:
        e = act(p, Element.basis(d))
        cols.append({index[k]: c for k, c in e.items()})
    return cols


def _columns_oracle(basis: ExtBasis, p, side, offset):
    return [{offset + i: c for i, c in basis.coordinates(basis.act(p, side, z)).items()}
            for z in basis.cocycles]


def generators(q: int, l: int):
    return ([("inputs", p) for p in adjacent_transpositions(q)]
            + [("outputs", p) for p in adjacent_transpositions(l)])


class Comparison:
    """Result of matching engine and oracle on all diagrams of biarity (q, l)."""

    def __init__(self, q, l, diagrams, signs, mismatches, checked):
        self.q, self.l = q, l
        self.diagrams = diagrams
        self.signs = signs
        self.mismatches = mismatches
        self.checked = checked

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __repr__(self):
        return f"Comparison(q={self.q}, l={self.l}, dim={len(self.diagrams)}, ok={self.ok})"


def wheel_degree_sign(d) -> int:
    """Predicted basis change: a wheel has degree |W| in the engine but |W| - 1
    in the oracle, so passing wheel k over a later wheel k' costs |W_k|(|W_k'| - 1).
    Wheel-free diagrams need no sign: the Yoneda comparison pins those to +1."""
    w = [len(b) for b in d.wheels]
    e = sum(w[k] * (w[m] - 1) for k in range(len(w)) for m in range(k + 1, len(w)))
    return -1 if e % 2 else 1


def compare_actions(q: int, l: int, limits: OracleLimits = LIMITS,
                    extra: list[tuple[str, Permutation]] = (),
                    seed=lambda d: 1) -> Comparison:
    """Find signs s(d) with s(d') M_engine[d', d] = M_oracle[d', d] s(d) for all generators."""
    diagrams, bases, offsets = [], [], []
    for j in range(0, q - l + 1):
        if l + j == 0:
            continue
        b = ExtBasis(q, l, j, limits)
        offsets.append(len(diagrams))
        bases.append(b)
        diagrams.extend(b.diagrams)
    index = {d: i for i, d in enumerate(diagrams)}
    gens = generators(q, l) + list(extra)
    tables = []
    for side, p in gens:
        eng = _columns_engine(diagrams, index, p, side)
        orc = []
        for b, off in zip(bases, offsets):
            orc.extend(_columns_oracle(b, p, side, off))
        tables.append((side, p, eng, orc))

    signs: dict[int, Fraction] = {}
    for start in range(len(diagrams)):
        if start in signs:
            continue
        signs[start] = Fraction(seed(diagrams[start]))
        todo = deque([start])
        while todo:
            i = todo.popleft()
            for _, _, eng, orc in tables:
                for k, (ce, co) in ((k, (eng[i].get(k), orc[i].get(k))) for k in set(eng[i]) | set(orc[i])):
                    if ce is None or co is None or k in signs:
                        continue
                    signs[k] = co * signs[i] / ce
                    todo.append(k)

    mismatches = []
    for side, p, eng, orc in tables:
        for i in range(len(diagrams)):
            lhs = {k: c * signs[k] for k, c in eng[i].items()}
            rhs = {k: c * signs[i] for k, c in orc[i].items()}
            if lhs != rhs:
                mismatches.append((side, p, diagrams[i]))
    return Comparison(q, l, diagrams, {diagrams[i]: s for i, s in signs.items()},
                      mismatches, len(tables))


def compare_yoneda(m: int, l: int, oracle=None) -> list:
    """Check Y(x, Id^{k-1} (x) [pi^2] (x) Id^{m-k}) against the engine's vertical
    composition for every wheel-free basis diagram x of biarity (m, l) and every k.
    Returns the list of mismatches."""
    from .yoneda import YonedaOracle, class_y_diagram
    from .classes import canonical_cocycle
    from .bar import build_complex
    oracle = oracle or YonedaOracle()
    cx = build_complex(l, m)
    bad = []
    for d in ExtBasis(m, l, 0).diagrams:
        x = canonical_cocycle(d, cx)
        for k in range(1, m + 1):
            y_engine = wp.tensor(wp.identity(k - 1), wp.mu(2), wp.identity(m - k))
            c_y = dict(y_engine.items())[class_y_diagram(m, k)]
            got = oracle.class_of(oracle.product_with_y(x, l, m, k), m + 1, l)
            want = {dd: c / c_y for dd, c in wp.vertical(Element.basis(d), y_engine).items()}
            if got != want:
                bad.append((d, k, got, want))
    return bad
