"""Basis diagrams of the wheeled PROP and linear combinations of them.

A basis diagram of biarity (q, l) is a partial surjection from the inputs
{1..q} onto the outputs {1..l} (one corolla per output, listing its fiber)
together with a set partition of the unused inputs into wheels.

Sign bookkeeping uses a fixed *word* for every diagram: each output j is an
odd letter ``-j`` and each input a an odd letter ``a``.  The canonical word
is ``[-1, *fiber_1, -2, *fiber_2, ..., *wheel_1, *wheel_2, ...]`` with
fibers and wheels sorted ascending and wheels ordered by minimum.  Any
reordering of the letters costs the signature of the reordering.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .combinatorics import set_partitions, dimension_formula
from .koszul import sort_sign


class DiagramError(ValueError):
    pass


class ParseError(ValueError):
    """Malformed serialized input; ``pos`` is a character offset when known."""

    def __init__(self, msg, pos=None):
        super().__init__(msg if pos is None else f"{msg} (at position {pos})")
        self.pos = pos


@dataclass(frozen=True, order=True)
class WheeledDiagram:
    q: int
    l: int
    fibers: tuple[tuple[int, ...], ...]
    wheels: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if len(self.fibers) != self.l:
            raise DiagramError(f"expected {self.l} fibers, got {len(self.fibers)}")
        blocks = list(self.fibers) + list(self.wheels)
        seen = [x for b in blocks for x in b]
        if any(not b for b in blocks):
            raise DiagramError("empty fiber or wheel")
        if sorted(seen) != list(range(1, self.q + 1)):
            raise DiagramError(f"blocks {blocks} do not partition the inputs 1..{self.q}")
        for b in blocks:
            if list(b) != sorted(b):
                raise DiagramError(f"block {b} is not sorted")
        mins = [b[0] for b in self.wheels]
        if mins != sorted(mins):
            raise DiagramError("wheels are not ordered by minimum")

    @property
    def degree(self) -> int:
        return sum(len(f) - 1 for f in self.fibers) + sum(len(w) for w in self.wheels)

    def word(self) -> list[int]:
        out = []
        for j, f in enumerate(self.fibers, 1):
            out.append(-j)
            out.extend(f)
        for w in self.wheels:
            out.extend(w)
        return out

    def output_of(self, a: int):
        for j, f in enumerate(self.fibers, 1):
            if a in f:
                return j
        return None

    def __str__(self):
        fib = ",".join("{" + ",".join(map(str, f)) + "}" for f in self.fibers)
        wh = ",".join("{" + ",".join(map(str, w)) + "}" for w in self.wheels)
        return f"D({self.q},{self.l}| {fib} | {wh})"


def word_sign(word: Sequence[int], target: Sequence[int]) -> int:
    """Sign of reordering the odd letters of ``word`` into ``target``."""
    pos = {x: k for k, x in enumerate(target)}
    if len(pos) != len(word) or set(word) != set(pos):
        raise DiagramError("words do not have the same letters")
    return sort_sign([pos[x] for x in word])


def canonical_form(q: int, l: int, fibers: Sequence[Sequence[int]],
                   wheels: Iterable[Sequence[int]] = ()) -> tuple[WheeledDiagram, int]:
    """Sort fibers and wheels; return the canonical diagram and the sign paid."""
    fibers = [list(f) for f in fibers]
    wheels = [list(w) for w in wheels]
    for b in fibers + wheels:
        if len(set(b)) != len(b):
            raise DiagramError(f"repeated input in block {b}")
    raw = []
    for j, f in enumerate(fibers, 1):
        raw.append(-j)
        raw.extend(f)
    for w in wheels:
        raw.extend(w)
    d = WheeledDiagram(q, l, tuple(tuple(sorted(f)) for f in fibers),
                       tuple(sorted((tuple(sorted(w)) for w in wheels), key=min)))
    return d, word_sign(raw, d.word())


def _sort_key(d: WheeledDiagram):
    J = tuple(sorted(x for f in d.fibers for x in f))
    f = tuple(d.output_of(a) for a in J)
    return (len(J), J, f, d.wheels)


def enumerate_basis(q: int, l: int) -> list[WheeledDiagram]:
    """Every basis diagram of biarity (q, l), each once, in a fixed order."""
    if q < 0 or l < 0:
        raise ValueError("negative biarity")
    out = []
    inputs = range(1, q + 1)
    for m in range(l, q + 1):
        for J in itertools.combinations(inputs, m):
            rest = [a for a in inputs if a not in J]
            for f in itertools.product(range(1, l + 1), repeat=m):
                if len(set(f)) != l:
                    continue
                fibers = tuple(tuple(a for a, fa in zip(J, f) if fa == j) for j in range(1, l + 1))
                for part in set_partitions(rest):
                    wheels = tuple(sorted((tuple(b) for b in part), key=min))
                    out.append(WheeledDiagram(q, l, fibers, wheels))
    out.sort(key=_sort_key)
    return out


def dimension(q: int, l: int) -> int:
    return dimension_formula(q, l)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def format_rational(c: Fraction) -> str:
    return str(Fraction(c))


class Element:
    """A finite rational combination of diagrams of one biarity."""

    __slots__ = ("q", "l", "terms")

    def __init__(self, q: int, l: int, terms: Mapping[WheeledDiagram, object] | None = None):
        self.q, self.l = q, l
        clean = {}
        for d, c in (terms or {}).items():
            if (d.q, d.l) != (q, l):
                raise DiagramError(f"diagram of biarity ({d.q},{d.l}) in element of biarity ({q},{l})")
            c = _frac(c)
            if c:
                clean[d] = clean.get(d, 0) + c
        self.terms = {d: c for d, c in clean.items() if c}

    @classmethod
    def zero(cls, q, l):
        return cls(q, l)

    @classmethod
    def basis(cls, d: WheeledDiagram, coeff=1):
        return cls(d.q, d.l, {d: coeff})

    @property
    def biarity(self):
        return (self.q, self.l)

    @property
    def degree(self) -> int:
        return self.q - self.l

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))

    def _check(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if self.biarity != other.biarity:
            raise DiagramError(f"biarity mismatch: {self.biarity} vs {other.biarity}")

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        t = dict(self.terms)
        for d, c in other.terms.items():
            t[d] = t.get(d, 0) + c
        return Element(self.q, self.l, t)

    def __neg__(self):
        return Element(self.q, self.l, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        s = _frac(scalar)
        return Element(self.q, self.l, {d: c * s for d, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.biarity == other.biarity and self.terms == other.terms

    def __hash__(self):
        return hash((self.q, self.l, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"Element({self.q},{self.l}: 0)"
        return f"Element({self.q},{self.l}: " + " + ".join(f"{c}*{d}" for d, c in self.items()) + ")"


def combine(q, l, pairs: Iterable[tuple[WheeledDiagram, object]]) -> Element:
    t: dict = {}
    for d, c in pairs:
        t[d] = t.get(d, 0) + _frac(c)
    return Element(q, l, t)


# -- serialization -----------------------------------------------------------

def to_json(e: Element) -> str:
    return json.dumps({
        "q": e.q, "l": e.l,
        "terms": [{"coeff": format_rational(c), "fibers": [list(f) for f in d.fibers],
                   "wheels": [list(w) for w in d.wheels]} for d, c in e.items()],
    })


def from_json(text: str) -> Element:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", exc.pos) from None
    if not isinstance(obj, dict) or not {"q", "l", "terms"} <= obj.keys():
        raise ParseError("expected an object with keys q, l, terms")
    q, l, terms = obj["q"], obj["l"], obj["terms"]
    if not (isinstance(q, int) and isinstance(l, int) and q >= 0 and l >= 0):
        raise ParseError("q and l must be non-negative integers")
    if not isinstance(terms, list):
        raise ParseError("terms must be a list")
    pairs = []
    for k, t in enumerate(terms):
        try:
            coeff = Fraction(t["coeff"]) if isinstance(t["coeff"], str) else None
            if coeff is None:
                raise ParseError(f"term {k}: coeff must be a 'p/q' string")
            d = WheeledDiagram(q, l, tuple(tuple(f) for f in t["fibers"]),
                               tuple(tuple(w) for w in t.get("wheels", [])))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"term {k}: {exc}") from None
        pairs.append((d, coeff))
    return combine(q, l, pairs)


def to_dot(e: Element, name: str = "element") -> str:
    """Graphviz digraph, one cluster per term."""
    lines = [f"digraph {name} {{", "  rankdir=TB;", '  node [shape=circle, label=""];']
    if e.is_zero():
        lines.append('  zero [shape=plaintext, label="0"];')
    for t, (d, c) in enumerate(e.items()):
        lines.append(f"  subgraph cluster_{t} {{")
        lines.append(f'    label="{format_rational(c)}";')
        for a in range(1, d.q + 1):
            lines.append(f'    t{t}_in{a} [shape=plaintext, label="{a}"];')
        for j, f in enumerate(d.fibers, 1):
            lines.append(f"    t{t}_c{j};")
            lines.append(f'    t{t}_out{j} [shape=plaintext, label="{j}"];')
            for a in f:
                lines.append(f"    t{t}_in{a} -> t{t}_c{j};")
            lines.append(f"    t{t}_c{j} -> t{t}_out{j};")
        for k, w in enumerate(d.wheels, 1):
            lines.append(f"    t{t}_w{k};")
            for a in w:
                lines.append(f"    t{t}_in{a} -> t{t}_w{k};")
            lines.append(f"    t{t}_w{k} -> t{t}_w{k};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
