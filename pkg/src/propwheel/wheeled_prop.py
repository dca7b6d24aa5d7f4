"""Symmetric actions, horizontal composition, contractions and vertical
composition on diagrams, plus the distinguished classes mu_n, h_p, hbar_p.

Internally a diagram D stands for ``scale(D) * word(D)`` where ``word(D)``
is the canonical odd-letter word (see :mod:`propwheel.diagrams`).  On words
the symmetric actions are relabelings, horizontal composition is
concatenation and the contraction of input i with output j is the pair of
odd derivations "delete letter i, then delete letter -j", each paying
``(-1)**position``.  ``scale`` is a product of per-block signs chosen so
that corollas compose by the operad sign table of :func:`generator_sign`.
"""
from __future__ import annotations

from functools import lru_cache

from .diagrams import Element, WheeledDiagram, canonical_form, combine, word_sign, DiagramError
from .koszul import Permutation


class ArityError(DiagramError):
    pass


# -- operad sign table -------------------------------------------------------

def generator_sign(m: int, n: int, i: int) -> int:
    """Sign in ``mu_m o_i mu_n = sign * mu_{m+n-1}``."""
    if not (m >= 1 and n >= 1 and 1 <= i <= m):
        raise ValueError(f"bad partial composition ({m}, {n}, {i})")
    return -1 if (n - 1) * (i - 1) % 2 else 1


def suspension_sign(m: int, n: int, i: int) -> int:
    """Partial composition sign in the endomorphism operad of a one-dimensional
    space ``sk`` in homological degree 1, evaluated directly.

    ``nu_k`` sends ``s^(x)k`` to ``s`` and has homological degree ``1 - k``.
    ``(nu_m o_i nu_n)(s_1 ... s_{m+n-1}) = nu_m(s_1 ... s_{i-1} nu_n(...) ...)``;
    moving ``nu_n`` past the first ``i - 1`` factors costs the Koszul sign.
    """
    if not (m >= 1 and n >= 1 and 1 <= i <= m):
        raise ValueError(f"bad partial composition ({m}, {n}, {i})")
    # walk nu_n past each of the i-1 degree-1 letters, one letter at a time
    sign = 1
    deg_op = 1 - n
    for _ in range(i - 1):
        if (deg_op * 1) % 2:
            sign = -sign
    # outer operation then sees m letters of degree 1; it is applied with no
    # further letters in front, and both nu's return the generator s
    return sign


@lru_cache(maxsize=None)
def corolla_scale(n: int) -> int:
    """Sign relating the basis corolla on n legs to its canonical word."""
    if n < 1:
        raise ValueError("corollas have at least one input")
    k = n - 1
    return -1 if (k * (k - 1) // 2) % 2 else 1


def diagram_scale(d: WheeledDiagram) -> int:
    s = 1
    for f in d.fibers:
        s *= corolla_scale(len(f))
    for w in d.wheels:
        s *= corolla_scale(len(w) + 1)
    return s


# -- helpers -----------------------------------------------------------------

def _from_word(q, l, word, fibers, wheels):
    """Canonical diagram for the given blocks and the sign of ``word`` against it."""
    d, _ = canonical_form(q, l, fibers, wheels)
    return d, word_sign(word, d.word())


def _map_elem(e: Element, q, l, fn) -> Element:
    pairs = []
    for d, c in e.terms.items():
        for d2, s in fn(d):
            pairs.append((d2, c * s))
    return combine(q, l, pairs)


def identity(n: int) -> Element:
    return Element.basis(WheeledDiagram(n, n, tuple((a,) for a in range(1, n + 1))))


def wheel(n: int) -> Element:
    """Single wheel on inputs 1..n (the contraction of mu_{n+1} at input 1 is -wheel(n))."""
    if n < 1:
        raise ValueError("a wheel needs at least one input")
    return Element.basis(WheeledDiagram(n, 0, (), (tuple(range(1, n + 1)),)))


def mu(n: int) -> Element:
    if n < 1:
        raise ValueError("mu(n) needs n >= 1")
    return Element.basis(WheeledDiagram(n, 1, (tuple(range(1, n + 1)),)))


# -- symmetric actions -------------------------------------------------------

def act_inputs(p: Permutation, e: Element) -> Element:
    """Right action ``e.p``: the input labelled a becomes ``p^-1(a)``."""
    p = Permutation(p)
    if len(p) != e.q:
        raise ArityError(f"arity mismatch: permutation of {len(p)} letters on {e.q} inputs")
    inv = p.inverse()

    def go(d):
        word = [x if x < 0 else inv(x) for x in d.word()]
        fib = [[inv(a) for a in f] for f in d.fibers]
        wh = [[inv(a) for a in w] for w in d.wheels]
        d2, s = _from_word(d.q, d.l, word, fib, wh)
        return [(d2, s)]
    return _map_elem(e, e.q, e.l, go)


def act_outputs(p: Permutation, e: Element) -> Element:
    """Left action ``p.e``: output j becomes output ``p(j)``."""
    p = Permutation(p)
    if len(p) != e.l:
        raise ArityError(f"arity mismatch: permutation of {len(p)} letters on {e.l} outputs")
    inv = p.inverse()

    def go(d):
        word = [-p(-x) if x < 0 else x for x in d.word()]
        fib = [d.fibers[inv(j) - 1] for j in range(1, d.l + 1)]
        d2, s = _from_word(d.q, d.l, word, fib, d.wheels)
        return [(d2, s)]
    return _map_elem(e, e.q, e.l, go)


# -- horizontal composition --------------------------------------------------

def _horizontal_diagrams(a: WheeledDiagram, b: WheeledDiagram):
    qa, la = a.q, a.l
    word = a.word() + [x - la if x < 0 else x + qa for x in b.word()]
    fib = list(a.fibers) + [[x + qa for x in f] for f in b.fibers]
    wh = list(a.wheels) + [[x + qa for x in w] for w in b.wheels]
    return _from_word(a.q + b.q, a.l + b.l, word, fib, wh)


def horizontal(a: Element, b: Element) -> Element:
    pairs = []
    for da, ca in a.terms.items():
        for db, cb in b.terms.items():
            d, s = _horizontal_diagrams(da, db)
            pairs.append((d, ca * cb * s))
    return combine(a.q + b.q, a.l + b.l, pairs)


def tensor(*elems: Element) -> Element:
    out = elems[0]
    for x in elems[1:]:
        out = horizontal(out, x)
    return out


# -- contraction -------------------------------------------------------------

def _contract_diagram(i: int, j: int, d: WheeledDiagram):
    word = d.word()
    p = word.index(i)
    sign = -1 if p % 2 else 1
    word = word[:p] + word[p + 1:]
    p = word.index(-j)
    if p % 2:
        sign = -sign
    word = word[:p] + word[p + 1:]

    fj = [a for a in d.fibers[j - 1]]
    fibers = [list(f) for f in d.fibers]
    wheels = [list(w) for w in d.wheels]
    m = d.output_of(i)
    if m == j:                                    # (i) close the corolla into a wheel
        rest = [a for a in fj if a != i]
        if not rest:
            return []
        wheels.append(rest)
        del fibers[j - 1]
    elif m is not None:                           # (ii) graft corolla j into input i
        fibers[m - 1] = [a for a in fibers[m - 1] if a != i] + fj
        del fibers[j - 1]
    else:                                         # (iii) graft corolla j into a wheel
        k = next(k for k, w in enumerate(wheels) if i in w)
        wheels[k] = [a for a in wheels[k] if a != i] + fj
        del fibers[j - 1]

    def ri(a):
        return a - 1 if a > i else a

    def ro(x):
        return x + 1 if x < -j else x
    word = [ro(x) if x < 0 else ri(x) for x in word]
    fibers = [[ri(a) for a in f] for f in fibers]
    wheels = [[ri(a) for a in w] for w in wheels]
    d2, s = _from_word(d.q - 1, d.l - 1, word, fibers, wheels)
    return [(d2, sign * s * diagram_scale(d) * diagram_scale(d2))]


def contract(i: int, j: int, e: Element) -> Element:
    """Join input i to output j."""
    if not (1 <= i <= e.q and 1 <= j <= e.l):
        raise ArityError(f"contraction indices ({i},{j}) out of range for biarity ({e.q},{e.l})")
    return _map_elem(e, e.q - 1, e.l - 1, lambda d: _contract_diagram(i, j, d))


def vertical(g: Element, f: Element) -> Element:
    """``g o f`` for g of biarity (n, l) and f of biarity (m, n)."""
    n, l = g.q, g.l
    if f.l != n:
        raise ArityError(f"arity mismatch: cannot compose ({g.q},{g.l}) after ({f.q},{f.l})")
    out = horizontal(g, f)
    for _ in range(n):
        out = contract(1, l + 1, out)
    return out


def partial(a: Element, i: int, b: Element) -> Element:
    """Operadic partial composition ``a o_i b`` for a of biarity (m, 1)."""
    if a.l != 1 or b.l != 1:
        raise ArityError("partial composition needs operations with one output")
    m = a.q
    if not 1 <= i <= m:
        raise ArityError(f"slot {i} out of range for {m} inputs")
    return vertical(a, tensor(*([identity(1)] * (i - 1) + [b] + [identity(1)] * (m - i))))


# -- distinguished classes ---------------------------------------------------

def class_h(p: int) -> Element:
    if p < 1:
        raise ValueError("class_h(p) needs p >= 1")
    h = mu(2)
    for _ in range(p - 1):
        h = vertical(mu(2), horizontal(h, identity(1)))
    return h


def class_hbar(p: int) -> Element:
    return contract(1, 1, class_h(p))


def double_contract_commutation_check(e: Element, first: tuple[int, int], second: tuple[int, int]) -> bool:
    """Contract two index pairs (given in e's labels) in both orders."""
    (i, j), (k, m) = first, second
    for a, b in ((i, j), (k, m)):
        if not (1 <= a <= e.q and 1 <= b <= e.l):
            raise ArityError(f"contraction indices ({a},{b}) out of range for biarity ({e.q},{e.l})")
    if i == k or j == m:
        raise ArityError("index pairs must use distinct inputs and outputs")

    def shift(x, removed):
        return x - 1 if x > removed else x
    one = contract(shift(k, i), shift(m, j), contract(i, j, e))
    two = contract(shift(i, k), shift(j, m), contract(k, m, e))
    return one == two
