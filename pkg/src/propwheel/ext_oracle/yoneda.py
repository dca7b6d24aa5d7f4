"""Yoneda products with the degree-one classes Id^{k-1} (x) [pi (x) pi] (x) Id^{m-k}.

The class [pi^{(x)2}] in Ext^1(a, a^{(x)2}) is represented by the extension
``0 -> a^{(x)2} -> I/I^3 -> a -> 0`` (I the augmentation ideal of Q[G]).
Tensoring with identities gives an extension E_k of a^{(x)m} by a^{(x)m+1},
and Yoneda product with its class is the connecting map of
``0 -> C(l, a^{(x)m+1}) -> C(l, E_k) -> C(l, a^{(x)m}) -> 0``: lift a cocycle
to E_k, apply the differential, and read off the result in a^{(x)m+1}.

On the free group with generators x_1..x_D, I/I^3 has basis X_u = x_u - 1
and X_u X_v.  Doubling letter x (x_x -> x_x x_{x+1}) sends
X_x -> X_x + X_{x+1} + X_x X_{x+1} and is multiplicative modulo I^3.

Cochains with values in E_k are keyed like those of the bar complex, with
tensor factor k-1 (0-based) either ``(u,)`` or ``(u, v)``.
"""
from __future__ import annotations

import random
from fractions import Fraction

from ..diagrams import WheeledDiagram
from .bar import LIMITS, OracleLimits, build_complex, offsets
from .classes import ExtBasis, canonical_cocycle
from .linalg import InconsistentSystem, vadd


def _shift(v, x):
    return v + 1 if v > x else v


def _double_linear(u, x):
    """Image of X_u under doubling letter x, as (word, coeff) pairs."""
    if u != x:
        return [((_shift(u, x),), 1)]
    return [((x,), 1), ((x + 1,), 1), ((x, x + 1), 1)]


def _double_factor(w, x):
    if len(w) == 1:
        return _double_linear(w[0], x)
    u, v = w
    lu = [a[0] for a, _ in _double_linear(u, x) if len(a) == 1]
    lv = [a[0] for a, _ in _double_linear(v, x) if len(a) == 1]
    return [((a, b), 1) for a in lu for b in lv]


def _letters(g, k):
    out = set()
    for i, v in enumerate(g):
        out.update(v if i == k else (v,))
    return out


def _double_mixed(g, k, x, D):
    """Doubling letter x on a tensor whose factor k lies in I/I^3; keeps covering terms."""
    partial = [((), 1)]
    for i, v in enumerate(g):
        if i == k:
            opts = _double_factor(v, x)
        elif v == x:
            opts = [(x, 1), (x + 1, 1)]
        else:
            opts = [(_shift(v, x), 1)]
        partial = [(h + (o,), c * co) for h, c in partial for o, co in opts]
    full = set(range(1, D + 2))
    for h, c in partial:
        if _letters(h, k) == full:
            yield h, c


def extension_differential(vec: dict, k: int) -> dict:
    """Bar differential on cochains with values in E (factor k is the I/I^3 slot)."""
    out: dict = {}
    for (dvec, g), c in vec.items():
        offs = offsets(dvec)
        D = sum(dvec)
        sign_t = 1
        for t, dt in enumerate(dvec):
            new_dvec = dvec[:t] + (dt + 1,) + dvec[t + 1:]
            for r in range(1, dt + 1):
                s = sign_t * (-1) ** r
                for h, co in _double_mixed(g, k, offs[t] + r, D):
                    vadd(out, {(new_dvec, h): c * s * co})
            if (dt - 1) % 2:
                sign_t = -sign_t
    return out


def lift(vec: dict, k: int) -> dict:
    """Section of E -> a on factor k: e_u -> X_u."""
    return {(dvec, g[:k] + ((g[k],),) + g[k + 1:]): c for (dvec, g), c in vec.items()}


def include(vec: dict, k: int) -> dict:
    """a^{(x)2} -> E on factors k, k+1: e_u (x) e_v -> X_u X_v."""
    return {(dvec, g[:k] + ((g[k], g[k + 1]),) + g[k + 2:]): c for (dvec, g), c in vec.items()}


def restrict(vec: dict, k: int) -> dict:
    """Inverse of :func:`include` on its image; fails if a linear term survives."""
    out = {}
    for (dvec, g), c in vec.items():
        w = g[k]
        if len(w) != 2:
            raise InconsistentSystem("boundary of the lift does not lie in the subfunctor")
        out[(dvec, g[:k] + w + g[k + 1:])] = c
    return out


def connecting_map(x: dict, k: int, alt: dict | None = None) -> dict:
    """delta(x) for the extension with I/I^3 in slot k (1-based); ``alt`` is added to the lift."""
    e = lift(x, k - 1)
    if alt:
        vadd(e, include(alt, k - 1))
    return restrict(extension_differential(e, k - 1), k - 1)


class YonedaOracle:
    """Yoneda products x |-> Y(x, y) for y a combination of permuted classes
    Id^{k-1} (x) [pi^{(x)2}] (x) Id^{m-k} in Ext^1(a^{(x)m}, a^{(x)m+1}).

    x is a class in Ext^s(a^{(x)l}, a^{(x)m}) given by a cocycle of
    build_complex(l, m); results are cocycles of build_complex(l, m + 1).
    """

    def __init__(self, limits: OracleLimits = LIMITS, check_lifts: bool = True, seed: int = 0):
        self.limits = limits
        self.check_lifts = check_lifts
        self.rng = random.Random(seed)
        self._norm: dict = {}
        self._bases: dict = {}

    def ext_basis(self, q, l) -> ExtBasis:
        if (q, l) not in self._bases:
            self._bases[(q, l)] = ExtBasis(q, l, 0, self.limits)
        return self._bases[(q, l)]

    def normalization(self, m: int, k: int) -> Fraction:
        """Coordinate of delta(id) on the canonical cocycle of Id^{k-1} (x) [pi^2] (x) Id^{m-k}."""
        if (m, k) not in self._norm:
            ident = WheeledDiagram(m, m, tuple((a,) for a in range(1, m + 1)))
            cx = build_complex(m, m, self.limits)
            x = canonical_cocycle(ident, cx)
            coords = self.ext_basis(m + 1, m).coordinates(connecting_map(x, k))
            target = self.ext_basis(m + 1, m).index[class_y_diagram(m, k)]
            if set(coords) != {target}:
                raise InconsistentSystem("extension does not represent the expected class")
            self._norm[(m, k)] = coords[target]
        return self._norm[(m, k)]

    def product_with_y(self, x: dict, l: int, m: int, k: int) -> dict:
        """Cocycle of Y(x, Id^{k-1} (x) [pi^2] (x) Id^{m-k})."""
        if not 1 <= k <= m:
            raise ValueError(f"slot {k} out of range for arity {m}")
        if m + 1 > self.limits.max_q:
            raise ValueError(f"target arity {m + 1} exceeds the oracle bound")
        cx = build_complex(l, m, self.limits)
        if cx.d(x):
            raise ValueError("x is not a cocycle")
        z = connecting_map(x, k)
        if self.check_lifts:
            deg = {sum(dvec) - l for (dvec, _) in x}
            cx1 = build_complex(l, m + 1, self.limits)
            for s in deg:
                basis = cx1.bases.get(s, [])
                if basis:
                    w = {b: Fraction(self.rng.randint(-3, 3)) for b in self.rng.sample(basis, min(3, len(basis)))}
                    z2 = connecting_map(x, k, alt=w)
                    diff = vadd(dict(z2), z, -1)
                    if vadd(diff, cx1.d(w), -1):
                        raise InconsistentSystem("two lifts give different boundaries")
        n = self.normalization(m, k)
        return {key: c / n for key, c in z.items()}

    def product(self, x: dict, l: int, m: int, y: list) -> dict:
        """y is a list of (coeff, k, sigma) meaning sum coeff * (Y_k . sigma), sigma in S_{m+1}
        or None; the string "id" stands for the identity class of a^{(x)m}."""
        if y == "id":
            return dict(x)
        out: dict = {}
        cx1 = build_complex(l, m + 1, self.limits)
        for coeff, k, sigma in y:
            z = self.product_with_y(x, l, m, k)
            if sigma is not None:
                z = cx1.act_target(sigma, z)
            vadd(out, z, Fraction(coeff))
        return out

    def class_of(self, vec: dict, q: int, l: int) -> dict:
        """Coordinates in the canonical surjection basis of Ext(a^{(x)l}, a^{(x)q})."""
        b = self.ext_basis(q, l)
        return {b.diagrams[i]: c for i, c in sorted(b.coordinates(vec).items())}

    def pi_power(self, n: int) -> dict:
        """The cocycle pi^{(x)n} in build_complex(1, n)."""
        return {((n,), tuple(range(1, n + 1))): Fraction(1)}


def class_y_diagram(m: int, k: int) -> WheeledDiagram:
    """Diagram of Id^{k-1} (x) corolla(2) (x) Id^{m-k} in biarity (m + 1, m)."""
    fibers = [(a,) for a in range(1, k)] + [(k, k + 1)] + [(a + 1,) for a in range(k + 1, m + 1)]
    return WheeledDiagram(m + 1, m, tuple(fibers))


def yoneda_product(x: dict, l: int, m: int, y: list, oracle: YonedaOracle | None = None) -> dict:
    return (oracle or YonedaOracle()).product(x, l, m, y)
