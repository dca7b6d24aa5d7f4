"""Cochain complexes computing Ext(a^{(x)l}, a^{(x)q}) from the normalized bar
resolution, evaluated on cross-effects.

A cochain basis element is a pair ``(dvec, g)``: ``dvec = (d_1, ..., d_l)``
are the lengths of the l bar factors (cochain degree ``sum(d_t - 1)``) and
``g`` is a surjection ``{1..q} -> {1..D}``, ``D = sum(d_t)``, read as the
basis tensor ``e_{g(1)} (x) ... (x) e_{g(q)}`` of the multilinear part of
``(Q^D)^{(x)q}``.  Letters ``off_t + 1 .. off_t + d_t`` belong to factor t.

The differential on factor t is ``sum_r (-1)^r`` (double letter ``off_t + r``:
``e_x -> e_x + e_{x+1}``, later letters shift up) followed by the projection
onto surjective tensors; factor t carries the total-complex sign
``(-1)^(sum_{t' < t} (d_t' - 1))``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..koszul import Permutation, all_permutations, koszul_sign, signature
from .linalg import rank, vadd


class ResourceLimitError(RuntimeError):
    pass


@dataclass
class OracleLimits:
    max_q: int = 5
    max_dim: int = 10_000


LIMITS = OracleLimits()


def compositions(total: int, parts: int):
    """Tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def offsets(dvec):
    out, s = [], 0
    for d in dvec:
        out.append(s)
        s += d
    return out


def _surjections(q, D):
    for g in itertools.product(range(1, D + 1), repeat=q):
        if len(set(g)) == D:
            yield g


def double_letter(g: Sequence[int], x: int):
    """Terms of ``delta_x`` applied to the tensor ``g``, projected to surjective tensors."""
    fiber = [a for a, v in enumerate(g) if v == x]
    base = [v + 1 if v > x else v for v in g]
    # each factor at letter x goes to x or x+1; both must be hit
    for choice in itertools.product((0, 1), repeat=len(fiber)):
        if 0 < sum(choice) < len(fiber):
            h = list(base)
            for a, c in zip(fiber, choice):
                h[a] = x + c
            yield tuple(h)


@dataclass
class BarCochainComplex:
    """The Hom complex for source a^{(x)l} (l bar factors) and target a^{(x)q}."""

    l: int
    q: int
    bases: dict = field(default_factory=dict)       # degree -> list of (dvec, g)

    @classmethod
    def build(cls, l: int, q: int, limits: OracleLimits = LIMITS) -> "BarCochainComplex":
        if l < 1 or q < 0:
            raise ValueError("build_complex needs l >= 1 and q >= 0")
        if q > limits.max_q:
            raise ResourceLimitError(f"q = {q} exceeds the configured bound {limits.max_q}")
        c = cls(l, q)
        total = 0
        for D in range(l, q + 1):
            k = D - l
            basis = []
            for dvec in compositions(D, l):
                basis.extend((dvec, g) for g in _surjections(q, D))
            c.bases[k] = basis
            total += len(basis)
            if total > limits.max_dim:
                raise ResourceLimitError(f"total cochain dimension exceeds {limits.max_dim}")
        return c

    @property
    def degrees(self):
        return sorted(self.bases)

    def dim(self, k: int) -> int:
        return len(self.bases.get(k, ()))

    def d(self, vec: dict) -> dict:
        out: dict = {}
        for (dvec, g), c in vec.items():
            offs = offsets(dvec)
            sign_t = 1
            for t, dt in enumerate(dvec):
                new_dvec = dvec[:t] + (dt + 1,) + dvec[t + 1:]
                for r in range(1, dt + 1):
                    s = sign_t * (-1) ** r
                    for h in double_letter(g, offs[t] + r):
                        vadd(out, {(new_dvec, h): c * s})
                if (dt - 1) % 2:
                    sign_t = -sign_t
        return out

    def d_basis(self, k: int):
        return [self.d({b: Fraction(1)}) for b in self.bases.get(k, ())]

    # -- symmetric group actions on cochains --------------------------------

    def act_target(self, sigma: Permutation, vec: dict) -> dict:
        """Right place-permutation action on a^{(x)q}: ``g -> g o sigma``."""
        return {(dvec, tuple(g[sigma(a) - 1] for a in range(1, self.q + 1))): c
                for (dvec, g), c in vec.items()}

    def act_source(self, tau: Permutation, vec: dict) -> dict:
        """Left action on the l source factors: factor t becomes factor tau(t)."""
        out: dict = {}
        for (dvec, g), c in vec.items():
            offs = offsets(dvec)
            new_dvec = [0] * self.l
            for t, dt in enumerate(dvec, 1):
                new_dvec[tau(t) - 1] = dt
            new_offs = offsets(new_dvec)
            relabel = {}
            for t, dt in enumerate(dvec, 1):
                for r in range(1, dt + 1):
                    relabel[offs[t - 1] + r] = new_offs[tau(t) - 1] + r
            sign = koszul_sign(tau, [dt - 1 for dt in dvec])
            vadd(out, {(tuple(new_dvec), tuple(relabel[v] for v in g)): c * sign})
        return out


def build_complex(l: int, q: int, limits: OracleLimits = LIMITS) -> BarCochainComplex:
    return BarCochainComplex.build(l, q, limits)


def _antisym_source(cx, vec, groups):
    """(1/|G|) sum eps(tau) tau over permutations of the given source factors."""
    if len(groups) <= 1:
        return dict(vec)
    out: dict = {}
    n = len(groups)
    for p in all_permutations(n):
        images = list(range(1, cx.l + 1))
        for a, b in zip(groups, p):
            images[a - 1] = groups[b - 1]
        vadd(out, cx.act_source(Permutation(images), vec), Fraction(signature(p), math.factorial(n)))
    return out


def _antisym_target(cx, vec):
    out: dict = {}
    n = cx.q
    for p in all_permutations(n):
        vadd(out, cx.act_target(p, vec), Fraction(signature(p), math.factorial(n)))
    return out


def _projector(cx, lambda_source: int = 0, lambda_target: bool = False):
    groups = list(range(cx.l - lambda_source + 1, cx.l + 1))

    def proj(vec):
        if lambda_source > 1:
            vec = _antisym_source(cx, vec, groups)
        if lambda_target and cx.q > 1:
            vec = _antisym_target(cx, vec)
        return vec
    return proj


def _image_basis(cx, k, proj):
    """Spanning set of proj(C^k), one vector per orbit of basis elements."""
    seen = set()
    out = []
    for b in cx.bases.get(k, ()):
        if b in seen:
            continue
        v = proj({b: Fraction(1)})
        # the orbit of b is contained in supp(proj(b)) up to cancellation
        seen.update(v)
        seen.add(b)
        if v:
            out.append(v)
    return out


def cohomology_dims(cx: BarCochainComplex, proj=None) -> dict:
    """Ranks of H^k of cx (or of the image subcomplex of an idempotent chain map)."""
    spaces = {}
    for k in cx.degrees:
        if proj is None:
            spaces[k] = [{b: Fraction(1)} for b in cx.bases[k]]
        else:
            spaces[k] = _image_basis(cx, k, proj)
    dims_v = {k: rank(v) if proj is not None else len(v) for k, v in spaces.items()}
    rank_d = {k: rank(cx.d(v) for v in spaces[k]) for k in spaces}
    out = {}
    for k in cx.degrees:
        h = dims_v[k] - rank_d[k] - rank_d.get(k - 1, 0)
        if h:
            out[k] = h
    return out


def check_d_squared(cx: BarCochainComplex) -> bool:
    for k in cx.degrees:
        for b in cx.bases[k]:
            if cx.d(cx.d({b: Fraction(1)})):
                return False
    return True


def ext_dimensions(l: int, q: int, limits: OracleLimits = LIMITS) -> dict:
    return cohomology_dims(build_complex(l, q, limits))


def ext_lambda_dimensions(j: int, q: int, limits: OracleLimits = LIMITS) -> dict:
    """Ext(Lambda^j a, a^{(x)q}) via the signature idempotent on the source factors."""
    cx = build_complex(j, q, limits)
    return cohomology_dims(cx, _projector(cx, lambda_source=j))


def ext_lambda_lambda(n: int, m: int, limits: OracleLimits = LIMITS) -> dict:
    """Ext(Lambda^n a, Lambda^m a), idempotents on both sides."""
    if n > m:
        return {}
    cx = build_complex(n, m, limits)
    return cohomology_dims(cx, _projector(cx, lambda_source=n, lambda_target=True))


def ext_mixed_dimensions(l: int, j: int, q: int, limits: OracleLimits = LIMITS) -> dict:
    """Ext(a^{(x)l} (x) Lambda^j a, a^{(x)q}), degrees before the s^{-j} shift."""
    if l + j == 0:
        return {0: 1} if q == 0 else {}
    cx = build_complex(l + j, q, limits)
    return cohomology_dims(cx, _projector(cx, lambda_source=j))


def report(l: int, q: int, j: int = 0, limits: OracleLimits = LIMITS) -> dict:
    """JSON-ready summary of one Ext computation with its self-checks."""
    from ..combinatorics import stirling2, surjection_count
    cx = build_complex(l + j, q, limits)
    dims = ext_mixed_dimensions(l, j, q, limits) if j else cohomology_dims(cx)
    checks = [{"name": "d_squared_zero", "ok": check_d_squared(cx)}]
    top = q - l - j
    concentrated = set(dims) <= {top}
    checks.append({"name": "concentrated_in_degree", "degree": top, "ok": concentrated})
    if j == 0:
        checks.append({"name": "surjection_count", "expected": surjection_count(q, l),
                       "ok": dims.get(top, 0) == surjection_count(q, l)})
    elif l == 0:
        checks.append({"name": "stirling_count", "expected": stirling2(q, j),
                       "ok": dims.get(top, 0) == stirling2(q, j)})
    return {"l": l, "q": q, "j": j, "dims": {str(k): v for k, v in sorted(dims.items())},
            "checks": checks}
