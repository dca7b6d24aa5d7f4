"""Invariant suites run by ``propwheel check``.

Each suite takes a seeded ``random.Random`` and returns a list of
``(description, passed)`` pairs.
"""
from __future__ import annotations

import itertools
import random

from .. import wheeled_prop as wp
from ..combinatorics import bell, dimension_formula
from ..diagrams import Element, enumerate_basis, from_json, to_json
from ..koszul import (Permutation, all_permutations, koszul_sign, restrict_and_reindex,
                      signature)
from . import parser


def random_element(rng, q, l, nterms=3):
    basis = enumerate_basis(q, l)
    if not basis:
        return Element.zero(q, l)
    return Element(q, l, {rng.choice(basis): rng.randint(-3, 3) for _ in range(nterms)})


def random_permutation(rng, n):
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(images)


def suite_quadratic(rng):
    rel = parser.eval_text("mu(2) . (mu(2) * id(1)) + mu(2) . (id(1) * mu(2))")
    out = [("relation h1 o (h1 x 1) + h1 o (1 x h1) = 0", rel.is_zero())]
    for p in range(1, 7):
        h = wp.class_h(p)
        ok = h in (wp.mu(p + 1), -wp.mu(p + 1))
        ok = ok and all(wp.act_inputs(s, h) == h * signature(s)
                        for s in itertools.islice(all_permutations(p + 1), 0, None, max(1, p)))
        out.append((f"class_h({p}) = +-mu({p + 1}) with signature action", ok))
    out.append(("xi^2_1(h_1) = -hbar_1", wp.contract(2, 1, wp.class_h(1)) == -wp.class_hbar(1)))
    return out


def suite_koszul(rng):
    ok = True
    for _ in range(50):
        n = rng.randint(1, 6)
        degs = [rng.randint(0, 3) for _ in range(n)]
        s, t = random_permutation(rng, n), random_permutation(rng, n)
        # reorder by t, then by s: the Koszul signs compose
        t_degs = [degs[t.inverse()(i) - 1] for i in range(1, n + 1)]
        ok = ok and koszul_sign(s @ t, degs) == koszul_sign(t, degs) * koszul_sign(s, t_degs)
    return [("Koszul sign is a crossed homomorphism", ok)]


def suite_dimensions(rng):
    out = []
    for q in range(0, 7):
        for l in range(0, q + 1):
            out.append((f"dimension({q},{l})", len(enumerate_basis(q, l)) == dimension_formula(q, l)))
        out.append((f"dimension({q},0) = Bell({q})", dimension_formula(q, 0) == bell(q)))
    return out


def suite_bimodule(rng):
    ok = True
    for _ in range(60):
        q, l = rng.randint(0, 4), rng.randint(0, 3)
        if l > q:
            continue
        e = random_element(rng, q, l)
        s, t = random_permutation(rng, q), random_permutation(rng, q)
        u, v = random_permutation(rng, l), random_permutation(rng, l)
        ok = ok and wp.act_inputs(s, wp.act_inputs(t, e)) == wp.act_inputs(t @ s, e)
        ok = ok and wp.act_outputs(u, wp.act_outputs(v, e)) == wp.act_outputs(u @ v, e)
        ok = ok and (wp.act_outputs(u, wp.act_inputs(s, e)) == wp.act_inputs(s, wp.act_outputs(u, e)))
    return [("left and right actions commute and compose", ok)]


def suite_contraction(rng):
    ok_comm = ok_eq = True
    for _ in range(60):
        q, l = rng.randint(2, 5), rng.randint(2, 4)
        if l > q:
            continue
        e = random_element(rng, q, l)
        first = (rng.randint(1, q), rng.randint(1, l))
        second = (rng.choice([a for a in range(1, q + 1) if a != first[0]]),
                  rng.choice([b for b in range(1, l + 1) if b != first[1]]))
        ok_comm = ok_comm and wp.double_contract_commutation_check(e, first, second)
        i, j = first
        s = random_permutation(rng, q)
        lhs = wp.contract(i, j, wp.act_inputs(s, e))
        s_rest = restrict_and_reindex(s, [a for a in range(1, q + 1) if a != i])
        ok_eq = ok_eq and lhs == wp.act_inputs(s_rest, wp.contract(s(i), j, e))
    return [("double contractions commute", ok_comm),
            ("contraction is equivariant for input relabeling", ok_eq)]


def suite_axioms(rng):
    ok_assoc = ok_unit = ok_inter = ok_hassoc = True
    for _ in range(60):
        l1, l2 = rng.randint(0, 2), rng.randint(0, 2)
        n1, n2 = rng.randint(l1, l1 + 1), rng.randint(l2, l2 + 1)
        m1, m2 = rng.randint(n1, n1 + 1), rng.randint(n2, n2 + 1)
        if m1 + m2 > 5:
            continue
        a, b = random_element(rng, n1, l1), random_element(rng, n2, l2)
        c, d = random_element(rng, m1, n1), random_element(rng, m2, n2)
        sign = -1 if ((n2 - l2) * (m1 - n1)) % 2 else 1
        ok_inter = ok_inter and (wp.vertical(wp.horizontal(a, b), wp.horizontal(c, d))
                                 == wp.horizontal(wp.vertical(a, c), wp.vertical(b, d)) * sign)
        e = random_element(rng, m1, m1)
        ok_assoc = ok_assoc and wp.vertical(wp.vertical(a, c), e) == wp.vertical(a, wp.vertical(c, e))
        ok_unit = ok_unit and wp.vertical(wp.identity(l1), a) == a == wp.vertical(a, wp.identity(n1))
        ok_hassoc = ok_hassoc and (wp.horizontal(wp.horizontal(a, b), c)
                                   == wp.horizontal(a, wp.horizontal(b, c)))
    return [("vertical composition is associative", ok_assoc),
            ("identities are units", ok_unit),
            ("horizontal composition is associative", ok_hassoc),
            ("graded interchange law", ok_inter)]


def suite_roundtrip(rng):
    ok_expr = ok_elem = ok_json = True
    for _ in range(100):
        e = parser.random_expr(rng)
        ok_expr = ok_expr and parser.parse(parser.to_text(e)) == e
        v = parser.evaluate(e)
        ok_elem = ok_elem and parser.eval_text(parser.element_text(v)) == v
        ok_json = ok_json and from_json(to_json(v)) == v
    return [("parse o print is the identity on expressions", ok_expr),
            ("printed elements evaluate back to themselves", ok_elem),
            ("JSON round trip", ok_json)]


def suite_oracle(rng):
    from ..combinatorics import surjection_count, stirling2
    from ..ext_oracle import ext_dimensions, ext_lambda_dimensions, build_complex, check_d_squared
    from ..ext_oracle.compare import compare_actions, compare_yoneda
    out = []
    for q in range(1, 5):
        for l in range(1, q + 1):
            out.append((f"Ext(a^{l}, a^{q}) has dimension |Surj|",
                        ext_dimensions(l, q) == {q - l: surjection_count(q, l)}))
            out.append((f"d o d = 0 on C({l},{q})", check_d_squared(build_complex(l, q))))
        for j in range(1, q + 1):
            out.append((f"Ext(Lambda^{j} a, a^{q}) has dimension S({q},{j})",
                        ext_lambda_dimensions(j, q) == {q - j: stirling2(q, j)}))
    for q in range(1, 4):
        for l in range(0, q + 1):
            out.append((f"engine actions on ({q},{l}) match the oracle", compare_actions(q, l).ok))
    for m in range(1, 3):
        for l in range(1, m + 1):
            out.append((f"Yoneda products on ({m},{l}) match vertical composition",
                        not compare_yoneda(m, l)))
    return out


SUITES = {
    "quadratic": suite_quadratic,
    "koszul": suite_koszul,
    "dimensions": suite_dimensions,
    "bimodule": suite_bimodule,
    "contraction": suite_contraction,
    "axioms": suite_axioms,
    "roundtrip": suite_roundtrip,
    "oracle": suite_oracle,
}


def run_suite(name: str, seed: int = 0):
    """Run one suite (or "all"); returns a list of (suite, description, passed)."""
    if name != "all" and name not in SUITES:
        raise KeyError(name)
    names = list(SUITES) if name == "all" else [name]
    out = []
    for n in names:
        rng = random.Random(f"{seed}:{n}")
        out.extend((n, desc, ok) for desc, ok in SUITES[n](rng))
    return out
