"""Acceptance criteria.  Each criterion prints one PASS/FAIL line (collected by
the terminal summary hook in conftest.py, or printed directly when this file
is run as a script).  All comparisons are exact."""
import itertools
import math
import random
import time
from fractions import Fraction
from pathlib import Path


from propwheel import wheeled_prop as wp
from propwheel.cli import parser as P
from propwheel.cli.main import main as cli_main
from propwheel.combinatorics import partitions_into_parts, stirling2
from propwheel.diagrams import Element, dimension, enumerate_basis, from_json, to_json
from propwheel.ext_oracle import (action_on_cohomology, build_complex, check_d_squared,
                                  closed_form_matrix, ext_dimensions, ext_lambda_dimensions,
                                  ext_lambda_lambda)
from propwheel.ext_oracle.bar import _surjections
from propwheel.ext_oracle.compare import compare_actions, wheel_degree_sign
from propwheel.ext_oracle.yoneda import YonedaOracle, class_y_diagram
from propwheel.koszul import (Permutation, adjacent_transpositions, all_permutations,
                              restrict_and_reindex, signature)

RESULTS = []
SEED = 20261019
BELL = [1, 1, 2, 5, 15, 52, 203, 877]


def _brute_surjections(q, l):
    return sum(1 for f in itertools.product(range(l), repeat=q) if len(set(f)) == l)


def _record(number, title, ok, elapsed, bound, detail=""):
    status = "PASS" if ok and elapsed < bound else "FAIL"
    line = f"criterion {number}: {status}  {title}  ({elapsed:.2f}s, bound {bound}s){detail}"
    RESULTS.append(line)
    print(line)
    return status == "PASS"


def _run(number, title, bound, fn):
    t = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - t
    passed = _record(number, title, ok, elapsed, bound, f"  {detail}" if detail else "")
    assert ok, detail
    assert elapsed < bound, f"took {elapsed:.1f}s, bound {bound}s"
    return passed


# -- 1 -----------------------------------------------------------------------

def criterion_dimensions():
    bad = []
    for q in range(0, 8):
        for l in range(0, q + 1):
            formula = sum(math.comb(q, m) * _brute_surjections(m, l) * BELL[q - m]
                          for m in range(0, q + 1))
            n = len(enumerate_basis(q, l))
            if not (dimension(q, l) == n == formula):
                bad.append((q, l, dimension(q, l), n, formula))
        if dimension(q, q) != math.factorial(q) or dimension(q, 0) != BELL[q]:
            bad.append(("diag/bell", q))
    return not bad, f"mismatches {bad}" if bad else "q <= 7, l <= q"


def test_criterion_1_dimension_theorems():
    _run(1, "dimension theorems", 10, criterion_dimensions)


# -- 2 -----------------------------------------------------------------------

def criterion_oracle_dimensions():
    bad = []
    for q in range(1, 6):
        for l in range(1, q + 1):
            if ext_dimensions(l, q) != {q - l: _brute_surjections(q, l)}:
                bad.append(("ext", l, q))
        for j in range(1, q + 1):
            if ext_lambda_dimensions(j, q) != {q - j: stirling2(q, j)}:
                bad.append(("lambda", j, q))
            if ext_lambda_lambda(j, q) != {q - j: partitions_into_parts(q, j)}:
                bad.append(("lambda-lambda", j, q))
    return not bad, f"mismatches {bad}" if bad else "1 <= l <= q <= 5"


def test_criterion_2_oracle_theorem_agreement():
    _run(2, "oracle-theorem agreement", 120, criterion_oracle_dimensions)


# -- 3 -----------------------------------------------------------------------

def criterion_sign_actions():
    bad = []
    for q in range(1, 5):
        for l in range(1, q + 1):
            for p in adjacent_transpositions(q):
                if action_on_cohomology(p, "inputs", l, q) != closed_form_matrix(p, "inputs", l, q):
                    bad.append(("inputs", q, l, p.cycle_str()))
            for p in adjacent_transpositions(l):
                if action_on_cohomology(p, "outputs", l, q) != closed_form_matrix(p, "outputs", l, q):
                    bad.append(("outputs", q, l, p.cycle_str()))
    for q in range(1, 5):
        for l in range(0, q + 1):
            c = compare_actions(q, l, seed=wheel_degree_sign)
            if not c.ok:
                bad.append(("engine", q, l, len(c.mismatches)))
    return not bad, f"mismatches {bad}" if bad else "generators of S_q x S_l, q <= 4"


def test_criterion_3_sign_action_agreement():
    _run(3, "sign-action agreement", 300, criterion_sign_actions)


# -- 4 -----------------------------------------------------------------------

def criterion_quadratic():
    bad = []
    if not P.eval_text("mu(2) . (mu(2) * id(1)) + mu(2) . (id(1) * mu(2))").is_zero():
        bad.append("relation")
    for p in range(1, 7):
        h = wp.class_h(p)
        if h not in (wp.mu(p + 1), -wp.mu(p + 1)):
            bad.append(("h", p))
        for s in all_permutations(p + 1):
            if wp.act_inputs(s, h) != h * signature(s):
                bad.append(("signature", p, s))
                break
        if wp.class_hbar(p) != wp.contract(1, 1, h):
            bad.append(("hbar", p))
    if wp.contract(2, 1, wp.class_h(1)) != -wp.class_hbar(1):
        bad.append("xi^2")
    return not bad, f"failures {bad}" if bad else "p <= 6"


def test_criterion_4_quadratic_relation_and_classes():
    _run(4, "quadratic relation and classes", 1, criterion_quadratic)


# -- 5 -----------------------------------------------------------------------

def _rand_el(rng, q, l):
    basis = enumerate_basis(q, l)
    if not basis:
        return Element.zero(q, l)
    return Element(q, l, {rng.choice(basis): rng.randint(-3, 3) for _ in range(3)})


def _rand_perm(rng, n):
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(images)


def _contraction_equivariance(e, i, j, s, t):
    q, l = e.q, e.l
    ok = (wp.contract(i, j, wp.act_inputs(s, e))
          == wp.act_inputs(restrict_and_reindex(s, [a for a in range(1, q + 1) if a != i]),
                           wp.contract(s(i), j, e)))
    ti = t.inverse()
    ok = ok and (wp.contract(i, j, wp.act_outputs(t, e))
                 == wp.act_outputs(restrict_and_reindex(t, [b for b in range(1, l + 1) if b != ti(j)]),
                                   wp.contract(i, ti(j), e)))
    return ok


def _interchange(a, b, c, d):
    sign = -1 if (b.degree * c.degree) % 2 else 1
    return (wp.vertical(wp.horizontal(a, b), wp.horizontal(c, d))
            == wp.horizontal(wp.vertical(a, c), wp.vertical(b, d)) * sign)


def criterion_axioms():
    rng = random.Random(SEED)
    counts = dict.fromkeys(["double", "equivariance", "assoc_v", "assoc_h", "unit", "interchange"], 0)
    bad = []
    while min(counts.values()) < 200:
        # contractions
        q, l = rng.randint(2, 5), rng.randint(2, 5)
        if l <= q:
            e = _rand_el(rng, q, l)
            i, j = rng.randint(1, q), rng.randint(1, l)
            k = rng.choice([a for a in range(1, q + 1) if a != i])
            m = rng.choice([b for b in range(1, l + 1) if b != j])
            if not wp.double_contract_commutation_check(e, (i, j), (k, m)):
                bad.append(("double", e))
            counts["double"] += 1
            if not _contraction_equivariance(e, i, j, _rand_perm(rng, q), _rand_perm(rng, l)):
                bad.append(("equivariance", e))
            counts["equivariance"] += 1
        # composition laws; a:(n1,l1) b:(n2,l2) c:(m1,n1) d:(m2,n2) f:(k1,m1)
        l1, l2 = rng.randint(0, 2), rng.randint(0, 2)
        n1, n2 = rng.randint(l1, l1 + 1), rng.randint(l2, l2 + 1)
        m1, m2 = rng.randint(n1, n1 + 1), rng.randint(n2, n2 + 1)
        k1 = rng.randint(m1, m1 + 1)
        if m1 + m2 > 5 or k1 > 5:
            continue
        a, b = _rand_el(rng, n1, l1), _rand_el(rng, n2, l2)
        c, d = _rand_el(rng, m1, n1), _rand_el(rng, m2, n2)
        f = _rand_el(rng, k1, m1)
        if wp.vertical(wp.vertical(a, c), f) != wp.vertical(a, wp.vertical(c, f)):
            bad.append(("assoc_v", a, c, f))
        counts["assoc_v"] += 1
        if wp.horizontal(wp.horizontal(a, b), c) != wp.horizontal(a, wp.horizontal(b, c)):
            bad.append(("assoc_h", a, b, c))
        counts["assoc_h"] += 1
        if not (wp.vertical(wp.identity(l1), a) == a == wp.vertical(a, wp.identity(n1))
                and wp.horizontal(wp.identity(0), a) == a == wp.horizontal(a, wp.identity(0))):
            bad.append(("unit", a))
        counts["unit"] += 1
        if not _interchange(a, b, c, d):
            bad.append(("interchange", a, b, c, d))
        counts["interchange"] += 1

    # exhaustive on basis diagrams with q, l <= 3
    def basis(q, l):
        return [Element.basis(x) for x in enumerate_basis(q, l)]
    arities = [(q, l) for q in range(4) for l in range(q + 1)]
    for q, l in arities:
        for e in basis(q, l):
            if not (wp.vertical(wp.identity(l), e) == e == wp.vertical(e, wp.identity(q))):
                bad.append(("basis unit", e))
            for i, j in itertools.product(range(1, q + 1), range(1, l + 1)):
                for s in all_permutations(q):
                    for t in all_permutations(l):
                        if not _contraction_equivariance(e, i, j, s, t):
                            bad.append(("basis equivariance", e, i, j))
                for k, m in itertools.product(range(1, q + 1), range(1, l + 1)):
                    if k != i and m != j and not wp.double_contract_commutation_check(e, (i, j), (k, m)):
                        bad.append(("basis double", e))
    for (n, l), (m, n2), (k, m2) in itertools.product(arities, repeat=3):
        if n2 != n or m2 != m:
            continue
        for a in basis(n, l):
            for c in basis(m, n):
                ac = wp.vertical(a, c)
                for f in basis(k, m):
                    if wp.vertical(ac, f) != wp.vertical(a, wp.vertical(c, f)):
                        bad.append(("basis assoc", a, c, f))
    for (n1, l1), (n2, l2) in itertools.product(arities, repeat=2):
        for m1, m2 in itertools.product(range(n1, 4), range(n2, 4)):
            if m1 + m2 > 3:
                continue
            for a, b, c, d in itertools.product(basis(n1, l1), basis(n2, l2),
                                                basis(m1, n1), basis(m2, n2)):
                if not _interchange(a, b, c, d):
                    bad.append(("basis interchange", a, b, c, d))
    return not bad, f"{len(bad)} failures, first {bad[:1]}" if bad else f"random counts {counts}"


def test_criterion_5_wheeled_prop_axioms():
    _run(5, "wheeled-PROP axioms", 60, criterion_axioms)


# -- 6 -----------------------------------------------------------------------

def criterion_yoneda():
    y = YonedaOracle(seed=SEED)
    bad = []
    # Y(pi^n, Y(k)) = sign * [pi^{n+1}], the sign being that of mu_n o_k mu_2
    for n in (2, 3):
        corolla = [d for d in enumerate_basis(n + 1, 1) if len(d.fibers[0]) == n + 1][0]
        for k in range(1, n + 1):
            sign = wp.generator_sign(n, 2, k)
            z = y.product(y.pi_power(n), 1, n, [(1, k, None)])
            if y.class_of(z, n + 1, 1) != {corolla: sign}:
                bad.append(("pi^n", n, k))
    # table over sigma in S_2 acting on x and tau in S_3 acting on Y(i), against the engine
    cx2 = build_complex(1, 2)
    mu2 = [d for d in enumerate_basis(2, 1) if not d.wheels][0]
    for i in (1, 2):
        yk = wp.tensor(wp.identity(i - 1), wp.mu(2), wp.identity(2 - i))
        c_y = dict(yk.items())[class_y_diagram(2, i)]
        for s in all_permutations(2):
            x = cx2.act_target(s, y.pi_power(2))
            x_engine = wp.act_inputs(s, Element.basis(mu2))
            for t in all_permutations(3):
                got = y.class_of(y.product(x, 1, 2, [(1, i, t)]), 3, 1)
                want = {d: c / c_y for d, c in wp.vertical(x_engine, wp.act_inputs(t, yk)).items()}
                if got != want:
                    bad.append(("table", i, s, t, got, want))
    return not bad, f"failures {bad}" if bad else "n = 2, 3 and the S_2 x S_3 sign table"


def test_criterion_6_yoneda_oracle():
    _run(6, "Yoneda oracle", 120, criterion_yoneda)


# -- 7 -----------------------------------------------------------------------

def criterion_d_squared():
    bad = []
    for l in range(1, 4):
        for q in range(0, 6):
            cx = build_complex(l, q)
            if not check_d_squared(cx):
                bad.append(("d^2", l, q))
            if any(k + l > q for k in cx.degrees):
                bad.append(("degree above q", l, q))
            for D in range(q + 1, q + 3):
                if any(True for _ in _surjections(q, D)):
                    bad.append(("cross-effect", q, D))
            top = cx.bases.get(q - l, [])
            if any(cx.d({b: Fraction(1)}) for b in top):
                bad.append(("top cochain not closed", l, q))
    return not bad, f"failures {bad}" if bad else "l <= 3, q <= 5"


def test_criterion_7_bar_complex():
    _run(7, "d^2 = 0 and cross-effect vanishing", 60, criterion_d_squared)


# -- 8 -----------------------------------------------------------------------

def criterion_cli():
    import io
    rng = random.Random(SEED)
    bad = []
    for _ in range(500):
        e = P.random_expr(rng)
        if P.parse(P.to_text(e)) != e:
            bad.append(("expr", P.to_text(e)))
    for _ in range(500):
        q = rng.randint(0, 5)
        l = rng.randint(0, q)
        el = _rand_el(rng, q, l)
        if from_json(to_json(el)) != el:
            bad.append(("json", el))
        if q >= l and P.eval_text(P.element_text(el)) != el:
            bad.append(("element text", el))
    golden = (Path(__file__).parent / "golden" / "dims_q5.txt").read_text()
    out = io.StringIO()
    cli_main(["dims", "5", "5"], out)
    if out.getvalue() != golden:
        bad.append("golden table differs from CLI output")
    rows = [r.split() for r in golden.splitlines()[1:]]
    for r in rows:
        q = int(r[0])
        for l, v in enumerate(r[1:]):
            formula = sum(math.comb(q, m) * _brute_surjections(m, l) * BELL[q - m] for m in range(q + 1))
            if int(v) != formula:
                bad.append(("golden", q, l))
    return not bad, f"failures {bad[:3]}" if bad else "500 expressions, 500 elements, golden q <= 5"


def test_criterion_8_cli_round_trips():
    _run(8, "CLI round trips", 10, criterion_cli)


if __name__ == "__main__":
    fns = [(1, "dimension theorems", 10, criterion_dimensions),
           (2, "oracle-theorem agreement", 120, criterion_oracle_dimensions),
           (3, "sign-action agreement", 300, criterion_sign_actions),
           (4, "quadratic relation and classes", 1, criterion_quadratic),
           (5, "wheeled-PROP axioms", 60, criterion_axioms),
           (6, "Yoneda oracle", 120, criterion_yoneda),
           (7, "d^2 = 0 and cross-effect vanishing", 60, criterion_d_squared),
           (8, "CLI round trips", 10, criterion_cli)]
    all_ok = True
    for number, title, bound, fn in fns:
        t = time.perf_counter()
        ok, detail = fn()
        all_ok &= _record(number, title, ok, time.perf_counter() - t, bound, f"  {detail}")
    raise SystemExit(0 if all_ok else 1)
