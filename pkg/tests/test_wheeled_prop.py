import itertools

import pytest

from propwheel.diagrams import Element, WheeledDiagram, enumerate_basis
from propwheel.koszul import (Permutation, adjacent_transpositions, all_permutations, koszul_sign,
                              restrict_and_reindex, signature)
from propwheel.wheeled_prop import (ArityError, act_inputs, act_outputs, class_h, class_hbar,
                                   contract, double_contract_commutation_check, generator_sign,
                                   horizontal, identity, mu, partial, suspension_sign, tensor,
                                   vertical, wheel)
from conftest import random_element

T12 = Permutation((2, 1))


def basis_el(d):
    return Element.basis(d)


def test_generator_table_against_suspension():
    assert generator_sign(2, 2, 1) == 1 and generator_sign(2, 2, 2) == -1
    for m, n in itertools.product(range(1, 8), repeat=2):
        for i in range(1, m + 1):
            assert suspension_sign(m, n, i) == generator_sign(m, n, i)
            assert partial(mu(m), i, mu(n)) == generator_sign(m, n, i) * mu(m + n - 1)


def test_anticommutativity():
    assert act_inputs(T12, mu(2)) == -mu(2)
    e = mu(3)
    assert act_inputs(Permutation.identity(3), e) == e


def test_two_wheels_swap():
    # fixed by the oracle's S_2 character on Ext(Lambda^2 a, a^{x2}); see test_ext_oracle
    ww = tensor(wheel(1), wheel(1))
    assert act_inputs(T12, ww) == -ww


def test_act_outputs_examples():
    d = WheeledDiagram(5, 2, ((1, 2), (3, 4, 5)))
    swapped = WheeledDiagram(5, 2, ((3, 4, 5), (1, 2)))
    assert act_outputs(T12, basis_el(d)) == basis_el(swapped)
    d = WheeledDiagram(4, 2, ((1,), (2, 3, 4)))
    assert act_outputs(T12, basis_el(d)) == basis_el(WheeledDiagram(4, 2, ((2, 3, 4), (1,))))
    d = WheeledDiagram(6, 3, ((1, 2), (3, 4), (5, 6)))
    rev = Permutation((3, 2, 1))
    assert act_outputs(rev, basis_el(d)) == -basis_el(WheeledDiagram(6, 3, ((5, 6), (3, 4), (1, 2))))


@pytest.mark.parametrize("q,l", [(q, l) for q in range(1, 6) for l in range(1, min(q, 4) + 1)])
def test_output_transpositions_match_closed_formula(q, l):
    # adjacent transpositions only: for a non-adjacent pair the Koszul sign also
    # picks up the fibers in between, which the two-fiber formula omits
    for d in enumerate_basis(q, l):
        for a in range(1, l):
            b = a + 1
            t = Permutation.transposition(l, a, b)
            sign = (-1) ** ((len(d.fibers[a - 1]) - 1) * (len(d.fibers[b - 1]) - 1))
            fib = list(d.fibers)
            fib[a - 1], fib[b - 1] = fib[b - 1], fib[a - 1]
            target = WheeledDiagram(q, l, tuple(fib), d.wheels)
            assert act_outputs(t, basis_el(d)) == sign * basis_el(target)
            degs = [len(f) - 1 for f in d.fibers]
            assert sign == koszul_sign(t, degs)


@pytest.mark.parametrize("q,l", [(q, l) for q in range(5) for l in range(q + 1)])
def test_bimodule_laws(q, l):
    gq = adjacent_transpositions(q) or [Permutation.identity(q)]
    gl = adjacent_transpositions(l) or [Permutation.identity(l)]
    for d in enumerate_basis(q, l):
        e = basis_el(d)
        for s, t in itertools.product(gq, gq):
            assert act_inputs(t, act_inputs(s, e)) == act_inputs(s @ t, e)
        for s, t in itertools.product(gl, gl):
            assert act_outputs(t, act_outputs(s, e)) == act_outputs(t @ s, e)
        for s, t in itertools.product(gq, gl):
            assert act_outputs(t, act_inputs(s, e)) == act_inputs(s, act_outputs(t, e))


def test_input_action_on_h_is_signature():
    for p in range(1, 5):
        h = class_h(p)
        for s in all_permutations(p + 1):
            assert act_inputs(s, h) == signature(s) * h


def test_horizontal_examples():
    assert horizontal(identity(1), identity(1)) == identity(2)
    assert horizontal(mu(2), mu(2)) == Element.basis(WheeledDiagram(4, 2, ((1, 2), (3, 4))))
    a, b = wheel(1), mu(2)
    ab, ba = horizontal(a, b), horizontal(b, a)
    # move b's inputs in front: inputs (1 | 2 3) of a(x)b become (3 | 1 2)
    sigma = Permutation((2, 3, 1))
    assert act_inputs(sigma, ab) == (-1) ** (1 * 1) * ba


def test_contract_examples():
    assert contract(1, 1, mu(2)) == -wheel(1)
    assert contract(2, 1, mu(2)) == wheel(1)
    assert contract(1, 1, identity(1)).is_zero()
    for n in range(2, 7):
        for i in range(1, n + 1):
            assert contract(i, 1, mu(n)) == (-1) ** i * wheel(n - 1)
    with pytest.raises(ArityError):
        contract(3, 1, mu(2))


def test_zero_wheel_vanishing():
    for q in range(1, 5):
        for l in range(1, q + 1):
            for d in enumerate_basis(q, l):
                for j, f in enumerate(d.fibers, 1):
                    if len(f) == 1:
                        assert contract(f[0], j, basis_el(d)).is_zero()


def test_vertical_examples():
    e = mu(3)
    assert vertical(identity(1), e) == e
    assert vertical(e, identity(3)) == e
    assert vertical(mu(2), horizontal(mu(2), identity(1))) == mu(3)
    rel = vertical(mu(2), horizontal(mu(2), identity(1))) + vertical(mu(2), horizontal(identity(1), mu(2)))
    assert rel.is_zero()
    with pytest.raises(ArityError):
        vertical(mu(2), mu(2))


def test_classes():
    assert class_h(1) == mu(2)
    assert class_h(2) == mu(3)
    for p in range(1, 7):
        assert class_h(p) in (mu(p + 1), -mu(p + 1))
        assert class_hbar(p) == contract(1, 1, class_h(p))
    assert class_hbar(1) == -wheel(1)
    assert contract(2, 1, class_h(1)) == -class_hbar(1)
    with pytest.raises(ValueError):
        class_h(0)
    with pytest.raises(ValueError):
        mu(0)


def test_double_contraction_examples(rng):
    for _ in range(20):
        e = random_element(rng, 4, 2, 4)
        assert double_contract_commutation_check(e, (1, 1), (2, 2))
    assert double_contract_commutation_check(horizontal(mu(2), mu(2)), (1, 1), (3, 2))
    assert double_contract_commutation_check(horizontal(mu(3), identity(1)), (1, 1), (2, 2))


@pytest.mark.parametrize("q,l", [(q, l) for q in range(1, 5) for l in range(1, q + 1)])
def test_bi_equivariance_exhaustive(q, l):
    gq = list(all_permutations(q))
    gl = list(all_permutations(l))
    for d in enumerate_basis(q, l):
        e = basis_el(d)
        for i in range(1, q + 1):
            for j in range(1, l + 1):
                base = contract(i, j, e)
                for s in gq:
                    lhs = contract(i, j, act_inputs(s, e))
                    rhs = act_inputs(restrict_and_reindex(s, set(range(1, q + 1)) - {i}),
                                     contract(s(i), j, e))
                    assert lhs == rhs
                for t in gl:
                    tj = t.inverse()(j)
                    lhs = contract(i, j, act_outputs(t, e))
                    rhs = act_outputs(restrict_and_reindex(t, set(range(1, l + 1)) - {tj}),
                                      contract(i, tj, e))
                    assert lhs == rhs
                assert base.biarity == (q - 1, l - 1)


def test_contracting_unary_identity_is_zero():
    # there are no wheels on zero legs, so closing id(1) into a loop gives 0
    assert contract(1, 1, identity(1)).is_zero()
    assert contract(1, 1, mu(1)).is_zero()
