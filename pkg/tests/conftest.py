import random

import pytest

from propwheel.diagrams import Element, enumerate_basis


def random_element(rng, q, l, nterms=3):
    basis = enumerate_basis(q, l)
    if not basis:
        return Element.zero(q, l)
    terms = {}
    for _ in range(nterms):
        terms[rng.choice(basis)] = rng.randint(-3, 3)
    return Element(q, l, terms)


@pytest.fixture
def rng():
    return random.Random(20261019)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
