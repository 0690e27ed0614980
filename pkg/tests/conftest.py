import random

import pytest
from hypothesis import settings, strategies as st

from nash_toric.lattice import matmul

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

small = st.integers(min_value=-6, max_value=6)


def vectors(d, lo=-6, hi=6):
    return st.tuples(*[st.integers(lo, hi)] * d)


def matrices(rows, cols, lo=-6, hi=6):
    return st.lists(vectors(cols, lo, hi), min_size=rows, max_size=rows).map(tuple)


def random_unimodular(rng: random.Random, d: int = 2, steps: int = 6):
    """Product of random elementary integer matrices and sign flips."""
    m = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
    for _ in range(steps):
        i, j = rng.sample(range(d), 2)
        e = [[int(a == b) for b in range(d)] for a in range(d)]
        e[i][j] = rng.randint(-3, 3)
        m = matmul(e, m)
    if rng.random() < 0.5:
        m = (tuple(-x for x in m[0]),) + m[1:]
    return m


@pytest.fixture
def rng():
    return random.Random(20261019)


def random_exponent(rng: random.Random, semigroup, max_terms: int = 3):
    e = [0] * semigroup.dim
    for _ in range(rng.randint(0, max_terms)):
        h = rng.choice(semigroup.hilbert_basis)
        e = [x + y for x, y in zip(e, h)]
    return tuple(e)


def random_poly(rng: random.Random, ring, terms: int = 3, depth: int = 3):
    p = ring.poly([(random_exponent(rng, ring.semigroup, depth), rng.randint(-3, 3))
                   for _ in range(terms)])
    return p if not p.is_zero() else ring.one()


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
