import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from pellmat.gaussint import GaussInt
from pellmat.matrix import DenseMatrix

settings.register_profile("ci", max_examples=200, deadline=None)
settings.register_profile("dev", max_examples=50, deadline=None)
settings.load_profile("ci")

ACCEPTANCE_KEY = pytest.StashKey[list]()


def gauss_ints(bits: int = 512):
    bound = 2**bits
    comp = st.integers(min_value=-bound, max_value=bound)
    return st.builds(GaussInt, comp, comp)


def small_gauss(lo: int = -3, hi: int = 3):
    comp = st.integers(min_value=lo, max_value=hi)
    return st.builds(GaussInt, comp, comp)


@st.composite
def square_matrices(draw, min_n: int = 1, max_n: int = 6, entries=None):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    entries = small_gauss() if entries is None else entries
    flat = draw(st.lists(entries, min_size=n * n, max_size=n * n))
    return DenseMatrix(n, n, tuple(flat))


def random_matrix(rng: random.Random, n: int, lo: int = -3, hi: int = 3) -> DenseMatrix:
    flat = tuple(GaussInt(rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(n * n))
    return DenseMatrix(n, n, flat)


def pytest_configure(config):
    config.stash[ACCEPTANCE_KEY] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
