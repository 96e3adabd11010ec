import itertools

import numpy as np
import pytest

from induced_fourier import builtin_instance, induce


def perm_table(n):
    """Cayley table of S_n built directly from composition of permutation tuples."""
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    return [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms], perms


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def s3_a3():
    return builtin_instance("S3>A3")


def induced_all(inst):
    return {label: induce(inst.G, inst.K, L, label) for label, L in inst.sigmas.items()}


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
