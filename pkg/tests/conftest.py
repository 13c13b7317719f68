import sys

import pytest

from ifsemigroup.data import EnumerationConfig, enumerate_semigroups
from ifsemigroup.semigroup import FiniteSemigroup

TRIVIAL = [[0]]
LEFT_ZERO = [[0, 0], [1, 1]]
NULL2 = [[0, 0], [0, 0]]
Z2 = [[0, 1], [1, 0]]
# {0, 1} under min: 0 is the zero, 1 the identity
SEMILATTICE2 = [[0, 0], [0, 1]]


@pytest.fixture
def trivial():
    return FiniteSemigroup(TRIVIAL)


@pytest.fixture
def left_zero():
    return FiniteSemigroup(LEFT_ZERO)


@pytest.fixture
def null2():
    return FiniteSemigroup(NULL2)


@pytest.fixture
def z2():
    return FiniteSemigroup(Z2)


@pytest.fixture
def semilattice2():
    return FiniteSemigroup(SEMILATTICE2)


@pytest.fixture(scope="session")
def small_semigroups():
    """One representative per isomorphism class, orders 1..3."""
    return list(enumerate_semigroups(EnumerationConfig(3, up_to_iso=True)))


@pytest.fixture(scope="session")
def all_small_tables():
    """Every associative table of order 1..3 (not reduced)."""
    return list(enumerate_semigroups(EnumerationConfig(3)))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
