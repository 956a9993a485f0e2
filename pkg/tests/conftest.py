import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

import _oracle  # noqa: E402

from wiploop import Permutation, assets, cyclic_group, validate_loop  # noqa: E402

TABLE1 = "01234/13042/20413/34120/42301"
# smallest order-5 reduced loop failing WIP, found by _oracle.reduced_squares + wip_first_witness
NON_WIP5 = "01234/10342/23401/34120/42013"
NON_WIP5_WITNESS = (2, 1, 4)
# the non-associative order-5 WIP class (canonical form)
NONASSOC_WIP5 = "01234/10342/24013/32401/43120"


def loop_of(spec):
    return validate_loop(_oracle.rows(spec))


@pytest.fixture(scope="session")
def t1():
    return assets.table1()


@pytest.fixture(scope="session")
def paper_ab():
    return assets.paper_a(), assets.paper_b()


@pytest.fixture(scope="session")
def non_wip5():
    return loop_of(NON_WIP5)


@pytest.fixture(scope="session")
def nonassoc_wip5():
    return loop_of(NONASSOC_WIP5)


@pytest.fixture(scope="session")
def z():
    return {n: cyclic_group(n) for n in range(1, 7)}


def perm(*images):
    return Permutation(images)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
