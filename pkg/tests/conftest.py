import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from hibi import Poset  # noqa: E402
from hibi.census import enumerate_posets  # noqa: E402


def V():
    return Poset.from_relations("abc", [("a", "c"), ("b", "c")])


def chain_plus_point(k):
    return Poset.disjoint_union(Poset.chain(k), Poset.antichain(1))


def two_chains(a, b):
    return Poset.disjoint_union(Poset.chain(a), Poset.chain(b))


def small_posets(nmax, nmin=1):
    return [P for n in range(nmin, nmax + 1) for P in enumerate_posets(n)]


@pytest.fixture
def vposet():
    return V()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
