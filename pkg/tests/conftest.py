import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from ordchrom.core import OrderedGraph  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def ordered_graphs(draw, min_n=1, max_n=7, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return OrderedGraph(n, frozenset(e for e, b in zip(pairs, bits) if b))


@st.composite
def ordered_forests(draw, min_n=2, max_n=7):
    n = draw(st.integers(min_n, max_n))
    perm = draw(st.permutations(range(1, n + 1)))
    edges = set()
    for i in range(1, n):
        if draw(st.booleans()) or n <= 3:
            j = draw(st.integers(0, i - 1))
            a, b = perm[i], perm[j]
            edges.add((min(a, b), max(a, b)))
    return OrderedGraph(n, frozenset(edges))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def acceptance_lines():
    return ACCEPTANCE_LINES
