from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sga.core import SignedGraph

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def signed_graphs(draw, min_n=0, max_n=5, neg_in_pos=False, full_loops=None):
    n = draw(st.integers(min_n, max_n))
    states = (0, 1, 3) if neg_in_pos else (0, 1, 2, 3)
    pos, neg = [], []
    for p in combinations(range(1, n + 1), 2):
        s = draw(st.sampled_from(states))
        if s in (1, 3):
            pos.append(p)
        if s in (2, 3):
            neg.append(p)
    if full_loops is True:
        loops = list(range(1, n + 1))
    elif full_loops is False:
        loops = []
    else:
        loops = [v for v in range(1, n + 1) if draw(st.booleans())]
    return SignedGraph(range(1, n + 1), pos, neg, loops)


@pytest.fixture(params=["python", "cython"], scope="module")
def backend(request):
    """Run a test against one kernel backend."""
    from sga import _pykernels, kernels

    if request.param == "cython":
        if kernels._c is None:
            pytest.skip("compiled kernels unavailable")
        return kernels._c
    return _pykernels


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
