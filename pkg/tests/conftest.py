from itertools import combinations

import pytest
from hypothesis import strategies as st

from findex.graph import make_graph
from findex.verifier import family_corpus, random_corpus


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return make_graph(n, chosen)


@pytest.fixture(scope="session")
def corpus():
    """Random graphs plus named families up to 12 vertices."""
    return random_corpus(200, 12, (0.2, 0.5, 0.8), seed=1) + family_corpus(12)


_ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    log = request.config.stash.setdefault(_ACCEPTANCE_KEY, [])
    return log


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines):
        terminalreporter.write_line(line)
