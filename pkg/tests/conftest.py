import os
from pathlib import Path

import numpy as np
import pytest

from roleembed import make_initial_partition
from roleembed.generators import gnp_random_graph, running_example, two_cliques

ROOT = Path(__file__).resolve().parent.parent


def brazil_edgelist_path():
    """Location of the Brazil air-traffic edge list, if it is available."""
    env = os.environ.get("ROLEEMBED_BRAZIL_EDGELIST")
    candidates = [Path(env)] if env else []
    candidates.append(ROOT / "data" / "brazil-airports.edgelist")
    for path in candidates:
        if path.is_file():
            return path
    return None


def random_suite(count=120, max_n=50, seed=2024):
    """Seeded G(n, p) graphs with n <= max_n and p cycling over 0.1, 0.3, 0.5."""
    rng = np.random.default_rng(seed)
    probs = (0.1, 0.3, 0.5)
    graphs = []
    for i in range(count):
        n = int(rng.integers(1, max_n + 1))
        graphs.append(gnp_random_graph(n, probs[i % 3], seed=int(rng.integers(2**31))))
    return graphs


@pytest.fixture
def g_run():
    return running_example()


@pytest.fixture
def g_cliques():
    return two_cliques()


@pytest.fixture
def single_block():
    return make_initial_partition


def ids(g, labels):
    return [g.id_of[x] for x in labels]


_criteria = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    passed = call.excinfo is None
    prev = _criteria.get(number, (title, True))
    _criteria[number] = (title, prev[1] and passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, passed = _criteria[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {title}")
