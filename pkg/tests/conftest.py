import itertools
import random
import time

import pytest

from centrascope.experiments import sweep
from centrascope.enumerate import enumerate_connected
from centrascope.graph import Graph, from_edge_list


@pytest.fixture(scope="session")
def corpus():
    """Connected graphs per node count, cached for the session."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = list(enumerate_connected(n))
        return cache[n]

    return get


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return [g for n in range(1, 7) for g in corpus(n)]


@pytest.fixture(scope="session")
def timed_sweeps():
    """Single-worker generation plus discriminance sweep for n = 5..8, timed from a cold cache."""
    from centrascope.enumerate import connected_graph6

    connected_graph6.cache_clear()
    start = time.perf_counter()
    result = {n: sweep(n, workers=1) for n in range(5, 9)}
    return result, time.perf_counter() - start


@pytest.fixture(scope="session")
def sweeps(timed_sweeps):
    return timed_sweeps[0]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return from_edge_list(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def random_connected(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    from centrascope.graph import is_connected

    while True:
        g = random_graph(rng, n, p)
        if is_connected(g):
            return g
