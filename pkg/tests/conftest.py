"""Shared fixtures plus the acceptance-criteria summary printer."""

import itertools
import random

import pytest

import pathcover as pc

_CRITERIA_RESULTS: list[tuple[str, str]] = []


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(label): acceptance criterion covered by this test")


def pytest_runtest_makereport(item, call):
    if call.when != "call":
        return
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    outcome = "PASS" if call.excinfo is None else "FAIL"
    _CRITERIA_RESULTS.append((marker.args[0], outcome))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for label, outcome in _CRITERIA_RESULTS:
        terminalreporter.write_line(f"{outcome}: {label}")


def random_graph(rng: random.Random, max_n: int = 16,
                 weights=(1, 10), min_n: int = 1) -> pc.Graph:
    """Random simple graph with integer weights; density varies per draw."""
    n = rng.randint(min_n, max_n)
    p = rng.uniform(0.05, 0.95)
    triples = [
        (u, v, rng.randint(*weights))
        for u, v in itertools.combinations(range(n), 2)
        if rng.random() < p
    ]
    return pc.build_graph(n, triples)


@pytest.fixture
def five_node_fixture() -> pc.Graph:
    """The K5-minus-nothing instance whose scan order narrates both algorithms.

    Weights are constructed so the descending scan accepts {1,0}, {1,4},
    {3,4}, {2,3}, rejects {0,2}, and (optimized) removes {1,3}, {1,2},
    {0,4}, {2,4}, {0,3} in that order.
    """
    triples = [
        (1, 0, 10), (1, 4, 9), (3, 4, 8), (2, 3, 7), (0, 2, 6),
        (1, 3, 1), (1, 2, 1), (0, 4, 1), (2, 4, 1), (0, 3, 1),
    ]
    return pc.build_graph(5, triples)


@pytest.fixture
def triangle_321() -> pc.Graph:
    return pc.build_graph(3, [(0, 1, 3), (1, 2, 2), (0, 2, 1)])
