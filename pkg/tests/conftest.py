from __future__ import annotations

import pytest

from netctrl import DirectedGraph


@pytest.fixture
def star():
    """hub -> {a, b, c}"""
    return DirectedGraph(["hub", "a", "b", "c"], [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def path3():
    """v1 -> v2 -> v3"""
    return DirectedGraph(["v1", "v2", "v3"], [(0, 1), (1, 2)])


@pytest.fixture
def cycle3():
    """1 -> 2 -> 3 -> 1"""
    return DirectedGraph(["1", "2", "3"], [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def two_matchings():
    """1 -> 2, 2 -> 1, 1 -> 3: exactly two maximum matchings."""
    return DirectedGraph(["1", "2", "3"], [(0, 1), (1, 0), (0, 2)])


@pytest.fixture(scope="session")
def fixture_corpus():
    from corpus import build_fixture_corpus

    return build_fixture_corpus()
