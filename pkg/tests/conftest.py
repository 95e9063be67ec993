import pytest

from engine import ArrowingEngine
from graphs import complete_graph, cycle_graph, path_graph, star_graph


@pytest.fixture
def engine():
    return ArrowingEngine()


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def s3():
    return star_graph(3)
