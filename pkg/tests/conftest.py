import pytest

from fsts import build_hypergraph, complete_hypergraph

FANO_LINES = [
    (0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5),
]


@pytest.fixture(scope="session")
def k5():
    return complete_hypergraph(3, 5)


@pytest.fixture(scope="session")
def k7():
    return complete_hypergraph(3, 7)


@pytest.fixture(scope="session")
def fano():
    return build_hypergraph(3, 7, FANO_LINES)
