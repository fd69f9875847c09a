import pytest

import yfrieze as yf

# Width-3 classification (the ten first diagonals), used as golden data in
# several suites.
W3_GOLDEN = (
    (1, 1, 2), (1, 2, 3), (1, 4, 5), (2, 1, 1), (2, 3, 2),
    (2, 9, 5), (3, 2, 1), (3, 8, 3), (5, 4, 1), (5, 9, 2),
)


@pytest.fixture(scope="session")
def w3_solutions():
    return yf.enumerate_w3()


@pytest.fixture(scope="session")
def w4_solutions():
    return yf.enumerate_w4()


@pytest.fixture(scope="session")
def y3_patterns(w3_solutions):
    return yf.patterns_of(w3_solutions)


@pytest.fixture(scope="session")
def y4_patterns(w4_solutions):
    return yf.patterns_of(w4_solutions)


@pytest.fixture(scope="session")
def frieze3():
    return yf.enumerate_frieze(3)


@pytest.fixture(scope="session")
def frieze4():
    return yf.enumerate_frieze(4)
