import pytest

from boolmat import Algebra, BMatrix, parse_vector


@pytest.fixture
def p2():
    return Algebra(["1", "2"])


@pytest.fixture
def p3():
    return Algebra(["1", "2", "3"])


@pytest.fixture
def p5():
    return Algebra(["1", "2", "3", "4", "5"])


def vec(alg, text):
    return parse_vector(alg, text)


def mat(alg, src):
    """Matrix from lines of whitespace-separated element literals."""
    rows = []
    for line in src.strip().splitlines():
        rows.append([alg.parse(tok) for tok in line.split()])
    return BMatrix.of(rows)
