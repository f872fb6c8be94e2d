import numpy as np
import pytest

from src.fforacle import enumerate_points, iter_point_chunks, projective_count, projective_points
from src.utils.errors import BudgetExceededError, OracleInputError


def test_plane_over_f2():
    points = list(enumerate_points((2,), 2))
    assert len(points) == 7
    assert len(set(points)) == 7


def test_point_counts():
    assert sum(1 for _ in enumerate_points((2, 2), 2)) == 49
    assert sum(len(c) for c in iter_point_chunks((2, 2, 2), 3, chunk_size=500)) == 2197
    assert projective_count(2, 3) == 13
    assert projective_count(-1, 3) == 0


def test_normalization():
    points = projective_points(3, 5)
    for row in points:
        first = next(x for x in row if x)
        assert first == 1
    assert len({tuple(r) for r in points.tolist()}) == len(points)


def test_chunks_are_disjoint():
    chunks = list(iter_point_chunks((1, 2), 3, chunk_size=7))
    stacked = np.concatenate(chunks)
    assert len({tuple(r) for r in stacked.tolist()}) == 4 * 13


def test_budget_exceeded():
    with pytest.raises(BudgetExceededError):
        list(enumerate_points((2, 2), 5, budget=100))


@pytest.mark.parametrize("p", [0, 1, 4, 9, 7917])
def test_non_prime_rejected(p):
    with pytest.raises(OracleInputError):
        projective_points(2, p)


def test_large_prime_accepted():
    assert len(projective_points(0, 7919)) == 1
