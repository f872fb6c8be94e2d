import pytest

from src.invariants import (
    betti_numbers,
    chi_y_from_diamond,
    hh0_from_diamond,
    hodge_euler,
    signature_from_chi_y,
)
from src.utils.errors import DiamondError

ENRIQUES = [[1, 0, 0], [0, 10, 0], [0, 0, 1]]
P2 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_hh0_values():
    assert hh0_from_diamond(ENRIQUES) == 12
    assert hh0_from_diamond(P2) == 3
    rho5 = [[1, 0, 0, 0], [0, 5, 0, 0], [0, 0, 5, 0], [0, 0, 0, 1]]
    assert hh0_from_diamond(rho5) == 12


def test_euler_and_betti():
    assert hodge_euler(ENRIQUES) == 12
    assert betti_numbers(ENRIQUES) == [1, 0, 10, 0, 1]


def test_chi_y_from_diamond():
    profile = chi_y_from_diamond(ENRIQUES)
    assert profile.chi_p == [1, -10, 1]
    assert signature_from_chi_y(profile) == -8


@pytest.mark.parametrize(
    "diamond",
    [
        [],
        [[1, 0], [0]],
        [[1, 1], [0, 1]],
        [[1, 0, 0], [0, 2, 0], [0, 0, 3]],
        [[1, 0], [0, -1]],
    ],
)
def test_malformed_diamonds(diamond):
    with pytest.raises(DiamondError):
        hh0_from_diamond(diamond)
