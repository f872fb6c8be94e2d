from math import comb

import pytest

from src.chowcore import (
    KClass,
    chern_character,
    chern_class,
    exterior_power,
    integrate,
    k_dual,
    k_tensor,
    symmetric_power,
    todd,
    top_chern,
    total_chern,
)
from src.utils.errors import InvalidDegreeError, RingMismatchError


def test_lambda_two_of_virtual_class(p2):
    a = KClass.line(p2, (1,), 3) - KClass.trivial(p2)
    expected = KClass.from_dict(p2, {(2,): 3, (1,): -3, (0,): 1})
    assert exterior_power(a, 2) == expected
    assert exterior_power(a, 2).rank == 1


def test_lambda_two_matches_character_of_o3(p2):
    a = KClass.line(p2, (1,), 3) - KClass.trivial(p2)
    assert chern_character(exterior_power(a, 2)) == chern_character(KClass.line(p2, (3,)))


def test_exterior_power_ranks(p2xp2):
    a = KClass.from_summands(p2xp2, [(1, 0), (0, 1), (1, 1), (2, -1)])
    for p in range(6):
        assert exterior_power(a, p).rank == comb(4, p)
    assert exterior_power(a, 4) == KClass.line(p2xp2, a.det())


def test_negative_index_raises(p2):
    with pytest.raises(InvalidDegreeError):
        exterior_power(KClass.trivial(p2), -1)


def test_symmetric_power_of_trivial_rank_three(p2):
    e = KClass.trivial(p2, 3)
    assert symmetric_power(e, 2).rank == 6


def test_dual_and_tensor(p2xp2):
    a = KClass.from_summands(p2xp2, [(2, 0), (0, 2)])
    assert a.dual().det() == (-2, -2)
    assert (a * a.dual()).rank == 4
    assert a.twist((1, 1)).det() == (4, 4)


@pytest.mark.parametrize("a, b", [(1, 2), (-3, 1), (0, 0), (2, -2)])
def test_tensor_of_lines_adds_degrees(p2, a, b):
    assert KClass.line(p2, (a,)) * KClass.line(p2, (b,)) == KClass.line(p2, (a + b,))


def test_dual_flips_each_symbol(p2xp2):
    f = KClass.from_summands(p2xp2, [(2, 0), (0, 2)])
    assert k_dual(f) == KClass.from_summands(p2xp2, [(-2, 0), (0, -2)])
    virtual = f - KClass.line(p2xp2, (1, -1), 3)
    assert k_dual(virtual) == KClass.from_dict(p2xp2, {(-2, 0): 1, (0, -2): 1, (-1, 1): -3})
    assert k_dual(k_dual(virtual)) == virtual


def test_tensor_across_presentations_raises(p2, p2xp2):
    with pytest.raises(RingMismatchError):
        k_tensor(KClass.trivial(p2), KClass.trivial(p2xp2))
    with pytest.raises(RingMismatchError):
        KClass.trivial(p2) + KClass.trivial(p2xp2)


def test_chern_character_of_hyperplane(p2):
    ch = chern_character(KClass.line(p2, (1,)))
    assert ch.coefficient((0,)) == 1
    assert ch.coefficient((1,)) == 1
    assert 2 * ch.coefficient((2,)) == 1


def test_tangent_bundle_of_plane(p2):
    tangent = KClass.line(p2, (1,), 3) - KClass.trivial(p2)
    assert integrate(top_chern(tangent)) == 3
    assert integrate(todd(tangent)) == 1
    assert chern_class(tangent, 1) == 3 * p2.gen(0)


def test_whitney_formula(p2xp2):
    a = KClass.from_summands(p2xp2, [(1, 0), (0, 2)])
    b = KClass.from_summands(p2xp2, [(1, 1)])
    assert total_chern(a + b) == total_chern(a) * total_chern(b)


def test_vector_length_validation(p2):
    with pytest.raises(InvalidDegreeError):
        KClass.line(p2, (1, 1))
