import pytest

from src.invariants import (
    chi,
    chi_y,
    degree,
    degree_by_multinomial,
    euler_number,
    h0_via_koszul,
)
from src.tower import build_base, preset


@pytest.mark.parametrize(
    "name, euler",
    [("X", 9), ("PE", 27), ("PFdual", 18), ("Y", 21), ("YPE", 21), ("S", 12), ("T", 48)],
)
def test_euler_numbers(name, euler):
    assert euler_number(preset(name)) == euler


def test_projective_plane():
    p2 = build_base((2,))
    assert euler_number(p2) == 3
    assert chi(p2, (1,)) == 3
    assert chi(p2, (-3,)) == 1
    assert degree(p2, (1,)) == 1


def test_degree_of_anticanonical_fourfold(space_y):
    assert degree(space_y, space_y.anticanonical) == 102


def test_degree_independent_expansion():
    assert degree_by_multinomial((2, 2, 2), (1, 1, 1), ((1, 2, 0), (1, 0, 2))) == 102
    assert degree_by_multinomial((2, 2), (1, 1)) == 6


def test_two_constructions_agree():
    y, ype = preset("Y"), preset("YPE")
    assert euler_number(y) == euler_number(ype)
    assert degree(y, y.anticanonical) == degree(ype, ype.anticanonical)
    assert chi_y(y).chi_p == chi_y(ype).chi_p


def test_enriques_surface_invariants(space_s):
    assert chi(space_s, 0) == 1
    assert degree(space_s, space_s.canonical) == 0
    # 2K_S 平凡：χ(2K) = χ(O)
    assert chi(space_s, tuple(2 * k for k in space_s.canonical)) == 1


def test_chi_y_of_fourfold(space_y):
    profile = chi_y(space_y)
    assert profile.chi_p == [1, -3, 13, -3, 1]
    assert profile.euler == 21
    assert profile.signature_sum == 9


def test_chi_y_of_surface(space_s):
    assert chi_y(space_s).chi_p == [1, -10, 1]


@pytest.mark.parametrize("name", ["X", "PFdual", "Y", "S", "T"])
def test_chi_y_consistency(name):
    s = preset(name)
    profile = chi_y(s)
    assert profile.chi_p[0] == chi(s, 0)
    assert profile.euler == euler_number(s)
    n = s.dim
    assert all(profile.chi_p[p] == (-1) ** n * profile.chi_p[n - p] for p in range(n + 1))


def test_koszul_anticanonical_sections(space_y):
    result = h0_via_koszul(space_y, (1, 1, 1))
    assert result.certified
    assert result.value == 27
    assert result.euler_characteristic == chi(space_y, (1, 1, 1))


def test_koszul_structure_sheaf_of_surface(space_s):
    result = h0_via_koszul(space_s, 0)
    assert result.certified
    assert result.value == 1


def test_koszul_on_ambient_is_plain_cohomology():
    result = h0_via_koszul(build_base((2, 2)), (2, 0))
    assert result.certified
    assert result.value == 6


def test_hrr_integrality_on_zero_loci(space_y, space_s):
    from src.invariants import hrr_integrality

    for space in (space_y, space_s):
        report = hrr_integrality(space, 10, seed=3)
        assert report.cases == 10
        assert report.passed, report.failures
