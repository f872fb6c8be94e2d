import pytest

from src.tower import (
    SplitBundle,
    add_proj_bundle,
    anticanonical_ample,
    build_base,
    curve_pairings,
    cut_zero_locus,
    preset,
    preset_names,
)
from src.utils.errors import InvalidDegreeError, TowerShapeError, UnknownPresetError


def test_build_base_dimension_and_canonical():
    x = build_base((2, 2))
    assert x.dim == 4
    assert x.canonical == (-3, -3)


def test_proj_bundle_canonical():
    pf = preset("PFdual")
    assert pf.dim == 5
    assert pf.canonical == (-1, -1, -2)


def test_trivial_projectivization_is_product():
    pe = preset("PE")
    assert pe.dim == 6
    assert pe.canonical == (-3, -3, -3)


@pytest.mark.parametrize(
    "name, dim, canonical",
    [
        ("Y", 4, (-1, -1, -1)),
        ("S", 2, (-1, -1, 1)),
        ("T", 6, (-1, -1, -2, -1)),
        ("YPE", 4, (-1, -1, -1)),
    ],
)
def test_preset_shapes(name, dim, canonical):
    s = preset(name)
    assert s.name == name
    assert s.dim == dim
    assert s.canonical == canonical


def test_unknown_preset():
    with pytest.raises(UnknownPresetError):
        preset("Q")
    assert "Y" in preset_names()


def test_zero_locus_rank_zero_is_identity():
    x = build_base((2, 2))
    assert cut_zero_locus(x, SplitBundle(())) is x


def test_zero_locus_rank_too_large():
    x = build_base((1,))
    with pytest.raises(TowerShapeError):
        cut_zero_locus(x, SplitBundle.of((1,), (1,)))


def test_zero_locus_negative_degree_is_allowed():
    x = build_base((2, 2))
    s = cut_zero_locus(x, SplitBundle.of((1, -1)))
    assert s.dim == 3


def test_bundle_arity_checked():
    x = build_base((2, 2))
    with pytest.raises(InvalidDegreeError):
        add_proj_bundle(x, SplitBundle.of((1, 0, 0)))


def test_split_ambient_of_surface():
    ambient, normal = preset("S").split_ambient()
    assert ambient.dim == 5
    assert normal == ((0, 0, 1),) * 3


def test_fano_flags():
    assert anticanonical_ample(preset("X"))
    assert anticanonical_ample(preset("Y"))
    assert anticanonical_ample(preset("T"))
    assert anticanonical_ample(preset("PFdual"))
    assert not anticanonical_ample(preset("S"))


def test_curve_pairings_on_pf_dual():
    pairings = curve_pairings(preset("PFdual"), (1, 1, 2))
    assert pairings["fiber"] == 2
    assert pairings["section1.line(h1)"] == 5
    assert pairings["section1.line(h2)"] == 1
