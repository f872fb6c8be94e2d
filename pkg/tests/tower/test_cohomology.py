import pytest

from src.tower import anticanonical_ample, build_base, curve_pairings, is_ample, line_bundle_cohomology, preset
from src.utils.errors import TowerShapeError


@pytest.mark.parametrize("d, h0", [(0, 1), (1, 3), (2, 6), (3, 10)])
def test_plane_sections(d, h0):
    assert line_bundle_cohomology(build_base((2,)), (d,))[0] == h0


def test_plane_top_cohomology():
    assert line_bundle_cohomology(build_base((2,)), (-3,)) == [0, 0, 1]
    assert line_bundle_cohomology(build_base((2,)), (-1,)) == [0, 0, 0]


def test_kunneth_mixed_degrees():
    # O(1,-3) on P2 x P2: h^2 = 3 * 1
    assert line_bundle_cohomology(build_base((2, 2)), (1, -3)) == [0, 0, 3, 0, 0]


def test_pushforward_of_relative_hyperplane():
    pf = preset("PFdual")
    # h^0(O_xi(1)) = h^0(O(2,0)) + h^0(O(0,2))
    assert line_bundle_cohomology(pf, (0, 0, 1))[0] == 12
    assert line_bundle_cohomology(pf, (0, 0, -1)) == [0] * 6


def test_relative_top_degree():
    pf = preset("PFdual")
    # R^1 p_* O(-2) = det B = O(-2,-2)：h^4 = 1 before the shift, total degree 5
    assert line_bundle_cohomology(pf, (-1, -1, -2))[5] == 1


def test_zero_locus_rejected():
    with pytest.raises(TowerShapeError):
        line_bundle_cohomology(preset("Y"), (1, 1, 1))


def test_curve_pairings_on_base():
    x = build_base((2, 2))
    assert curve_pairings(x, x.anticanonical) == {"line(h1)": 3, "line(h2)": 3}
    assert not is_ample(x, (1, 0))


def test_anticanonical_pairings_of_projectivization():
    pf = preset("PFdual")
    assert pf.anticanonical == (1, 1, 2)
    assert curve_pairings(pf, pf.anticanonical) == {
        "fiber": 2,
        "section1.line(h1)": 5,
        "section1.line(h2)": 1,
        "section2.line(h1)": 1,
        "section2.line(h2)": 5,
    }
    assert anticanonical_ample(pf)


def test_fourfold_anticanonical_is_ample():
    y = preset("Y")
    assert y.anticanonical == (1, 1, 1)
    assert anticanonical_ample(y)
