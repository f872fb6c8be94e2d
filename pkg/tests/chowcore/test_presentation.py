from sympy import Rational

import pytest

from src.chowcore import ChowPresentation, integrate, monomials_up_to, normal_form
from src.utils.errors import InvalidDegreeError, RingMismatchError, TowerShapeError


def test_projective_plane_point_class(p2):
    h = p2.gen("h1")
    assert integrate(h ** 2) == 1
    assert (h ** 3).is_zero()
    assert integrate(h) == 0


def test_product_integrals(p2xp2):
    a, b = p2xp2.gen(0), p2xp2.gen(1)
    assert integrate(a ** 2 * b ** 2) == 1
    assert integrate((a + b) ** 4) == 6
    assert (a ** 3).is_zero()


def test_grothendieck_relation_on_pf_dual(pf_dual_pres):
    a, b, xi = (pf_dual_pres.gen(n) for n in ("h1", "h2", "xi"))
    assert xi ** 2 == (2 * a + 2 * b) * xi - 4 * a * b


@pytest.mark.parametrize(
    "exponents, expected",
    [
        ((2, 2, 1), 1),
        ((2, 1, 2), 2),
        ((2, 0, 3), 4),
        ((1, 1, 3), 4),
        ((1, 0, 4), 8),
        ((0, 0, 5), 16),
    ],
)
def test_pf_dual_integrals(pf_dual_pres, exponents, expected):
    assert integrate(pf_dual_pres.element({exponents: 1})) == expected


def test_fundamental_monomial_integrates_to_one(pf_dual_pres):
    assert pf_dual_pres.fundamental_monomial == (2, 2, 1)
    assert integrate(pf_dual_pres.point_class()) == 1
    assert pf_dual_pres.total_dimension == 5


def test_normal_form_is_idempotent(pf_dual_pres):
    xi = pf_dual_pres.gen("xi")
    c = xi ** 4 + 3 * xi ** 2 - 1
    assert normal_form(normal_form(c)) == normal_form(c)
    assert all(pf_dual_pres.is_normal_monomial(m) for m in c.terms)


def test_reduction_is_stable_across_equal_presentations():
    first = ChowPresentation.for_tower((2, 2), [((-2, 0), (0, -2))])
    second = ChowPresentation.for_tower((2, 2), [((-2, 0), (0, -2))])
    assert first == second
    assert hash(first) == hash(second)
    values = [integrate(first.gen("xi") ** 5) for _ in range(3)]
    values.append(integrate(second.gen("xi") ** 5))
    assert values == [16] * 4
    assert normal_form(first.gen("xi") ** 3) == normal_form(second.gen("xi") ** 3)


def test_rational_coefficients_survive(p2):
    h = p2.gen(0)
    c = h * Rational(1, 2) + h * Rational(1, 2)
    assert c == h
    assert integrate(h ** 2 * Rational(1, 3)) == Rational(1, 3)


def test_scalar_comparison(p2):
    assert p2.one() == 1
    assert p2.zero() == 0


def test_mixing_presentations_raises(p2, p2xp2):
    with pytest.raises(RingMismatchError):
        p2.gen(0) + p2xp2.gen(0)


def test_linear_rejects_wrong_length(p2xp2):
    with pytest.raises(InvalidDegreeError):
        p2xp2.linear((1, 2, 3))


def test_empty_base_rejected():
    with pytest.raises(TowerShapeError):
        ChowPresentation.for_base(())


def test_rank_zero_bundle_rejected(p2):
    with pytest.raises(TowerShapeError):
        p2.extend(())


def test_monomials_up_to_counts(p2xp2):
    # 总次数 <= 4 的正规单项式正好是 3 x 3 个
    assert len(monomials_up_to(p2xp2, 4)) == 9
    assert len(monomials_up_to(p2xp2, 1)) == 3


def test_lift_to_tower(p2xp2, pf_dual_pres):
    a = p2xp2.gen(0)
    lifted = p2xp2.lift(a ** 2, pf_dual_pres)
    assert lifted == pf_dual_pres.gen("h1") ** 2
    assert p2xp2.embeds_into(pf_dual_pres)
