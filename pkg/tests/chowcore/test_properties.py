import pytest

from src.chowcore.properties import (
    check_characteristic_identities,
    check_dual_identities,
    check_lambda_identities,
    check_ring_axioms,
    run_property_suite,
)


@pytest.mark.parametrize(
    "check",
    [
        check_ring_axioms,
        check_lambda_identities,
        check_characteristic_identities,
        check_dual_identities,
    ],
)
def test_quick_properties(pf_dual_pres, check):
    report = check(pf_dual_pres, 25, seed=7)
    assert report.cases == 25
    assert report.passed, report.failures[:3]


@pytest.mark.slow
def test_property_suite_thousand_cases(pf_dual_pres):
    for report in run_property_suite(pf_dual_pres, 1000, seed=20240611):
        assert report.passed, (report.name, report.failures[:3])


@pytest.mark.slow
def test_property_suite_on_threefold_base():
    from src.chowcore import ChowPresentation

    pres = ChowPresentation.for_tower((2, 2, 2), [((-2, 0, 0), (0, -2, 0))])
    for report in run_property_suite(pres, 1000, seed=11):
        assert report.passed, (report.name, report.failures[:3])


def test_suite_includes_dual_identities(p2xp2):
    names = [report.name for report in run_property_suite(p2xp2, 5, seed=3)]
    assert names == ["ring_axioms", "lambda_identities", "characteristic_identities",
                     "dual_identities"]
