from src.fforacle import draw_general_instance, instance_seed, load_instance, run_oracle_campaign
from src.utils.engine_config import EngineConfig

SMALL = EngineConfig(primes=(5,), seeds_per_prime=2, jacobian_trials=10)


def test_instance_seed_sequence():
    assert instance_seed(11, 0) == [11, 0]
    assert instance_seed(11, 3) == [11, 3]


def test_general_instance_has_empty_d0():
    drawn = draw_general_instance(5, 1, SMALL)
    assert drawn.generic
    m = load_instance(drawn.instance_text)
    assert drawn.profile.count_at_most(m.f - 2) == 0
    assert all(r.singular_hits == 0 for r in drawn.jacobians)


def test_draw_is_deterministic():
    first = draw_general_instance(5, 9, SMALL)
    second = draw_general_instance(5, 9, SMALL)
    assert first.attempt == second.attempt
    assert first.instance_text == second.instance_text


def test_campaign_identities_hold():
    report = run_oracle_campaign(SMALL)
    assert report.identities_hold
    assert report.passed
    assert len(report.results) == 2
    assert report.generic_fraction[5] == 1.0
    assert 0.0 <= report.first_draw_generic_fraction[5] <= 1.0
    for result in report.results:
        assert result.counts_agree
        assert result.blowup.applicable
        assert result.blowup.holds
