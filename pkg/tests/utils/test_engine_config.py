import pytest

from src.utils.engine_config import (
    EngineConfig,
    get_engine_config_from_env,
    get_profile,
    validate_engine_config,
)
from src.utils.errors import ConfigError


def test_defaults_are_valid():
    assert validate_engine_config(EngineConfig()) == []


def test_env_overrides(monkeypatch):
    monkeypatch.setenv("CHOWKIT_SEED", "11")
    monkeypatch.setenv("CHOWKIT_PRIMES", "3;5")
    monkeypatch.setenv("CHOWKIT_STRICT", "true")
    config = get_engine_config_from_env()
    assert config.seed == 11
    assert config.primes == (3, 5)
    assert config.strict


def test_bad_primes_env(monkeypatch):
    monkeypatch.setenv("CHOWKIT_PRIMES", "two")
    with pytest.raises(ConfigError):
        get_engine_config_from_env()


def test_validation_reports_problems():
    problems = validate_engine_config(EngineConfig(primes=(4,), chunk_size=0, log_format="xml"))
    assert "Not a prime: 4" in problems
    assert len(problems) == 3



def test_prime_validation_edges():
    assert validate_engine_config(EngineConfig(primes=(7919,))) == []
    problems = validate_engine_config(EngineConfig(primes=(1, 2, 7917)))
    assert problems == ["Not a prime: 1", "Not a prime: 7917"]


def test_profiles():
    assert get_profile("quick").seeds_per_prime < get_profile("acceptance").seeds_per_prime
    with pytest.raises(ConfigError):
        get_profile("nightly")


def test_with_overrides_ignores_none():
    config = EngineConfig().with_overrides(seed=None, retry_cap=3)
    assert config.seed == EngineConfig().seed
    assert config.retry_cap == 3
