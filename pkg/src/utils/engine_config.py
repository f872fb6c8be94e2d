"""
引擎配置模块
支持环境变量、.env 文件与命名预设三种配置来源
"""

import os
from dataclasses import dataclass, replace
from typing import List, Optional, Tuple

from dotenv import load_dotenv
from sympy import isprime

from .errors import ConfigError


@dataclass(frozen=True)
class EngineConfig:
    """引擎配置类"""
    seed: int = 20240611
    primes: Tuple[int, ...] = (2, 3, 5)
    seeds_per_prime: int = 20
    point_budget: int = 2_000_000
    retry_cap: int = 500
    jacobian_trials: int = 100
    chunk_size: int = 4096
    property_cases: int = 1000
    tables_path: Optional[str] = None
    strict: bool = False
    log_level: str = "INFO"
    log_format: str = "console"  # console, json

    def with_overrides(self, **overrides) -> "EngineConfig":
        """返回应用了覆盖项的新配置（忽略值为 None 的项）"""
        values = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **values)


def _parse_primes(raw: str) -> Tuple[int, ...]:
    try:
        return tuple(int(part) for part in raw.replace(";", ",").split(",") if part.strip())
    except ValueError as e:
        raise ConfigError(f"Invalid CHOWKIT_PRIMES value: {raw!r}") from e


def get_engine_config_from_env() -> EngineConfig:
    """从环境变量获取引擎配置"""
    load_dotenv()
    defaults = EngineConfig()
    return EngineConfig(
        seed=int(os.getenv("CHOWKIT_SEED", str(defaults.seed))),
        primes=_parse_primes(os.getenv("CHOWKIT_PRIMES", "2,3,5")),
        seeds_per_prime=int(os.getenv("CHOWKIT_SEEDS_PER_PRIME", str(defaults.seeds_per_prime))),
        point_budget=int(os.getenv("CHOWKIT_POINT_BUDGET", str(defaults.point_budget))),
        retry_cap=int(os.getenv("CHOWKIT_RETRY_CAP", str(defaults.retry_cap))),
        jacobian_trials=int(os.getenv("CHOWKIT_JACOBIAN_TRIALS", str(defaults.jacobian_trials))),
        chunk_size=int(os.getenv("CHOWKIT_CHUNK_SIZE", str(defaults.chunk_size))),
        property_cases=int(os.getenv("CHOWKIT_PROPERTY_CASES", str(defaults.property_cases))),
        tables_path=os.getenv("CHOWKIT_TABLES") or None,
        strict=os.getenv("CHOWKIT_STRICT", "0").lower() in ("1", "true", "yes"),
        log_level=os.getenv("CHOWKIT_LOG_LEVEL", defaults.log_level),
        log_format=os.getenv("CHOWKIT_LOG_FORMAT", defaults.log_format),
    )


def validate_engine_config(config: EngineConfig) -> List[str]:
    """验证引擎配置

    Returns:
        List[str]: 问题列表，为空表示配置有效
    """
    problems = []

    if not config.primes:
        problems.append("At least one prime is required")
    for p in config.primes:
        if not isprime(p):
            problems.append(f"Not a prime: {p}")

    if config.seeds_per_prime <= 0:
        problems.append("seeds_per_prime should be positive")

    if config.point_budget <= 0:
        problems.append("point_budget should be positive")

    if config.retry_cap < 0:
        problems.append("retry_cap should be non-negative")

    if config.jacobian_trials <= 0:
        problems.append("jacobian_trials should be positive")

    if config.chunk_size <= 0:
        problems.append("chunk_size should be positive")

    if config.log_format not in ("console", "json"):
        problems.append(f"Unknown log format: {config.log_format}")

    return problems


# 预设配置
ENGINE_PROFILES = {
    "quick": EngineConfig(
        primes=(2, 3),
        seeds_per_prime=3,
        jacobian_trials=20,
        property_cases=50,
    ),
    "acceptance": EngineConfig(
        primes=(2, 3, 5),
        seeds_per_prime=20,
        jacobian_trials=100,
        property_cases=1000,
    ),
}


def get_profile(name: str) -> EngineConfig:
    """按名称获取预设配置"""
    if name not in ENGINE_PROFILES:
        raise ConfigError(f"Unknown engine profile: {name}")
    return ENGINE_PROFILES[name]
