from .engine_config import (
    ENGINE_PROFILES,
    EngineConfig,
    get_engine_config_from_env,
    get_profile,
    validate_engine_config,
)
from .logging_config import configure_logging, get_logger

__all__ = [
    "EngineConfig",
    "ENGINE_PROFILES",
    "get_engine_config_from_env",
    "get_profile",
    "validate_engine_config",
    "configure_logging",
    "get_logger",
]
