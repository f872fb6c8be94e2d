import pytest
import structlog

from src.chowcore import ChowPresentation
from src.tower import preset


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: randomized property suites with many cases")


@pytest.fixture(autouse=True)
def _reset_structlog():
    """CLI tests call configure_logging(), binding structlog to pytest's per-test
    captured stderr; restore defaults so later tests don't log to a closed stream."""
    yield
    structlog.reset_defaults()


@pytest.fixture(scope="session")
def p2():
    return ChowPresentation.for_base((2,))


@pytest.fixture(scope="session")
def p2xp2():
    return ChowPresentation.for_base((2, 2))


@pytest.fixture(scope="session")
def pf_dual_pres():
    """P_X(F^dual) 的表示：ξ² = (2h1 + 2h2)ξ - 4h1h2"""
    return ChowPresentation.for_tower((2, 2), [((-2, 0), (0, -2))])


@pytest.fixture(scope="session")
def space_y():
    return preset("Y")


@pytest.fixture(scope="session")
def space_s():
    return preset("S")
