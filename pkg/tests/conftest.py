import pytest

from app.fixtures.catalog import load_fixture
from app.infra.settings import get_settings
from app.schemas.parse import Parsed


@pytest.fixture(autouse=True)
def _fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def parsed():
    """``parsed("span")`` resolves a bundled fixture."""
    return lambda name: Parsed(load_fixture(name))


@pytest.fixture
def caps(monkeypatch):
    """Set RELMONAD_* caps for one test: ``caps(MAX_OBJECTS=2)``."""

    def apply(**values):
        for key, value in values.items():
            monkeypatch.setenv(f"RELMONAD_{key}", str(value))
        get_settings.cache_clear()
        return get_settings()

    return apply
