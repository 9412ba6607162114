import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from fs_lab.config import get_settings

# serial_settings is function-scoped and autouse, so every @given test sees it
settings.register_profile("fs_lab", deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile("fs_lab")


@pytest.fixture(autouse=True)
def serial_settings(monkeypatch):
    """Run sweeps in-process; tests must not depend on the host's .env."""
    monkeypatch.setenv("FS_LAB_THREADS", "1")
    monkeypatch.setenv("FS_LAB_ORDER", "16")
    monkeypatch.delenv("FS_LAB_LOG_LEVEL", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
