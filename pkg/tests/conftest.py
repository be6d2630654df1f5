import pytest
from hypothesis import HealthCheck, settings

from affmv.paths import generate_crystal

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SMALL = (0, 1, 4)  # alpha0 = alpha1 = 2
LEVEL3 = (0, 0, 3)  # 3d
WIDE = (0, 8, 32)  # alpha0 = alpha1 = 16


@pytest.fixture(scope="session")
def small_crystal():
    return generate_crystal(SMALL, 6)


@pytest.fixture(scope="session")
def wide_crystal():
    return generate_crystal(WIDE, 6)


@pytest.fixture(scope="session")
def level3_crystal():
    return generate_crystal(LEVEL3, 7)
