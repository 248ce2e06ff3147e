import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

import spectralcurves.diffop as _diffop  # noqa: E402
from spectralcurves import build_curve_model, load_example, verify_basis  # noqa: E402

_diffop.CHECK_DIVISION = True

settings.register_profile(
    "exact", deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def ops():
    return load_example()


@pytest.fixture(scope="session")
def basis(ops):
    return verify_basis(*ops)


@pytest.fixture(scope="session")
def model(basis):
    return build_curve_model(basis)
