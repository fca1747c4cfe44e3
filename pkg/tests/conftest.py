import pathlib

import pytest

from pragmaport import default_registry

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def registry():
    return default_registry()


@pytest.fixture(scope="session")
def nbody_source():
    return (FIXTURES / "listing_nbody.c").read_text()


@pytest.fixture(scope="session")
def diffusion_source():
    return (FIXTURES / "listing_diffusion.c").read_text()
