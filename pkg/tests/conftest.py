"""Shared pytest fixtures."""

import json

import pytest

from skewcat.core.fincat import chain_category, cyclic_group_category
from skewcat.modules.fixtures import hom_bundle, reflection_moncat, right_projection_moncat, strict_cyclic_moncat
from skewcat.utils.config import BoundsConfig


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size harness runs (deselect with -m \"not slow\")")


@pytest.fixture
def ch2():
    return chain_category(2)


@pytest.fixture
def ch3():
    return chain_category(3)


@pytest.fixture
def z2():
    return cyclic_group_category(2)


@pytest.fixture
def z2_strict():
    return strict_cyclic_moncat(2)


@pytest.fixture
def skew_ch3():
    return right_projection_moncat(3)


@pytest.fixture
def reflect():
    return reflection_moncat()


@pytest.fixture
def bounds():
    return BoundsConfig()


@pytest.fixture(scope="session")
def hom_ch2():
    return hom_bundle(2)


@pytest.fixture(scope="session")
def hom_ch3():
    return hom_bundle(3)


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON document under tmp_path and return its path as a string."""
    def write(name, doc):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)
    return write
