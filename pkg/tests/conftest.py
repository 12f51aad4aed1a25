import pytest
from hypothesis import settings

from hilbq.base import preset


settings.register_profile("hilbq", max_examples=50, deadline=None)
settings.load_profile("hilbq")


def pytest_configure(config):
    config.addinivalue_line("markers",
        "slow: brute-force trace comparisons at higher orders")


@pytest.fixture
def minimal():
    return preset("minimal")


@pytest.fixture
def two_class():
    return preset("two-class")


@pytest.fixture
def kpos():
    return preset("kpos")


@pytest.fixture
def kmixed():
    return preset("kmixed")


@pytest.fixture(params=["minimal", "two-class", "kmixed"])
def model(request):
    return preset(request.param)
