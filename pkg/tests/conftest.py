"""Shared fixtures: ground fields and frequently used catalog entries."""

import pytest

from jalg import Field, QQ, catalog

F5 = Field(5)


@pytest.fixture(scope="session")
def f5():
    return F5


@pytest.fixture(scope="session")
def qq():
    return QQ


@pytest.fixture(scope="session")
def j5():
    return catalog("J5")


@pytest.fixture(scope="session")
def j17():
    return catalog("J17")


@pytest.fixture(scope="session")
def defmap_pair():
    return catalog("defmap-pair")


@pytest.fixture(scope="session")
def defmap_pair_f5():
    return catalog("defmap-pair", field=F5)
