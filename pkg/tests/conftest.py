import pytest

from qgroups.verify import algebra


@pytest.fixture(scope="session")
def a1():
    return algebra("A1")


@pytest.fixture(scope="session")
def a2():
    return algebra("A2")


@pytest.fixture(scope="session")
def b2():
    return algebra("B2")


@pytest.fixture(scope="session")
def a3():
    return algebra("A3")
