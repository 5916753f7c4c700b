import pytest

from nearvec import FiniteField, all_subgroups, quotient_group


@pytest.fixture(scope="session")
def g1():
    return quotient_group(3, 3)


@pytest.fixture(scope="session")
def g2():
    return quotient_group(5, 2)


@pytest.fixture(scope="session")
def lat1(g1):
    return all_subgroups(g1)


@pytest.fixture(scope="session")
def lat2(g2):
    return all_subgroups(g2)


@pytest.fixture(scope="session")
def f27():
    return FiniteField(3, 3)
