import pytest

from osglines import build_table


@pytest.fixture(scope="session")
def table3():
    return build_table(3)


@pytest.fixture(scope="session")
def table4():
    return build_table(4)


@pytest.fixture(scope="session")
def table5():
    return build_table(5)


@pytest.fixture(scope="session")
def table6():
    return build_table(6)
