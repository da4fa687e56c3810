import pytest

from weighted_nim import grundy_table


@pytest.fixture(scope="session")
def table64():
    return grundy_table(64, 64)


@pytest.fixture(scope="session")
def table48():
    return grundy_table(48, 48)
