import pytest

from rswb import Field, rs_new
from rswb.cantor import cantor_init


@pytest.fixture(scope="session")
def gf8():
    return Field(3)


@pytest.fixture(scope="session")
def gf16():
    return Field(4)


@pytest.fixture(scope="session")
def gf256():
    return Field(8)


@pytest.fixture(scope="session")
def gf512():
    return Field(9)


@pytest.fixture(scope="session")
def ctx256(gf256):
    return cantor_init(gf256)


@pytest.fixture(scope="session")
def rs73(gf8):
    return rs_new(gf8, 7, 3, "cyclic")


@pytest.fixture(scope="session")
def rs255(gf256):
    return rs_new(gf256, 255, 223, "cyclic")
