import pytest

from carlitz_hw import Modulus, make_field, parse_poly


@pytest.fixture(scope="session")
def f2():
    return make_field(2)


@pytest.fixture(scope="session")
def f3():
    return make_field(3)


@pytest.fixture(scope="session")
def f5():
    return make_field(5)


@pytest.fixture(scope="session")
def f4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def m_headline(f3):
    return Modulus(parse_poly("T^3+2T+1", f3))
