import pytest

from toroidal_ff import FunctionField


@pytest.fixture(scope="session")
def p1_f2():
    return FunctionField.rational(2)


@pytest.fixture(scope="session")
def p1_f3():
    return FunctionField.rational(3)


@pytest.fixture(scope="session")
def ell_f2():
    return FunctionField.hyperelliptic(2, 1, [0, 0, 0, 1], [1])


@pytest.fixture(scope="session")
def ell_f3():
    return FunctionField.hyperelliptic(3, 1, [0, 2, 0, 1])


@pytest.fixture(scope="session")
def ell_f4():
    return FunctionField.hyperelliptic(2, 2, [0, 0, 0, 1], [1])


@pytest.fixture(scope="session")
def g2_f3():
    return FunctionField.hyperelliptic(3, 1, [1, 0, 0, 0, 0, 1])


@pytest.fixture(scope="session")
def g2_f2():
    return FunctionField.hyperelliptic(2, 1, [0, 0, 0, 1, 0, 1], [1])


@pytest.fixture(scope="session")
def all_fields(p1_f2, p1_f3, ell_f2, ell_f3, ell_f4, g2_f3):
    return [p1_f2, p1_f3, ell_f2, ell_f3, ell_f4, g2_f3]
