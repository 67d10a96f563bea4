import pytest

import steinerforge as sf


@pytest.fixture(scope="session")
def f4():
    return sf.GF2m(4)


@pytest.fixture(scope="session")
def f5():
    return sf.GF2m(5)


@pytest.fixture(scope="session")
def f6():
    return sf.GF2m(6)


@pytest.fixture(scope="session")
def code6(f6):
    return sf.build_cyclic(f6, [2])


@pytest.fixture(scope="session")
def ext6(f6, code6):
    return sf.extend(code6)


@pytest.fixture(scope="session")
def dual_ext6(ext6):
    return sf.dual(ext6)
