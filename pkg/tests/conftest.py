import pytest

from eulerstrip import character, generate_primes


@pytest.fixture(scope="session")
def table_1e4():
    return generate_primes(10_000)


@pytest.fixture(scope="session")
def table_1e5():
    return generate_primes(100_000)


@pytest.fixture(scope="session")
def trivial():
    return character(1, 1)


@pytest.fixture(scope="session")
def chi72():
    return character(7, 2)
