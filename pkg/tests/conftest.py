import pytest

from quartic_families.derivation import derive_method, integer_family, load_paper_reference


@pytest.fixture(scope="session")
def rational_families():
    return {n: derive_method(n) for n in (1, 2, 3)}


@pytest.fixture(scope="session")
def paper_families():
    return {n: integer_family(n, "paper") for n in (1, 2, 3)}


@pytest.fixture(scope="session")
def minimal_families():
    return {n: integer_family(n, "minimal") for n in (1, 2, 3)}


@pytest.fixture(scope="session")
def paper_reference():
    return load_paper_reference()
