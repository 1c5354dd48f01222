import pytest

from gerty.syntax.parser import parse_term


@pytest.fixture(scope="session")
def omega():
    return parse_term("(\\x -> x x) (\\x -> x x)")


@pytest.fixture(scope="session")
def identity():
    return parse_term("\\x -> x")
