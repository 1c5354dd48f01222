import pytest

from gerty.syntax.parser import parse_file

ID_SOURCE = "id : (a : (.0, .2) Type 0) -> (x : (.1, .0) a) -> a\nid = \\a x -> x\n"

CONST_SOURCE = """\
const : (x : (.1, .0) A) -> (y : (.0, .0) B) -> A
const = \\x y -> x

apply : (f : (.1, .0) ((x : (.1, .0) A) -> B)) -> (x : (.1, .0) A) -> B
apply = \\f x -> f x
"""


@pytest.fixture
def id_source():
    return parse_file(ID_SOURCE, "id.gerty")


@pytest.fixture
def const_source():
    return parse_file(CONST_SOURCE, "const.gerty")
