import pytest


@pytest.fixture(scope="session")
def id_source():
    return (
        "-- The polymorphic identity.\n"
        "id : (a : (.0, .2) Type 0) -> (x : (.1, .0) a) -> a\n"
        "id = \\a x -> x\n"
    )


@pytest.fixture(scope="session")
def two_item_source():
    return (
        "%semiring security\n"
        "\n"
        "idLo : (a : (.0, .2) Type 0)\n"
        "    -> (x : (Lo, Hi) a)\n"
        "    -> a\n"
        "idLo = \\a x -> x\n"
        "\n"
        "const : (a : (.0, .2) Type 0) -> (x : (Lo, Hi) a) -> (y : (Hi, Hi) a) -> a\n"
        "const = \\a x y -> x\n"
    )
