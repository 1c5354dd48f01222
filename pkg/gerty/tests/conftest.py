from pathlib import Path

import pytest

CORPUS = Path(__file__).parent / "corpus"
ACCEPTED = ["id.gerty", "fst.gerty", "idlo.gerty", "comonad.gerty", "fan3.gerty"]


@pytest.fixture
def corpus():
    def path(name):
        return str(CORPUS / name)

    return path
