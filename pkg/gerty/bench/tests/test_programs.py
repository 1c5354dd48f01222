from pathlib import Path

import pytest

from gerty.bench import fanout_source, gen_fanout
from gerty.checker import check_declarations

CORPUS = Path(__file__).parents[2] / "tests" / "corpus"


def test_fan3_matches_the_corpus():
    expected = (CORPUS / "fan3.gerty").read_text(encoding="utf-8")

    assert fanout_source(3).split() == expected.split()


def test_gen_fanout_declares_app_then_fan():
    assert [declaration.name for declaration in gen_fanout(4)] == ["app4", "fan4"]


@pytest.mark.parametrize("arity", [0, -1])
def test_arity_must_be_positive(arity):
    with pytest.raises(ValueError):
        fanout_source(arity)


@pytest.mark.parametrize("arity", range(1, 9))
@pytest.mark.parametrize("optimise", [False, True])
def test_fanout_programs_check(arity, optimise):
    report = check_declarations(gen_fanout(arity), optimise=optimise)

    assert report.ok, report.errors
