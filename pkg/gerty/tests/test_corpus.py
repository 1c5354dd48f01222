import pytest

from gerty.checker import check_declarations
from gerty.core.exceptions import GradeMismatch
from gerty.embeddings import translate_declaration
from gerty.solver.tests.conftest import smt_available
from gerty.syntax.parser import parse_file

from .conftest import ACCEPTED, CORPUS


def load(name):
    return parse_file((CORPUS / name).read_text(encoding="utf-8"), name)


@pytest.mark.parametrize("name", ACCEPTED)
@pytest.mark.parametrize("optimise", [False, True])
def test_corpus_programs_are_accepted(name, optimise):
    report = check_declarations(load(name), optimise=optimise)

    assert report.ok, report.errors


@pytest.mark.parametrize("optimise", [False, True])
def test_leak_is_rejected(optimise):
    report = check_declarations(load("leak.gerty"), optimise=optimise)

    assert [result.ok for result in report] == [True, False]
    assert isinstance(report["leak"].error, GradeMismatch)
    assert str(report["leak"].error) == (
        "At subject stage got the following mismatched grades:\n For 'x' expected Hi but got .1"
    )


def test_simple_needs_postulated_bases():
    assert not check_declarations(load("simple.gerty")).ok
    assert str(translate_declaration(load("simple.gerty"), "const", "stlc", bases=["A", "B"])) == (
        "λx:A. λy:B. x : A → B → A"
    )


@pytest.mark.smt
@pytest.mark.skipif(not smt_available(), reason="no SMT solver available")
@pytest.mark.parametrize("name", ACCEPTED + ["leak.gerty"])
def test_backends_agree(name):
    normal = check_declarations(load(name), backend="normal")
    smt = check_declarations(load(name), backend="smt")

    assert [result.ok for result in smt] == [result.ok for result in normal]
