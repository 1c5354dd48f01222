import pytest

from gerty.checker import Checker
from gerty.core.exceptions import PreconditionViolated
from gerty.oracle.generators import build_state
from gerty.oracle.metatheory import (
    Outcome,
    assumption_check,
    contraction_check,
    exchange_check,
    preservation_check,
    structural_checks,
    subst_lemma_check,
    termination_check,
    weakening_check,
)
from gerty.syntax.parser import parse_term
from gerty.syntax.terms import Var

from .conftest import AX, AXY


def test_weakening(recording_env, x_in_axy):
    derivation, algebra = x_in_axy

    outcome = weakening_check(recording_env, derivation.conclusion, 1, "w", Var("a"), algebra)

    assert outcome, str(outcome)
    assert outcome.got == ((0, 0, 1, 0), (1, 0, 0, 0))


def test_weakening_needs_a_fresh_name(recording_env, x_in_axy):
    derivation, algebra = x_in_axy

    with pytest.raises(PreconditionViolated):
        weakening_check(recording_env, derivation.conclusion, 1, "y", Var("a"), algebra)


def test_contraction(recording_env, x_in_axy):
    derivation, algebra = x_in_axy

    outcome = contraction_check(recording_env, derivation.conclusion, 1, algebra)

    assert outcome, str(outcome)
    assert outcome.got == ((0, 1), (1, 0))


def test_contraction_needs_equal_types(recording_env, x_in_axy):
    derivation, algebra = x_in_axy

    with pytest.raises(PreconditionViolated):
        contraction_check(recording_env, derivation.conclusion, 0, algebra)


def test_exchange(recording_env, x_in_axy):
    derivation, algebra = x_in_axy

    outcome = exchange_check(recording_env, derivation.conclusion, 1, algebra)

    assert outcome, str(outcome)
    assert outcome.got == ((0, 0, 1), (1, 0, 0))


def test_exchange_of_dependent_assumptions_is_refused(recording_env, x_in_axy):
    derivation, algebra = x_in_axy

    with pytest.raises(PreconditionViolated):
        exchange_check(recording_env, derivation.conclusion, 0, algebra)


def test_structural_checks(recording_env, x_in_axy):
    derivation, algebra = x_in_axy

    report = structural_checks(recording_env, derivation, algebra)

    assert report, "; ".join(map(str, report.outcomes))
    assert len(report.outcomes) == 3
    assert report.notes == []


def test_substitution_lemma(recording_env):
    checker = Checker(recording_env)
    d1 = checker.check(build_state(checker, AX), Var("x"), Var("a")).derivation
    d2 = checker.check(build_state(checker, AXY), Var("y"), Var("a")).derivation
    recording_env.solver.solve()

    outcome = subst_lemma_check(recording_env, d1, d2, recording_env.algebra)

    assert outcome, str(outcome)
    assert outcome.got == ((0, 1), (1, 0))


def test_substitution_lemma_needs_an_extended_context(recording_env, x_in_axy):
    derivation, algebra = x_in_axy

    with pytest.raises(PreconditionViolated):
        subst_lemma_check(recording_env, derivation, derivation, algebra)


def test_preservation_of_a_variable_passes_without_a_step(recording_env, x_in_axy):
    derivation, algebra = x_in_axy

    outcome = preservation_check(recording_env, derivation, algebra)

    assert outcome
    assert outcome.message == "no step"


def test_preservation_of_a_redex(recording_env):
    checker = Checker(recording_env)
    derivation = checker.check(build_state(checker, AX), parse_term("(\\w -> w) x"), Var("a")).derivation
    recording_env.solver.solve()

    outcome = preservation_check(recording_env, derivation, recording_env.algebra)

    assert outcome, str(outcome)
    assert outcome.got == ((0, 1), (1, 0))


def test_assumptions_are_types(recording_env, x_in_axy):
    derivation, algebra = x_in_axy

    outcome = assumption_check(recording_env, derivation, 2, algebra)

    assert outcome, str(outcome)
    assert outcome.got == (1, 0)


def test_termination():
    assert termination_check(parse_term("(\\x -> x) y"))
    assert not termination_check(parse_term("(\\x -> x x) (\\x -> x x)"), fuel=100)


def test_outcome_str():
    assert str(Outcome("exchange", True)) == "exchange: ok"
    assert str(Outcome("exchange", False, ((1,), (0,)), ((0,), (0,)))) == (
        "exchange: expected ((1,), (0,)), got ((0,), (0,))"
    )
    assert str(Outcome("termination", False, message="diverges")) == "termination: diverges"
