import pytest

from gerty.checker import Environment, check_declarations, validate_context
from gerty.core.exceptions import DuplicateVariable, ForeignLiteral, GradeMismatch, TypeCheckError, TypeMismatch
from gerty.grades.expressions import ONE, ZERO
from gerty.grades.semirings import SECURITY
from gerty.syntax.parser import parse_file
from gerty.syntax.terms import Lam, Var, universe

from .conftest import ID_SOURCE

IDLO = "idLo : (a : (.0, .2) Type 0) -> (x : (Lo, Hi) a) -> a\nidLo = \\a -> \\x -> x\n"
LEAK = "leak : (a : (.0, .2) Type 0) -> (x : (Hi, Hi) a) -> a\nleak = \\a -> \\x -> idLo a x\n"


class TestCheckDeclarations:
    def test_accepted_declarations_become_globals(self):
        report = check_declarations(parse_file(ID_SOURCE))

        assert report.ok
        assert report["id"].ok
        assert "id" in report.environment.globals
        assert report.environment.definitions["id"] == Lam("a", Lam("x", Var("x")))

    def test_later_declarations_use_earlier_ones(self):
        source = ID_SOURCE + "id2 : (a : (.0, .2) Type 0) -> (x : (.1, .0) a) -> a\nid2 = \\a x -> id a x\n"

        report = check_declarations(parse_file(source))

        assert report.ok
        assert len(report) == 2

    def test_leak_is_rejected_under_security(self):
        report = check_declarations(parse_file("%semiring security\n" + IDLO + LEAK))

        assert report["idLo"].ok
        error = report["leak"].error
        assert isinstance(error, GradeMismatch)
        assert str(error) == "At subject stage got the following mismatched grades:\n For 'x' expected Hi but got .1"
        assert report.errors == [error]

    def test_rejected_declarations_are_not_added_to_the_globals(self):
        report = check_declarations(parse_file("%semiring security\n" + IDLO + LEAK))

        assert "leak" not in report.environment.globals
        assert not report.ok

    def test_pragma_takes_precedence_over_the_semiring_argument(self):
        report = check_declarations(parse_file("%semiring security\n" + IDLO), semiring="nat")

        assert report.environment.semiring is SECURITY

    def test_foreign_literals_are_reported(self):
        report = check_declarations(parse_file(IDLO), semiring="nat")

        assert isinstance(report["idLo"].error, ForeignLiteral)

    def test_recording_keeps_the_derivations(self):
        report = check_declarations(parse_file(ID_SOURCE), record=True)

        result = report["id"]
        assert result.derivation.rule == "T-Fun"
        assert result.derivation.conclusion.subject == Lam("a", Lam("x", Var("x")))
        assert result.formation.rule == "T-Arrow"
        assert "T-Var" in result.derivation.rules()

    def test_continuing_in_an_existing_environment(self):
        env = Environment("nat")
        check_declarations(parse_file(ID_SOURCE), env=env)

        report = check_declarations(parse_file("k : (a : (.0, .2) Type 1) -> a -> a\nk = \\a -> id a\n"), env=env)

        assert report.environment is env
        assert not report.ok
        assert isinstance(report["k"].error, TypeMismatch)

    def test_elision_skips_substitutions_into_zero_graded_codomains(self, fan3_source):
        optimised = check_declarations(parse_file(fan3_source), optimise=True)
        plain = check_declarations(parse_file(fan3_source), optimise=False)

        assert optimised.ok and plain.ok
        assert optimised.environment.metrics.elisions > 0
        assert plain.environment.metrics.elisions == 0
        assert plain.environment.metrics.substitutions > optimised.environment.metrics.substitutions


class TestEnvironment:
    def test_assume_postulates_a_type(self):
        env = Environment("nat")

        env.assume("A", universe(0))

        assert env.globals["A"].body is None
        assert "A" not in env.definitions

    def test_assume_rejects_ill_formed_types(self):
        with pytest.raises(TypeCheckError):
            Environment("nat").assume("bad", Lam("x", Var("x")))

    def test_define_twice_raises_exception(self):
        env = Environment("nat")
        env.define("A", universe(0))

        with pytest.raises(DuplicateVariable):
            env.define("A", universe(0))

    def test_begin_starts_a_fresh_solver(self):
        env = Environment("nat")
        solver = env.solver

        env.begin()

        assert env.solver is not solver
        assert env.solver.algebra is env.algebra


class TestValidateContext:
    def test_well_formed_context(self, env):
        assert validate_context(env, ("a", "x"), (universe(0), Var("a")), ((), (ONE,))) is None

    def test_wrong_grading_is_located(self, env):
        assert validate_context(env, ("a", "x"), (universe(0), Var("a")), ((), (ZERO,))) == 1

    def test_ill_formed_type_is_located(self, env):
        assert validate_context(env, ("a", "x", "y"), (universe(0), Var("a"), Var("x")), ((), (ONE,), (ZERO, ONE))) == 2

    def test_lengths_must_agree(self, env):
        assert validate_context(env, ("a",), (), ((),)) == 0
