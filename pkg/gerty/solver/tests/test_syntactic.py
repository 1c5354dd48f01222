import pytest

from gerty.core.exceptions import GradeMismatch, ImproperlyConfigured
from gerty.grades.expressions import ONE, ZERO, Add, Lit, fresh_metavar, numeral
from gerty.solver.base import get_solver_class, make_solver
from gerty.solver.constraints import SUBJECT_TYPE, Constraint, Provenance, mismatch
from gerty.solver.smt import SmtSolver
from gerty.solver.syntactic import SyntacticSolver
from gerty.grades.semirings import NATURALS


def test_get_solver_class():
    assert get_solver_class() is SyntacticSolver
    assert get_solver_class("smt") is SmtSolver


def test_get_solver_class_raises_exception_for_unknown_backends():
    with pytest.raises(ImproperlyConfigured):
        get_solver_class("oracle")


def test_make_solver_shares_the_algebra():
    solver = make_solver("normal", NATURALS)

    assert solver.algebra.semiring is NATURALS


class TestSyntacticSolver:
    def test_closed_obligations_are_decided_immediately(self, syntactic):
        assert syntactic.equate(numeral(2), Add(ONE, ONE))
        assert syntactic.constraints == []

    def test_violated_obligation_raises_grade_mismatch(self, syntactic):
        provenance = Provenance(rule="var", variable="x")

        with pytest.raises(GradeMismatch) as e:
            syntactic.equate(ZERO, ONE, provenance)

        assert str(e.value) == "At subject stage got the following mismatched grades:\n For 'x' expected .0 but got .1"

    def test_lone_metavariable_is_bound(self, syntactic):
        m = fresh_metavar()

        syntactic.equate(m, numeral(3))

        assert syntactic.algebra.assignment[m.id] == 3
        assert syntactic.algebra.is_zero(m) is False

    def test_solve_propagates_bindings(self, syntactic):
        m, n = fresh_metavar(), fresh_metavar()
        syntactic.equate(Add(m, ONE), n)
        syntactic.equate(m, ONE)

        solution = syntactic.solve()

        assert solution
        assert solution.assignment[n.id] == 2

    def test_solve_fails_on_what_it_cannot_decide(self, syntactic):
        m, n = fresh_metavar(), fresh_metavar()
        syntactic.equate(numeral(2), Add(m, n))

        with pytest.raises(GradeMismatch):
            syntactic.solve()

    def test_unconstrained_metavariables_default_to_zero(self, syntactic):
        m = fresh_metavar()

        syntactic.solve([m.id])

        assert syntactic.algebra.assignment[m.id] == 0

    def test_security_grades(self, syntactic_security):
        m = fresh_metavar()
        syntactic_security.equate(m, Add(Lit("Hi"), ONE))

        assert syntactic_security.algebra.assignment[m.id] == "Lo"


def test_mismatch_quotes_the_stated_grade_and_evaluates_the_computed_one(syntactic_security):
    constraint = Constraint(Lit("Hi"), Add(ONE, ONE), Provenance(variable="x", stage=SUBJECT_TYPE))

    e = mismatch(constraint, syntactic_security.algebra)

    assert str(e) == "At subject-type stage got the following mismatched grades:\n For 'x' expected Hi but got .1"
    assert e.constraint is constraint
