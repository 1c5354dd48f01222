import pytest

from gerty.checker import Checker, Environment, check_declarations
from gerty.grades.semirings import NATURALS
from gerty.oracle.generators import TermGenerator, build_state
from gerty.syntax.pretty import pretty


def test_generation_is_seeded():
    first, second = TermGenerator(7).scenario(), TermGenerator(7).scenario()

    assert pretty(first.term) == pretty(second.term)
    assert first.names == second.names


def test_context_layout():
    context = TermGenerator(1).context(extra=0)

    assert [name for name, _ in context] == ["a", "b", "P", "xa", "xb", "c1", "c2"]


def test_extra_assumptions_get_fresh_names():
    names = [name for name, _ in TermGenerator(1).context(extra=3)]

    assert len(names) == len(set(names)) == 10


def test_grades_are_in_the_semiring():
    generator = TermGenerator(2, NATURALS)

    for _ in range(50):
        assert NATURALS.contains(generator.algebra.value(generator.grade()))


@pytest.mark.parametrize("seed", range(15))
def test_scenarios_are_well_typed(seed):
    env = Environment("nat")
    checker = Checker(env)
    problem = TermGenerator(seed).scenario()

    checker.check(build_state(checker, problem.context), problem.term, problem.type)
    env.solver.solve()


@pytest.mark.parametrize("seed", range(5))
def test_scenarios_are_well_typed_under_security(seed):
    env = Environment("security")
    checker = Checker(env)
    problem = TermGenerator(seed, "security").scenario()

    checker.check(build_state(checker, problem.context), problem.term, problem.type)
    env.solver.solve()


@pytest.mark.parametrize("seed", range(5))
def test_declarations_infer_their_binder_grades(seed):
    declaration = TermGenerator(seed).declaration(depth=2)

    report = check_declarations([declaration])

    assert report.ok, report.errors
