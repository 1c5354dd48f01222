import pytest

from gerty.checker import Checker, Environment
from gerty.oracle.generators import build_state
from gerty.syntax.terms import Var, universe

AXY = [("a", universe(0)), ("x", Var("a")), ("y", Var("a"))]
AX = AXY[:2]


@pytest.fixture
def recording_env():
    return Environment("nat", record=True)


@pytest.fixture
def x_in_axy(recording_env):
    """The derivation of a : Type 0, x : a, y : a ⊢ x : a, and the algebra it was checked in."""
    checker = Checker(recording_env)
    state = build_state(checker, AXY)
    result = checker.check(state, Var("x"), Var("a"))
    recording_env.solver.solve()
    return result.derivation, recording_env.algebra
