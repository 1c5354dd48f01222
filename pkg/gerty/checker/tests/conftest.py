from pathlib import Path

import pytest

from gerty.checker import Checker, Environment
from gerty.grades.expressions import ONE, ZERO
from gerty.oracle.generators import build_state
from gerty.syntax.terms import Var, universe

ID_SOURCE = "id : (a : (.0, .2) Type 0) -> (x : (.1, .0) a) -> a\nid = \\a x -> x\n"

AX = [("a", universe(0)), ("x", Var("a"))]
AXY = AX + [("y", Var("a"))]


@pytest.fixture
def env():
    return Environment("nat")


@pytest.fixture
def checker(env):
    return Checker(env)


@pytest.fixture
def axy(checker):
    """a : Type 0, x : a, y : a, each type formed in the context before it."""
    state = build_state(checker, AXY)
    assert state.delta == ((), (ONE,), (ONE, ZERO))
    return state


@pytest.fixture
def ax(checker):
    """a : Type 0, x : a"""
    state = build_state(checker, AX)
    assert state.delta == ((), (ONE,))
    return state


@pytest.fixture(scope="session")
def fan3_source():
    return (Path(__file__).parents[2] / "tests" / "corpus" / "fan3.gerty").read_text(encoding="utf-8")
