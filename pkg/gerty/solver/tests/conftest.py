import shutil

import pytest

from gerty.conf import settings
from gerty.grades.semirings import NATURALS, SECURITY
from gerty.solver.smt import SmtSolver
from gerty.solver.syntactic import SyntacticSolver


def smt_available():
    if settings.SMT_SOLVER and shutil.which(settings.SMT_SOLVER):
        return True
    try:
        import z3  # noqa
    except ImportError:
        return False
    return True


@pytest.fixture
def syntactic():
    return SyntacticSolver(NATURALS)


@pytest.fixture
def syntactic_security():
    return SyntacticSolver(SECURITY)


@pytest.fixture
def smt():
    if not smt_available():
        pytest.skip("no SMT solver available")
    return SmtSolver(NATURALS)


@pytest.fixture
def smt_security():
    if not smt_available():
        pytest.skip("no SMT solver available")
    return SmtSolver(SECURITY)
