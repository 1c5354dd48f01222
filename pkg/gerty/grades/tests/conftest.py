import pytest

from gerty.grades.expressions import GradeAlgebra
from gerty.grades.semirings import NATURALS, SECURITY


@pytest.fixture
def nat():
    return GradeAlgebra(NATURALS)


@pytest.fixture
def security():
    return GradeAlgebra(SECURITY)
