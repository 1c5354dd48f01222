# This file is a part of Gerty.
#
# Copyright (C) 2021 The Gerty developers
#
# Gerty is free software; you can redistribute it and/or modify it
# under the terms of the GNU Lesser General Public License as published by
# the Free Software Foundation, either version 3 of the License, or (at
# your option) any later version.
#
# Gerty is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or
# FITNESS FOR A PARTICULAR PURPOSE. See the GNU Lesser General Public
# License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from gerty.core.exceptions import GradeMismatch
from gerty.grades.expressions import GradeExpr
from gerty.syntax.pretty import pretty_grade
from gerty.syntax.terms import SourceSpan

SUBJECT = "subject"
SUBJECT_TYPE = "subject-type"


@dataclass(frozen=True)
class Provenance:
    """Where a grade obligation comes from: the rule that emitted it and the variable whose grade it concerns."""

    span: Optional[SourceSpan] = None
    rule: str = ""
    variable: str = ""
    stage: str = SUBJECT


@dataclass(frozen=True)
class Constraint:
    """left = right, where left is the grade the program states and right the grade the checker computed."""

    left: GradeExpr
    right: GradeExpr
    provenance: Provenance = field(default_factory=Provenance)

    def __str__(self):
        return f"{self.left} = {self.right}"


@dataclass
class Solution:
    assignment: Dict[int, Any] = field(default_factory=dict)
    residual: List[Constraint] = field(default_factory=list)

    def __bool__(self):
        return not self.residual


def mismatch(constraint, algebra):
    """
    Build the diagnostic for a failed constraint: the stated grade as written, the computed grade as a value.
    """
    provenance = constraint.provenance
    return GradeMismatch(
        provenance.stage,
        provenance.variable or provenance.rule,
        pretty_grade(constraint.left),
        algebra.render(constraint.right),
        constraint=constraint,
        span=provenance.span,
    )
