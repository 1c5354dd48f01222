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

"""
Judgments (Δ | σ1 | σ2) ⊙ Γ ⊢ t : A and the derivation trees built from them.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from gerty.grades.vectors import CtxGradeVec, GradeVec
from gerty.syntax.terms import Term

TYPING = "typing"
SUBTYPING = "subtyping"
EQUALITY = "equality"
WF = "wf"

Context = Tuple[Tuple[str, Term], ...]


@dataclass(frozen=True)
class Judgment:
    delta: CtxGradeVec
    subject_grades: GradeVec
    type_grades: GradeVec
    context: Context
    subject: Optional[Term]
    type: Optional[Term]
    form: str = TYPING

    @property
    def size(self):
        return len(self.context)

    def sized(self):
        """|Δ| = |σ1| = |σ2| = |Γ|, and Δ[i] has length i."""
        n = len(self.context)
        if len(self.delta) != n or any(len(v) != i for i, v in enumerate(self.delta)):
            return False
        if self.form == WF:
            return True
        return len(self.subject_grades) == n and (self.form == SUBTYPING or len(self.type_grades) == n)


def wf_judgment(delta, context):
    return Judgment(tuple(delta), (), (), tuple(context), None, None, WF)


@dataclass
class Derivation:
    rule: str
    conclusion: Judgment
    premises: List["Derivation"] = field(default_factory=list)

    def walk(self):
        """Pre-order traversal of the tree."""
        yield self
        for premise in self.premises:
            yield from premise.walk()

    def rules(self):
        return {node.rule for node in self.walk()}

    def __len__(self):
        return sum(1 for _ in self.walk())
