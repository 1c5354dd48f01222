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

from gerty.core.exceptions import FuelExhausted, TypeCheckError
from gerty.grades.expressions import GradeAlgebra
from gerty.solver.syntactic import SyntacticSolver

from .rules import Checker
from .state import CheckerState


def validate_context(env, names, types, delta):
    """
    Replay the well-formedness of a context: every type must be formed, in the context before it, with exactly
    the grades its Δ entry records.

    :return: The position of the first entry that fails, or None if the context is well formed.
    """
    if not (len(names) == len(types) == len(delta)):
        return 0
    saved = env.algebra, env.solver
    env.algebra = GradeAlgebra(env.semiring)
    env.solver = SyntacticSolver(env.semiring, env.algebra)
    try:
        checker = Checker(env)
        state = CheckerState()
        for i, (name, type_, grades) in enumerate(zip(names, types, delta)):
            if len(grades) != i:
                return i
            try:
                formed = checker.form(state, type_)
            except (TypeCheckError, FuelExhausted):
                return i
            if any(env.algebra.equal(g, f) is not True for g, f in zip(grades, formed.grades)):
                return i
            state = state.extend(name, type_, grades)
        return None
    finally:
        env.algebra, env.solver = saved
