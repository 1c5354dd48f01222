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

from gerty.conf import settings
from gerty.core.klass import lookup_registered
from gerty.grades.expressions import ZERO, GradeAlgebra, metavars
from gerty.solver.constraints import Constraint, Provenance, Solution

logger = settings.logger


class GradeSolver:
    """
    Base class for grade equality backends.

    One solver serves one declaration: the checker feeds it obligations through `equate` and calls `solve` once the
    declaration has been traversed. Solved metavariables are written to the shared GradeAlgebra so that later grade
    arithmetic can fold them.
    """

    name = None

    def __init__(self, semiring, algebra=None):
        self.semiring = semiring
        self.algebra = algebra if algebra is not None else GradeAlgebra(semiring)
        self.constraints = []

    def equate(self, expected, actual, provenance=None):
        """
        Record the obligation expected = actual.

        :return: False only when the obligation is known to fail and the backend does not raise for it.
        :raises GradeMismatch: for failures the backend decides eagerly.
        """
        raise NotImplementedError

    def solve(self, metavariables=()):
        """
        Discharge every recorded obligation.

        :param metavariables: Metavariables that must end up with a value. Those no obligation mentions default to 0.
        :return: The Solution. Its assignment is also merged into the algebra.
        :raises Unsatisfiable: when the obligations have no solution.
        """
        raise NotImplementedError

    def is_zero(self, expr):
        """True when expr is known to be 0. Used to decide whether a substitution may be elided."""
        return self.algebra.is_zero(expr)

    def constraint(self, expected, actual, provenance=None):
        # The stated side is kept as written so that diagnostics can quote it.
        return Constraint(expected, self.algebra.normalize(actual), provenance or Provenance())

    def default_unconstrained(self, metavariables):
        mentioned = set()
        for c in self.constraints:
            mentioned |= metavars(c.left) | metavars(c.right)
        defaulted = 0
        for m in metavariables:
            if m not in self.algebra.assignment and m not in mentioned:
                self.algebra.assignment[m] = self.semiring.zero
                defaulted += 1
        if defaulted:
            logger.debug(f"Defaulted {defaulted} unconstrained grade variable(s) to {ZERO}.")


def get_solver_class(name=None):
    """
    Look up an equality backend in settings.EQUALITY_BACKENDS.

    :param name: Backend name, defaults to settings.DEFAULT_EQUALITY.
    """
    if name is None:
        name = settings.DEFAULT_EQUALITY
    return lookup_registered(settings.EQUALITY_BACKENDS, name, "equality backend")


def make_solver(name, semiring, algebra=None):
    return get_solver_class(name)(semiring, algebra)


__all__ = ["GradeSolver", "Solution", "get_solver_class", "make_solver"]
