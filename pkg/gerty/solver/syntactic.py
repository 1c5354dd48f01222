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
from gerty.grades.expressions import MetaVar
from gerty.solver.base import GradeSolver
from gerty.solver.constraints import Solution, mismatch

logger = settings.logger


class SyntacticSolver(GradeSolver):
    """
    Decide grade equalities by evaluating both sides and comparing.

    Closed obligations are decided on the spot. An obligation whose one side is a lone metavariable and whose other
    side is closed binds the metavariable. Everything else waits for `solve`, which repeats these two steps until
    nothing changes and fails on what is left.
    """

    name = "normal"

    def equate(self, expected, actual, provenance=None):
        c = self.constraint(expected, actual, provenance)
        outcome = self._decide(c)
        if outcome is False:
            raise mismatch(c, self.algebra)
        if outcome is None:
            self.constraints.append(c)
        return True

    def _decide(self, c):
        """
        :return: True (discharged), False (violated) or None (still open).
        """
        algebra = self.algebra
        equal = algebra.equal(c.left, c.right)
        if equal is not None:
            return equal
        for var, other in ((c.left, c.right), (c.right, c.left)):
            if isinstance(var, MetaVar) and var.id not in algebra.assignment and algebra.closed(other):
                algebra.assignment[var.id] = algebra.value(other)
                return True
        return None

    def solve(self, metavariables=()):
        pending = list(self.constraints)
        progress = True
        while pending and progress:
            progress = False
            still = []
            for c in pending:
                outcome = self._decide(c)
                if outcome is False:
                    raise mismatch(c, self.algebra)
                if outcome is None:
                    still.append(c)
                else:
                    progress = True
            pending = still

        if pending:
            logger.debug(f"{len(pending)} grade constraint(s) left unsolved by the syntactic backend.")
            raise mismatch(pending[0], self.algebra)

        self.constraints = []
        self.default_unconstrained(metavariables)
        return Solution(dict(self.algebra.assignment), [])
