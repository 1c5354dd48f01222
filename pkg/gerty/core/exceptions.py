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
Global gerty exceptions and warning classes.
"""


class ImproperlyConfigured(Exception):
    """gerty is somehow improperly configured"""

    pass


class ParseError(Exception):
    """
    A source file could not be parsed. Renders as '<file>:<line>:<col>: parse error: expected <tokens>'.
    """

    def __init__(self, file, line, column, expected, message=None):
        self.file = file
        self.line = line
        self.column = column
        self.expected = sorted(expected)

        if message is None:
            tokens = ", ".join(self.expected) if self.expected else "end of input"
            message = f"{file}:{line}:{column}: parse error: expected {tokens}"
        super().__init__(message)


class UnresolvedMetaVar(Exception):
    def __init__(self, metavar):
        self.metavar = metavar

        super().__init__(f"Grade variable ?{metavar} has not been resolved.")


class ForeignLiteral(Exception):
    def __init__(self, value, semiring):
        self.value = value
        self.semiring = semiring

        super().__init__(f"Grade '{value}' is not an element of the '{semiring}' semiring.")


class MalformedExchange(Exception):
    """
    An exchange would split an inner grade vector between the two swapped positions.
    """

    pass


class FuelExhausted(Exception):
    """
    Normalisation ran out of steps: either the term diverges or more fuel is needed.
    """

    def __init__(self, partial, fuel=None):
        self.partial = partial
        self.fuel = fuel

        super().__init__(f"Normalisation did not finish within {fuel} steps.")


class TypeCheckError(Exception):
    """
    Base class for errors raised while type checking a declaration.
    """

    def __init__(self, message, span=None):
        self.message = message
        self.span = span
        super().__init__(message)

    def __str__(self):
        if self.span is None:
            return self.message
        return f"{self.span}: {self.message}"


class CannotInfer(TypeCheckError):
    pass


class UnboundVariable(TypeCheckError):
    pass


class DuplicateVariable(TypeCheckError):
    pass


class NotAType(TypeCheckError):
    pass


class NonZeroTypeUse(TypeCheckError):
    pass


class NotAFunction(TypeCheckError):
    pass


class NotATensor(TypeCheckError):
    pass


class NotABox(TypeCheckError):
    pass


class TypeMismatch(TypeCheckError):
    def __init__(self, expected, actual, span=None):
        self.expected = expected
        self.actual = actual

        super().__init__(
            f"Type mismatch:\n expected {expected}\n but got  {actual}", span
        )


class Unsatisfiable(TypeCheckError):
    """
    A set of grade constraints has no solution. Carries the constraint whose provenance explains the failure.
    """

    def __init__(self, constraint, message=None, span=None):
        self.constraint = constraint
        if message is None:
            message = f"Unsatisfiable grade constraint {constraint}."
        if span is None and constraint is not None:
            span = getattr(constraint.provenance, "span", None)
        super().__init__(message, span)


class GradeMismatch(Unsatisfiable):
    """
    A grade equality obligation failed. Rendered in the format used for every grading diagnostic:

        At subject stage got the following mismatched grades:
         For 'x' expected Hi but got .1
    """

    def __init__(self, stage, variable, expected, actual, constraint=None, span=None):
        self.stage = stage
        self.variable = variable
        self.expected = expected
        self.actual = actual

        super().__init__(
            constraint,
            f"At {stage} stage got the following mismatched grades:\n"
            f" For '{variable}' expected {expected} but got {actual}",
            span,
        )

    def __str__(self):
        # The grading diagnostic is printed without a location prefix.
        return self.message


class SolverError(Exception):
    pass


class SolverUnavailable(SolverError):
    pass


class SolverUnknown(SolverError):
    """
    The solver could neither prove nor refute the constraints. Treated as a failure.
    """

    pass


class PreconditionViolated(Exception):
    pass


class NotQuantitative(Exception):
    def __init__(self, semiring):
        self.semiring = semiring

        super().__init__(f"The '{semiring}' semiring is not quantitative.")


class OutOfFragment(Exception):
    pass


class SimulationMismatch(Exception):
    def __init__(self, step, message):
        self.step = step

        super().__init__(f"Step {step}: {message}")
