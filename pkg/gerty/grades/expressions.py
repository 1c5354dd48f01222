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
Grade expressions: unary numerals, semiring literals and metavariables standing for implicit grades.
"""
import itertools
from dataclasses import dataclass
from functools import singledispatch
from typing import Any, Dict, Optional

from gerty.core.exceptions import ForeignLiteral, UnresolvedMetaVar


class GradeExpr:
    """Base class of grade expressions."""

    __slots__ = ()

    def __add__(self, other):
        return Add(self, other)

    def __mul__(self, other):
        return Mul(self, other)


@dataclass(frozen=True)
class Zero(GradeExpr):
    def __str__(self):
        return ".0"


@dataclass(frozen=True)
class One(GradeExpr):
    def __str__(self):
        return ".1"


@dataclass(frozen=True)
class Add(GradeExpr):
    left: GradeExpr
    right: GradeExpr

    def __str__(self):
        return f"{self.left} + {self.right}"


@dataclass(frozen=True)
class Mul(GradeExpr):
    left: GradeExpr
    right: GradeExpr

    def __str__(self):
        left = f"({self.left})" if isinstance(self.left, Add) else str(self.left)
        right = f"({self.right})" if isinstance(self.right, Add) else str(self.right)
        return f"{left} * {right}"


@dataclass(frozen=True)
class Lit(GradeExpr):
    """A carrier value written directly, e.g. Lo, Hi or ∞ (or a folded natural)."""

    value: Any

    def __str__(self):
        if isinstance(self.value, int):
            return f".{self.value}"
        return str(self.value)


@dataclass(frozen=True)
class MetaVar(GradeExpr):
    id: int

    def __str__(self):
        return f"?{self.id}"


ZERO = Zero()
ONE = One()

_metavar_ids = itertools.count()


def fresh_metavar():
    return MetaVar(next(_metavar_ids))


def numeral(n):
    """
    The unary encoding of .n: ((.0 + .1) + .1) ... with .0 and .1 themselves for n < 2.
    """
    if n < 0:
        raise ValueError(f"Grade numerals are non-negative, got {n}.")
    if n == 0:
        return ZERO
    expr = ONE
    for _ in range(n - 1):
        expr = Add(expr, ONE)
    return expr


@singledispatch
def eval_grade(expr, semiring, assignment: Optional[Dict[int, Any]] = None):
    """
    Evaluate a grade expression to a carrier value.

    :param assignment: Values for metavariables, by id.
    :raises UnresolvedMetaVar: if a metavariable has no value.
    :raises ForeignLiteral: if a literal is not an element of the semiring.
    """
    raise TypeError(f"Not a grade expression: {expr!r}.")


@eval_grade.register(Zero)
def _(expr, semiring, assignment=None):
    return semiring.zero


@eval_grade.register(One)
def _(expr, semiring, assignment=None):
    return semiring.one


@eval_grade.register(Add)
def _(expr, semiring, assignment=None):
    return semiring.add(eval_grade(expr.left, semiring, assignment), eval_grade(expr.right, semiring, assignment))


@eval_grade.register(Mul)
def _(expr, semiring, assignment=None):
    return semiring.mul(eval_grade(expr.left, semiring, assignment), eval_grade(expr.right, semiring, assignment))


@eval_grade.register(Lit)
def _(expr, semiring, assignment=None):
    if not semiring.contains(expr.value):
        raise ForeignLiteral(expr.value, semiring.name)
    return expr.value


@eval_grade.register(MetaVar)
def _(expr, semiring, assignment=None):
    if assignment is None or expr.id not in assignment:
        raise UnresolvedMetaVar(expr.id)
    return assignment[expr.id]


@singledispatch
def metavars(expr):
    """The set of metavariable ids occurring in a grade expression."""
    return frozenset()


@metavars.register(Add)
@metavars.register(Mul)
def _(expr):
    return metavars(expr.left) | metavars(expr.right)


@metavars.register(MetaVar)
def _(expr):
    return frozenset((expr.id,))


def is_closed(expr):
    return not metavars(expr)


class GradeAlgebra:
    """
    Grade arithmetic for a checking run: a semiring plus the metavariable values solved so far.

    Sums and products of closed expressions are folded to canonical expressions, so that grade vectors stay small
    however many times they are scaled and added.
    """

    def __init__(self, semiring, assignment=None):
        self.semiring = semiring
        self.assignment = {} if assignment is None else assignment

    def value(self, expr):
        return eval_grade(expr, self.semiring, self.assignment)

    def closed(self, expr):
        return metavars(expr) <= self.assignment.keys()

    def canonical(self, value):
        if value == self.semiring.zero:
            return ZERO
        if value == self.semiring.one:
            return ONE
        return Lit(value)

    def normalize(self, expr):
        if self.closed(expr):
            return self.canonical(self.value(expr))
        return expr

    def add(self, a, b):
        if self.closed(a) and self.closed(b):
            return self.canonical(self.semiring.add(self.value(a), self.value(b)))
        if self.is_zero(a):
            return b
        if self.is_zero(b):
            return a
        return Add(a, b)

    def mul(self, a, b):
        if self.closed(a) and self.closed(b):
            return self.canonical(self.semiring.mul(self.value(a), self.value(b)))
        if self.is_zero(a) or self.is_zero(b):
            return ZERO
        if self.is_one(a):
            return b
        if self.is_one(b):
            return a
        return Mul(a, b)

    def is_zero(self, expr):
        """True only when expr is known to be zero."""
        return self.closed(expr) and self.value(expr) == self.semiring.zero

    def is_one(self, expr):
        return self.closed(expr) and self.value(expr) == self.semiring.one

    def equal(self, a, b):
        """
        Decide closed equalities.

        :return: True or False for closed expressions, None when a metavariable is still unsolved.
        """
        if self.closed(a) and self.closed(b):
            return self.value(a) == self.value(b)
        if a == b:
            return True
        return None

    def render(self, expr):
        """The evaluated spelling used on the 'got' side of grade diagnostics."""
        if self.closed(expr):
            return self.semiring.render(self.value(expr))
        return str(expr)
