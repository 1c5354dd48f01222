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
The term language. Computations and types share one syntactic sort.

Nodes are immutable. Every node carries an optional SourceSpan that takes no part in equality.
"""
from dataclasses import dataclass, field
from functools import cached_property, singledispatch
from typing import Optional

from gerty.grades.expressions import GradeExpr

# Name used for binders that cannot be referred to.
ANONYMOUS = "_"


@dataclass(frozen=True)
class SourceSpan:
    file: str
    line: int
    column: int
    end_line: Optional[int] = None
    end_column: Optional[int] = None

    def __str__(self):
        return f"{self.file}:{self.line}:{self.column}"


def _span():
    return field(default=None, compare=False, repr=False)


class Level:
    __slots__ = ()


@dataclass(frozen=True)
class LZero(Level):
    pass


@dataclass(frozen=True)
class LSuc(Level):
    level: Level


@dataclass(frozen=True)
class LLub(Level):
    left: Level
    right: Level


@singledispatch
def normalize_level(level):
    """The natural number a closed level denotes."""
    raise TypeError(f"Not a universe level: {level!r}.")


@normalize_level.register(LZero)
def _(level):
    return 0


@normalize_level.register(LSuc)
def _(level):
    return normalize_level(level.level) + 1


@normalize_level.register(LLub)
def _(level):
    return max(normalize_level(level.left), normalize_level(level.right))


def level_of(n):
    level = LZero()
    for _ in range(n):
        level = LSuc(level)
    return level


class Term:
    """Base class of all term nodes."""

    @cached_property
    def free_vars(self):
        return frozenset()


@dataclass(frozen=True)
class Var(Term):
    name: str
    span: Optional[SourceSpan] = _span()

    @cached_property
    def free_vars(self):
        return frozenset((self.name,))


@dataclass(frozen=True)
class Universe(Term):
    level: Level
    span: Optional[SourceSpan] = _span()

    @property
    def index(self):
        return normalize_level(self.level)


@dataclass(frozen=True)
class Pi(Term):
    """(name :(s, r) domain) -> codomain"""

    name: str
    s: GradeExpr
    r: GradeExpr
    domain: Term
    codomain: Term
    span: Optional[SourceSpan] = _span()

    @cached_property
    def free_vars(self):
        return self.domain.free_vars | (self.codomain.free_vars - {self.name})


@dataclass(frozen=True)
class Lam(Term):
    name: str
    body: Term
    span: Optional[SourceSpan] = _span()

    @cached_property
    def free_vars(self):
        return self.body.free_vars - {self.name}


@dataclass(frozen=True)
class App(Term):
    fn: Term
    arg: Term
    span: Optional[SourceSpan] = _span()

    @cached_property
    def free_vars(self):
        return self.fn.free_vars | self.arg.free_vars


@dataclass(frozen=True)
class Tensor(Term):
    """(name :r first) * second"""

    name: str
    r: GradeExpr
    first: Term
    second: Term
    span: Optional[SourceSpan] = _span()

    @cached_property
    def free_vars(self):
        return self.first.free_vars | (self.second.free_vars - {self.name})


@dataclass(frozen=True)
class Pair(Term):
    first: Term
    second: Term
    span: Optional[SourceSpan] = _span()

    @cached_property
    def free_vars(self):
        return self.first.free_vars | self.second.free_vars


@dataclass(frozen=True)
class LetPair(Term):
    """let (x, y) = scrutinee in body"""

    x: str
    y: str
    scrutinee: Term
    body: Term
    span: Optional[SourceSpan] = _span()

    @cached_property
    def free_vars(self):
        return self.scrutinee.free_vars | (self.body.free_vars - {self.x, self.y})


@dataclass(frozen=True)
class BoxTy(Term):
    s: GradeExpr
    body: Term
    span: Optional[SourceSpan] = _span()

    @cached_property
    def free_vars(self):
        return self.body.free_vars


@dataclass(frozen=True)
class BoxIntro(Term):
    body: Term
    span: Optional[SourceSpan] = _span()

    @cached_property
    def free_vars(self):
        return self.body.free_vars


@dataclass(frozen=True)
class LetBox(Term):
    """let [name] = scrutinee in body"""

    name: str
    scrutinee: Term
    body: Term
    span: Optional[SourceSpan] = _span()

    @cached_property
    def free_vars(self):
        return self.scrutinee.free_vars | (self.body.free_vars - {self.name})


def universe(n=0, span=None):
    return Universe(level_of(n), span=span)


def arrow(domain, codomain, s, r):
    """A non-dependent function type."""
    return Pi(ANONYMOUS, s, r, domain, codomain)


def apply(fn, *args):
    for arg in args:
        fn = App(fn, arg)
    return fn


def spine(term):
    """Split an application into its head and arguments."""
    args = []
    while isinstance(term, App):
        args.append(term.arg)
        term = term.fn
    return term, args[::-1]
