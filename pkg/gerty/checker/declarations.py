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
Checking whole source files, one declaration at a time.
"""
import time
from dataclasses import dataclass, field
from functools import singledispatch
from typing import List, Optional

from gerty.conf import settings
from gerty.core.exceptions import ForeignLiteral, FuelExhausted, TypeCheckError, UnresolvedMetaVar
from gerty.grades.expressions import Add, Lit, MetaVar, Mul
from gerty.oracle.judgments import Derivation
from gerty.syntax.terms import App, BoxIntro, BoxTy, Lam, LetBox, LetPair, Pair, Pi, Tensor, Term, Universe, Var

from .rules import Checker
from .state import Environment

logger = settings.logger


@singledispatch
def grade_annotations(term):
    """Every grade written in a term, in source order."""
    raise TypeError(f"Not a term: {term!r}.")


@grade_annotations.register(Var)
@grade_annotations.register(Universe)
def _(term):
    return []


@grade_annotations.register(Pi)
def _(term):
    return [term.s, term.r] + grade_annotations(term.domain) + grade_annotations(term.codomain)


@grade_annotations.register(Tensor)
def _(term):
    return [term.r] + grade_annotations(term.first) + grade_annotations(term.second)


@grade_annotations.register(BoxTy)
def _(term):
    return [term.s] + grade_annotations(term.body)


@grade_annotations.register(Lam)
@grade_annotations.register(BoxIntro)
def _(term):
    return grade_annotations(term.body)


@grade_annotations.register(App)
def _(term):
    return grade_annotations(term.fn) + grade_annotations(term.arg)


@grade_annotations.register(Pair)
def _(term):
    return grade_annotations(term.first) + grade_annotations(term.second)


@grade_annotations.register(LetPair)
@grade_annotations.register(LetBox)
def _(term):
    return grade_annotations(term.scrutinee) + grade_annotations(term.body)


def _leaves(grade):
    if isinstance(grade, (Add, Mul)):
        yield from _leaves(grade.left)
        yield from _leaves(grade.right)
    else:
        yield grade


def check_literals(terms, semiring):
    """
    :return: The ids of the metavariables written in terms.
    :raises ForeignLiteral: for a grade literal outside the semiring's carrier.
    """
    ids = []
    for term in terms:
        for grade in grade_annotations(term):
            for leaf in _leaves(grade):
                if isinstance(leaf, Lit) and not semiring.contains(leaf.value):
                    raise ForeignLiteral(leaf.value, semiring.name)
                if isinstance(leaf, MetaVar):
                    ids.append(leaf.id)
    return ids


@dataclass
class DeclarationResult:
    name: str
    signature: Term
    error: Optional[Exception] = None
    derivation: Optional[Derivation] = None
    formation: Optional[Derivation] = None
    elapsed: float = 0.0

    @property
    def ok(self):
        return self.error is None


@dataclass
class CheckReport:
    environment: Environment
    results: List[DeclarationResult] = field(default_factory=list)

    @property
    def ok(self):
        return all(result.ok for result in self.results)

    @property
    def errors(self):
        return [result.error for result in self.results if not result.ok]

    def __iter__(self):
        return iter(self.results)

    def __len__(self):
        return len(self.results)

    def __getitem__(self, name):
        for result in self.results:
            if result.name == name:
                return result
        raise KeyError(name)


def check_declaration(env, declaration):
    """
    Check one declaration and, if it is accepted, add it to env's globals.

    Errors in the declaration are reported in the result rather than raised. Configuration and solver failures
    are raised.
    """
    env.begin()
    start = time.perf_counter()
    try:
        ids = check_literals((declaration.signature, declaration.body), env.semiring)
        checker = Checker(env)
        state = checker.empty()
        formed = checker.form(state, declaration.signature)
        checked = checker.check(state, declaration.body, declaration.signature)
        env.solver.solve(ids)
    except (TypeCheckError, FuelExhausted, ForeignLiteral, UnresolvedMetaVar) as e:
        elapsed = time.perf_counter() - start
        logger.info(f"Rejected '{declaration.name}': {e}")
        return DeclarationResult(declaration.name, declaration.signature, error=e, elapsed=elapsed)

    elapsed = time.perf_counter() - start
    env.define(declaration.name, declaration.signature, declaration.body)
    logger.debug(
        f"Accepted '{declaration.name}' in {elapsed * 1000:.2f}ms "
        f"(formation cache {env.cache.hits} hits / {env.cache.misses} misses)."
    )
    return DeclarationResult(
        declaration.name,
        declaration.signature,
        derivation=checked.derivation,
        formation=formed.derivation,
        elapsed=elapsed,
    )


def check_declarations(source, semiring=None, backend=None, optimise=None, record=False, env=None, **kwargs):
    """
    Check the declarations of a parsed source file in order. Each one may use the ones accepted before it.

    :param source: A SourceFile, or any iterable of declarations.
    :param semiring: Semiring or semiring name. A %semiring pragma in the source takes precedence.
    :param env: Continue checking in an existing environment instead of a new one.
    :return: A CheckReport.
    """
    pragma = getattr(source, "semiring", None)
    if env is None:
        env = Environment(
            semiring=pragma or semiring, backend=backend, optimise=optimise, record=record, **kwargs
        )
    report = CheckReport(env)
    for declaration in source:
        report.results.append(check_declaration(env, declaration))
    return report
