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
Seeded, type-directed generation of well-typed terms and of the derivations the checker records for them.

Generated contexts follow one layout: two type variables a and b, a type family P over a, then value assumptions
whose types are built from a and b (base types, boxes, tensors and first-order functions). Terms are produced
directly at a target type, so every candidate is well typed by construction. Grades inside assumption types are
concrete; the grades of the declared binders of a closed declaration are holes that the checker solves.
"""
import random
from dataclasses import dataclass
from typing import List, Tuple

from gerty.conf import settings
from gerty.grades.expressions import ZERO, GradeAlgebra, fresh_metavar
from gerty.grades.semirings import get_semiring
from gerty.syntax.parser import Declaration
from gerty.syntax.substitution import alpha_eq
from gerty.syntax.terms import (
    ANONYMOUS,
    App,
    BoxIntro,
    BoxTy,
    Lam,
    LetBox,
    LetPair,
    Pair,
    Pi,
    Tensor,
    Term,
    Var,
    universe,
)

logger = settings.logger

A, B = Var("a"), Var("b")
BASES = (A, B)


@dataclass
class Scenario:
    """An open typing problem: assumptions (name, type) in order, a term and the type it is generated at."""

    context: List[Tuple[str, Term]]
    term: Term
    type: Term

    @property
    def names(self):
        return [name for name, _ in self.context]


class TermGenerator:
    def __init__(self, seed=None, semiring=None, depth=3):
        self.seed = settings.SEED if seed is None else seed
        self.rng = random.Random(self.seed)
        if semiring is None or isinstance(semiring, str):
            semiring = get_semiring(semiring)
        self.semiring = semiring
        self.algebra = GradeAlgebra(semiring)
        self.depth = depth
        self._names = 0

    # Grades and names

    def grade(self):
        """A concrete grade, biased towards 0 and 1."""
        roll = self.rng.random()
        if roll < 0.35:
            return self.algebra.canonical(self.semiring.zero)
        if roll < 0.7:
            return self.algebra.canonical(self.semiring.one)
        return self.algebra.canonical(self.semiring.sample(self.rng))

    def fresh(self, prefix):
        self._names += 1
        return f"{prefix}{self._names}"

    # Types

    def base(self):
        return self.rng.choice(BASES)

    def value_type(self):
        roll = self.rng.random()
        if roll < 0.4:
            return self.base()
        if roll < 0.6:
            return BoxTy(self.grade(), self.base())
        if roll < 0.8:
            return Tensor(ANONYMOUS, ZERO, self.base(), self.base())
        return Pi(ANONYMOUS, self.grade(), ZERO, self.base(), self.base())

    def target_type(self):
        roll = self.rng.random()
        if roll < 0.6:
            return self.base()
        if roll < 0.8:
            return BoxTy(self.grade(), self.base())
        return Tensor(ANONYMOUS, ZERO, self.base(), self.base())

    def header(self):
        """The fixed prefix of every generated context."""
        family = Pi("w", self.algebra.canonical(self.semiring.one), ZERO, A, universe(0))
        return [("a", universe(0)), ("b", universe(0)), ("P", family)]

    def context(self, extra=None):
        """header, one assumption of each base type, two adjacent assumptions of type a, then extra ones."""
        count = self.rng.randint(0, 3) if extra is None else extra
        context = self.header() + [("xa", A), ("xb", B), ("c1", A), ("c2", A)]
        context += [(self.fresh("v"), self.value_type()) for _ in range(count)]
        return context

    # Terms

    @staticmethod
    def _of_type(context, type_):
        return [name for name, t in context if alpha_eq(t, type_)]

    def _inhabited(self, context, type_):
        if isinstance(type_, BoxTy):
            return self._inhabited(context, type_.body)
        if isinstance(type_, Tensor):
            return self._inhabited(context, type_.first) and self._inhabited(context, type_.second)
        return bool(self._of_type(context, type_))

    def term(self, context, type_, depth=None):
        """
        A term of type_ in context. type_ must be a base type, a box or a tensor over inhabited base types.
        """
        depth = self.depth if depth is None else depth
        if isinstance(type_, BoxTy):
            return BoxIntro(self.term(context, type_.body, depth))
        if isinstance(type_, Tensor):
            return Pair(self.term(context, type_.first, depth), self.term(context, type_.second, depth))
        return self._base_term(context, type_, depth)

    def _base_term(self, context, type_, depth):
        variables = self._of_type(context, type_)
        if depth <= 0:
            return Var(self.rng.choice(variables))

        options = [lambda: Var(self.rng.choice(variables))]
        for name, t in context:
            if isinstance(t, Pi) and alpha_eq(t.codomain, type_) and self._inhabited(context, t.domain):
                options.append(lambda f=name, d=t.domain: App(Var(f), self.term(context, d, depth - 1)))
            if isinstance(t, BoxTy) and alpha_eq(t.body, type_) and self.algebra.is_one(t.s):
                options.append(lambda y=name: self._counit(y))
            if isinstance(t, BoxTy) and self.algebra.is_zero(t.s):
                options.append(lambda y=name: LetBox(self.fresh("z"), Var(y), self.term(context, type_, depth - 1)))
            if isinstance(t, Tensor):
                options.append(
                    lambda p=name: LetPair(
                        self.fresh("u"), self.fresh("u"), Var(p), self.term(context, type_, depth - 1)
                    )
                )
        arguments = [(name, t) for name, t in context if any(alpha_eq(t, base) for base in BASES)]
        if arguments:
            options.append(lambda: self._beta(context, type_, depth, arguments))
            options.append(lambda: self._box_redex(context, type_, depth, arguments))
            options.append(lambda: self._pair_redex(context, type_, depth, arguments))
        return self.rng.choice(options)()

    def _counit(self, y):
        z = self.fresh("z")
        return LetBox(z, Var(y), Var(z))

    def _beta(self, context, type_, depth, arguments):
        name, t = self.rng.choice(arguments)
        w = self.fresh("w")
        return App(Lam(w, self.term(context + [(w, t)], type_, depth - 1)), Var(name))

    def _box_redex(self, context, type_, depth, arguments):
        name, t = self.rng.choice(arguments)
        z = self.fresh("z")
        return LetBox(z, BoxIntro(Var(name)), self.term(context + [(z, t)], type_, depth - 1))

    def _pair_redex(self, context, type_, depth, arguments):
        (first, _), (second, _) = self.rng.choice(arguments), self.rng.choice(arguments)
        return LetPair(
            self.fresh("u"), self.fresh("u"), Pair(Var(first), Var(second)), self.term(context, type_, depth - 1)
        )

    # Problems

    def scenario(self, depth=None):
        context = self.context()
        type_ = self.target_type()
        return Scenario(context, self.term(context, type_, depth), type_)

    def declaration(self, depth=None):
        """
        A closed declaration: the scenario's context becomes a telescope of binders graded by holes, the term
        becomes the body under matching abstractions.
        """
        problem = self.scenario(depth)
        signature, body = problem.type, problem.term
        for name, type_ in reversed(problem.context):
            signature = Pi(name, fresh_metavar(), fresh_metavar(), type_, signature)
            body = Lam(name, body)
        return Declaration(self.fresh("gen"), signature, body)


def gen_derivation(budget, semiring=None, seed=None):
    """
    Generate a context and a target type, then build a derivation of some term at that type from the declarative
    rules. The algorithmic checker plays no part. A budget of 1 gives a single variable or universe rule.

    :return: The derivation and the grade algebra that evaluates it.
    """
    from .builder import DerivationBuilder

    if budget < 1:
        raise ValueError("The size budget must be at least 1.")
    generator = TermGenerator(seed, semiring, depth=max(budget - 1, 0) // 2)
    builder = DerivationBuilder(generator.semiring, generator.seed)
    context = generator.context()
    wf = builder.context(context)
    if budget == 1:
        if generator.rng.random() < 0.5:
            return builder.t_type(wf, 0), builder.algebra
        return builder.t_var(wf, generator.rng.choice([name for name, _ in context])), builder.algebra
    return builder.generate(wf, generator.target_type(), generator.depth), builder.algebra


def build_state(checker, context):
    """Extend the empty state assumption by assumption, forming each type in the state before it."""
    state = checker.empty()
    for name, type_ in context:
        formed = checker.form(state, type_)
        state = state.extend(name, type_, formed.grades, formed.derivation)
    return state
