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
Call-by-name small-step reduction and normalisation.

Only head positions reduce: the function of an application and the scrutinee of an eliminator. Top-level names
unfold to their definitions.
"""
from dataclasses import dataclass
from typing import Union

from gerty.conf import settings
from gerty.core.exceptions import FuelExhausted
from gerty.syntax.substitution import subst, subst_many
from gerty.syntax.terms import (
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
)

BETA_FUNCTION = "beta-function"
BETA_TENSOR = "beta-tensor"
BETA_BOX = "beta-box"
DELTA = "delta"
CONGRUENCE_APP = "congruence-app"
CONGRUENCE_LET_PAIR = "congruence-let-pair"
CONGRUENCE_LET_BOX = "congruence-let-box"


@dataclass(frozen=True)
class Stepped:
    term: Term
    rule: str


class Stuck:
    """The term is a value or a neutral term."""

    def __repr__(self):
        return "STUCK"


STUCK = Stuck()

StepResult = Union[Stepped, Stuck]


def step(term, definitions=None):
    """
    Take one call-by-name step.

    :param definitions: Bodies of top-level names, unfolded when a name reaches head position.
    :return: Stepped with the reduct and the rule that fired, or STUCK.
    """
    definitions = definitions or {}

    if isinstance(term, App):
        if isinstance(term.fn, Lam):
            return Stepped(subst(term.fn.body, term.fn.name, term.arg), BETA_FUNCTION)
        inner = step(term.fn, definitions)
        if isinstance(inner, Stepped):
            return Stepped(App(inner.term, term.arg, span=term.span), CONGRUENCE_APP)
        return STUCK

    if isinstance(term, LetPair):
        if isinstance(term.scrutinee, Pair):
            pair = term.scrutinee
            return Stepped(subst_many(term.body, {term.x: pair.first, term.y: pair.second}), BETA_TENSOR)
        inner = step(term.scrutinee, definitions)
        if isinstance(inner, Stepped):
            return Stepped(LetPair(term.x, term.y, inner.term, term.body, span=term.span), CONGRUENCE_LET_PAIR)
        return STUCK

    if isinstance(term, LetBox):
        if isinstance(term.scrutinee, BoxIntro):
            return Stepped(subst(term.body, term.name, term.scrutinee.body), BETA_BOX)
        inner = step(term.scrutinee, definitions)
        if isinstance(inner, Stepped):
            return Stepped(LetBox(term.name, inner.term, term.body, span=term.span), CONGRUENCE_LET_BOX)
        return STUCK

    if isinstance(term, Var) and term.name in definitions:
        return Stepped(definitions[term.name], DELTA)

    return STUCK


class Fuel:
    """A step budget shared by every reduction of one normalisation."""

    def __init__(self, amount=None):
        self.amount = settings.FUEL if amount is None else amount
        if self.amount < 1:
            raise ValueError("Fuel must be at least 1.")
        self.used = 0

    def burn(self, term):
        self.used += 1
        if self.used > self.amount:
            raise FuelExhausted(term, self.amount)


def _fuel(fuel):
    return fuel if isinstance(fuel, Fuel) else Fuel(fuel)


def normalize(term, fuel=None, definitions=None):
    """
    Reduce to weak head normal form.

    :param fuel: Step budget (settings.FUEL), or a Fuel shared with other reductions.
    :raises FuelExhausted: when the budget runs out, carrying the term reached so far.
    """
    fuel = _fuel(fuel)
    while True:
        result = step(term, definitions)
        if result is STUCK:
            return term
        fuel.burn(result.term)
        term = result.term


def _without(definitions, names):
    if not definitions or not any(name in definitions for name in names):
        return definitions
    return {k: v for k, v in definitions.items() if k not in names}


def normal_form(term, fuel=None, definitions=None):
    """
    Reduce everywhere, including under binders and inside pairs and boxes.

    :raises FuelExhausted: when the shared budget runs out.
    """
    fuel = _fuel(fuel)
    definitions = definitions or {}
    term = normalize(term, fuel, definitions)

    def under(body, *names):
        return normal_form(body, fuel, _without(definitions, names))

    if isinstance(term, Lam):
        return Lam(term.name, under(term.body, term.name), span=term.span)
    if isinstance(term, App):
        return App(normal_form(term.fn, fuel, definitions), normal_form(term.arg, fuel, definitions), span=term.span)
    if isinstance(term, Pi):
        return Pi(
            term.name,
            term.s,
            term.r,
            normal_form(term.domain, fuel, definitions),
            under(term.codomain, term.name),
            span=term.span,
        )
    if isinstance(term, Tensor):
        return Tensor(
            term.name, term.r, normal_form(term.first, fuel, definitions), under(term.second, term.name), span=term.span
        )
    if isinstance(term, Pair):
        return Pair(normal_form(term.first, fuel, definitions), normal_form(term.second, fuel, definitions))
    if isinstance(term, LetPair):
        return LetPair(
            term.x,
            term.y,
            normal_form(term.scrutinee, fuel, definitions),
            under(term.body, term.x, term.y),
            span=term.span,
        )
    if isinstance(term, BoxTy):
        return BoxTy(term.s, normal_form(term.body, fuel, definitions), span=term.span)
    if isinstance(term, BoxIntro):
        return BoxIntro(normal_form(term.body, fuel, definitions), span=term.span)
    if isinstance(term, LetBox):
        return LetBox(
            term.name, normal_form(term.scrutinee, fuel, definitions), under(term.body, term.name), span=term.span
        )
    return term


def reduction_sequence(term, steps, definitions=None):
    """
    :return: The terms reached by up to `steps` head steps, starting with term itself.
    """
    sequence = [term]
    for _ in range(steps):
        result = step(sequence[-1], definitions)
        if result is STUCK:
            break
        sequence.append(result.term)
    return sequence
