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
Definitional equality (normalise, eta-contract, compare up to renaming) and subtyping.
"""
import operator

from gerty.evaluation.reduction import Fuel, normal_form, normalize
from gerty.syntax.substitution import alpha_eq, fresh_name, rename
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
    Universe,
    Var,
)


def eta_contract(term):
    """
    Apply the eta rules bottom-up:

        \\x -> f x                   ~>  f        (x not free in f)
        case t of <x, y> -> <x, y>   ~>  t
        let [x] = t in [x]           ~>  t
    """
    if isinstance(term, Lam):
        body = eta_contract(term.body)
        if (
            isinstance(body, App)
            and isinstance(body.arg, Var)
            and body.arg.name == term.name
            and term.name not in body.fn.free_vars
        ):
            return body.fn
        return Lam(term.name, body, span=term.span)
    if isinstance(term, App):
        return App(eta_contract(term.fn), eta_contract(term.arg), span=term.span)
    if isinstance(term, Pi):
        return Pi(term.name, term.s, term.r, eta_contract(term.domain), eta_contract(term.codomain), span=term.span)
    if isinstance(term, Tensor):
        return Tensor(term.name, term.r, eta_contract(term.first), eta_contract(term.second), span=term.span)
    if isinstance(term, Pair):
        return Pair(eta_contract(term.first), eta_contract(term.second), span=term.span)
    if isinstance(term, LetPair):
        scrutinee, body = eta_contract(term.scrutinee), eta_contract(term.body)
        if body == Pair(Var(term.x), Var(term.y)) and term.x != term.y:
            return scrutinee
        return LetPair(term.x, term.y, scrutinee, body, span=term.span)
    if isinstance(term, BoxTy):
        return BoxTy(term.s, eta_contract(term.body), span=term.span)
    if isinstance(term, BoxIntro):
        return BoxIntro(eta_contract(term.body), span=term.span)
    if isinstance(term, LetBox):
        scrutinee, body = eta_contract(term.scrutinee), eta_contract(term.body)
        if body == BoxIntro(Var(term.name)):
            return scrutinee
        return LetBox(term.name, scrutinee, body, span=term.span)
    return term


def def_equal(t1, t2, definitions=None, fuel=None, grade_eq=operator.eq):
    """
    Decide beta-eta equality by normalising both sides.

    :param grade_eq: Decides (or records) equality of grade annotations.
    :raises FuelExhausted: if either side fails to normalise within the shared budget.
    """
    if alpha_eq(t1, t2):
        return True
    fuel = fuel if isinstance(fuel, Fuel) else Fuel(fuel)
    n1 = eta_contract(normal_form(t1, fuel, definitions))
    n2 = eta_contract(normal_form(t2, fuel, definitions))
    return alpha_eq(n1, n2, grade_eq)


def _common_binder(name1, body1, name2, body2):
    """Rename two binders apart to one shared fresh name."""
    if name1 == name2:
        return body1, body2
    name = fresh_name(name1, body1.free_vars | body2.free_vars)
    return rename(body1, name1, name), rename(body2, name2, name)


def subtype(a, b, definitions=None, fuel=None, grade_eq=operator.eq):
    """
    Decide a <= b: universes are ordered by level, function domains are contravariant, codomains and the
    components of tensors and boxes covariant, grades must be equal, and anything else must be definitionally equal.
    """
    if alpha_eq(a, b):
        return True
    fuel = fuel if isinstance(fuel, Fuel) else Fuel(fuel)
    a = normalize(a, fuel, definitions)
    b = normalize(b, fuel, definitions)

    if isinstance(a, Universe) and isinstance(b, Universe):
        return a.index <= b.index

    if isinstance(a, Pi) and isinstance(b, Pi):
        codomain_a, codomain_b = _common_binder(a.name, a.codomain, b.name, b.codomain)
        return (
            grade_eq(a.s, b.s)
            and grade_eq(a.r, b.r)
            and subtype(b.domain, a.domain, definitions, fuel, grade_eq)
            and subtype(codomain_a, codomain_b, definitions, fuel, grade_eq)
        )

    if isinstance(a, Tensor) and isinstance(b, Tensor):
        second_a, second_b = _common_binder(a.name, a.second, b.name, b.second)
        return (
            grade_eq(a.r, b.r)
            and subtype(a.first, b.first, definitions, fuel, grade_eq)
            and subtype(second_a, second_b, definitions, fuel, grade_eq)
        )

    if isinstance(a, BoxTy) and isinstance(b, BoxTy):
        return grade_eq(a.s, b.s) and subtype(a.body, b.body, definitions, fuel, grade_eq)

    return def_equal(a, b, definitions, fuel, grade_eq)
