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
Capture-avoiding simultaneous substitution and alpha-equivalence.
"""
import operator
from functools import singledispatch

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
    Universe,
    Var,
)


def fresh_name(name, avoid):
    """Prime name until it is not in avoid."""
    if name == ANONYMOUS:
        name = "x"
    while name in avoid:
        name = name + "'"
    return name


def subst(term, name, replacement):
    """[replacement/name]term"""
    return subst_many(term, {name: replacement})


def subst_many(term, mapping):
    """
    Replace every free occurrence of each name in mapping by its term, renaming binders that would capture a
    free variable of a replacement.
    """
    return _subst(term, dict(mapping))


def _binder(name, body_fv, mapping):
    """
    Work out how a binder passes through a substitution.

    :return: The (possibly renamed) binder and the mapping to use below it.
    """
    inner = {k: v for k, v in mapping.items() if k != name and k in body_fv}
    if name == ANONYMOUS:
        return name, inner
    captured = set()
    for replacement in inner.values():
        captured |= replacement.free_vars
    if name not in captured:
        return name, inner
    new = fresh_name(name, captured | body_fv | set(inner))
    inner[name] = Var(new)
    return new, inner


@singledispatch
def _subst(term, mapping):
    raise TypeError(f"Not a term: {term!r}.")


@_subst.register(Var)
def _(term, mapping):
    return mapping.get(term.name, term)


@_subst.register(Universe)
def _(term, mapping):
    return Universe(term.level, span=term.span)


@_subst.register(Pi)
def _(term, mapping):
    name, inner = _binder(term.name, term.codomain.free_vars, mapping)
    return Pi(name, term.s, term.r, _subst(term.domain, mapping), _subst(term.codomain, inner), span=term.span)


@_subst.register(Lam)
def _(term, mapping):
    name, inner = _binder(term.name, term.body.free_vars, mapping)
    return Lam(name, _subst(term.body, inner), span=term.span)


@_subst.register(App)
def _(term, mapping):
    return App(_subst(term.fn, mapping), _subst(term.arg, mapping), span=term.span)


@_subst.register(Tensor)
def _(term, mapping):
    name, inner = _binder(term.name, term.second.free_vars, mapping)
    return Tensor(name, term.r, _subst(term.first, mapping), _subst(term.second, inner), span=term.span)


@_subst.register(Pair)
def _(term, mapping):
    return Pair(_subst(term.first, mapping), _subst(term.second, mapping), span=term.span)


@_subst.register(LetPair)
def _(term, mapping):
    body_fv = term.body.free_vars
    inner = {k: v for k, v in mapping.items() if k not in (term.x, term.y) and k in body_fv}
    captured = set()
    for replacement in inner.values():
        captured |= replacement.free_vars
    avoid = captured | body_fv | set(inner)
    x, y = term.x, term.y
    if x in captured:
        x = fresh_name(x, avoid | {y})
        inner[term.x] = Var(x)
    if y in captured:
        y = fresh_name(y, avoid | {x})
        inner[term.y] = Var(y)
    return LetPair(x, y, _subst(term.scrutinee, mapping), _subst(term.body, inner), span=term.span)


@_subst.register(BoxTy)
def _(term, mapping):
    return BoxTy(term.s, _subst(term.body, mapping), span=term.span)


@_subst.register(BoxIntro)
def _(term, mapping):
    return BoxIntro(_subst(term.body, mapping), span=term.span)


@_subst.register(LetBox)
def _(term, mapping):
    name, inner = _binder(term.name, term.body.free_vars, mapping)
    return LetBox(name, _subst(term.scrutinee, mapping), _subst(term.body, inner), span=term.span)


def rename(term, old, new):
    return subst(term, old, Var(new))


def alpha_eq(t1, t2, grade_eq=operator.eq):
    """
    Equality up to consistent renaming of bound names.

    :param grade_eq: Decides equality of the grade annotations met on the way.
    """
    return _alpha(t1, t2, {}, {}, 0, grade_eq)


def _bind(env, name, depth):
    env = dict(env)
    env[name] = depth
    return env


def _alpha(t1, t2, env1, env2, depth, grade_eq):
    if type(t1) is not type(t2):
        return False

    if isinstance(t1, Var):
        i, j = env1.get(t1.name), env2.get(t2.name)
        if i is None and j is None:
            return t1.name == t2.name
        return i == j

    if isinstance(t1, Universe):
        return t1.index == t2.index

    if isinstance(t1, Pi):
        return (
            grade_eq(t1.s, t2.s)
            and grade_eq(t1.r, t2.r)
            and _alpha(t1.domain, t2.domain, env1, env2, depth, grade_eq)
            and _alpha(
                t1.codomain, t2.codomain, _bind(env1, t1.name, depth), _bind(env2, t2.name, depth), depth + 1, grade_eq
            )
        )

    if isinstance(t1, Lam):
        return _alpha(t1.body, t2.body, _bind(env1, t1.name, depth), _bind(env2, t2.name, depth), depth + 1, grade_eq)

    if isinstance(t1, App):
        return _alpha(t1.fn, t2.fn, env1, env2, depth, grade_eq) and _alpha(t1.arg, t2.arg, env1, env2, depth, grade_eq)

    if isinstance(t1, Tensor):
        return (
            grade_eq(t1.r, t2.r)
            and _alpha(t1.first, t2.first, env1, env2, depth, grade_eq)
            and _alpha(
                t1.second, t2.second, _bind(env1, t1.name, depth), _bind(env2, t2.name, depth), depth + 1, grade_eq
            )
        )

    if isinstance(t1, Pair):
        return _alpha(t1.first, t2.first, env1, env2, depth, grade_eq) and _alpha(
            t1.second, t2.second, env1, env2, depth, grade_eq
        )

    if isinstance(t1, LetPair):
        inner1 = _bind(_bind(env1, t1.x, depth), t1.y, depth + 1)
        inner2 = _bind(_bind(env2, t2.x, depth), t2.y, depth + 1)
        return _alpha(t1.scrutinee, t2.scrutinee, env1, env2, depth, grade_eq) and _alpha(
            t1.body, t2.body, inner1, inner2, depth + 2, grade_eq
        )

    if isinstance(t1, BoxTy):
        return grade_eq(t1.s, t2.s) and _alpha(t1.body, t2.body, env1, env2, depth, grade_eq)

    if isinstance(t1, BoxIntro):
        return _alpha(t1.body, t2.body, env1, env2, depth, grade_eq)

    if isinstance(t1, LetBox):
        return _alpha(t1.scrutinee, t2.scrutinee, env1, env2, depth, grade_eq) and _alpha(
            t1.body, t2.body, _bind(env1, t1.name, depth), _bind(env2, t2.name, depth), depth + 1, grade_eq
        )

    raise TypeError(f"Not a term: {t1!r}.")
