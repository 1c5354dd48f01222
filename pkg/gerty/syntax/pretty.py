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
Canonical printer. Output parses back to an alpha-equivalent term with the same grades.
"""
from functools import singledispatch

from gerty.grades.expressions import Add, Lit, MetaVar, Mul, One, Zero
from gerty.grades.semirings import INFINITY
from gerty.syntax.substitution import fresh_name
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


def _ones(expr):
    """The n of a numeral tree .0 / .1 / a + b, or None."""
    if isinstance(expr, Zero):
        return 0
    if isinstance(expr, One):
        return 1
    if isinstance(expr, Add):
        left, right = _ones(expr.left), _ones(expr.right)
        if left is not None and right is not None:
            return left + right
    if isinstance(expr, Lit) and isinstance(expr.value, int) and not isinstance(expr.value, bool):
        return expr.value
    return None


def pretty_grade(expr):
    n = _ones(expr)
    if n is not None:
        return f".{n}"
    if isinstance(expr, MetaVar):
        return "_"
    if isinstance(expr, Lit):
        return "Inf" if expr.value == INFINITY else str(expr.value)
    if isinstance(expr, Add):
        return f"{pretty_grade(expr.left)} + {pretty_grade(expr.right)}"
    if isinstance(expr, Mul):
        return f"{_grade_factor(expr.left)} * {_grade_factor(expr.right)}"
    raise TypeError(f"Not a grade expression: {expr!r}.")


def _grade_factor(expr):
    text = pretty_grade(expr)
    if isinstance(expr, Add) and _ones(expr) is None:
        return f"({text})"
    return text


# Precedence levels: binders and arrows < application < atoms.
TERM, APP, ATOM = range(3)


def pretty(term, erase=False):
    """
    Print a term in surface syntax.

    :param erase: Drop every grade annotation. The result reads as ungraded dependent type theory and does not
    parse back.
    """
    return _pretty(term, TERM, erase)


def _wrap(text, needed, context):
    return f"({text})" if needed < context else text


@singledispatch
def _pretty(term, context, erase):
    raise TypeError(f"Not a term: {term!r}.")


@_pretty.register(Var)
def _(term, context, erase):
    return term.name


@_pretty.register(Universe)
def _(term, context, erase):
    return _wrap(f"Type {term.index}", APP, context)


@_pretty.register(Pi)
def _(term, context, erase):
    domain = _pretty(term.domain, TERM, erase)
    codomain = _pretty(term.codomain, TERM, erase)
    name = term.name if term.name != ANONYMOUS else fresh_name("x", term.codomain.free_vars)
    if erase:
        binder = f"({name} : {domain})"
    else:
        binder = f"({name} : ({pretty_grade(term.s)}, {pretty_grade(term.r)}) {domain})"
    return _wrap(f"{binder} -> {codomain}", TERM, context)


@_pretty.register(Lam)
def _(term, context, erase):
    names = [term.name]
    body = term.body
    while isinstance(body, Lam):
        names.append(body.name)
        body = body.body
    return _wrap(f"\\{' '.join(names)} -> {_pretty(body, TERM, erase)}", TERM, context)


@_pretty.register(App)
def _(term, context, erase):
    return _wrap(f"{_pretty(term.fn, APP, erase)} {_pretty(term.arg, ATOM, erase)}", APP, context)


@_pretty.register(Tensor)
def _(term, context, erase):
    if term.name == ANONYMOUS and isinstance(term.r, Zero):
        return f"<{_pretty(term.first, APP, erase)} * {_pretty(term.second, APP, erase)}>"
    first = _pretty(term.first, TERM, erase)
    second = _pretty(term.second, TERM, erase)
    name = term.name if term.name != ANONYMOUS else fresh_name("x", term.second.free_vars)
    if erase:
        return _wrap(f"({name} : {first}) * {second}", TERM, context)
    return _wrap(f"({name} : {pretty_grade(term.r)} {first}) * {second}", TERM, context)


@_pretty.register(Pair)
def _(term, context, erase):
    return f"<{_pretty(term.first, TERM, erase)}, {_pretty(term.second, TERM, erase)}>"


@_pretty.register(LetPair)
def _(term, context, erase):
    scrutinee = _pretty(term.scrutinee, TERM, erase)
    body = _pretty(term.body, TERM, erase)
    return _wrap(f"case {scrutinee} of <{term.x}, {term.y}> -> {body}", TERM, context)


@_pretty.register(BoxTy)
def _(term, context, erase):
    if erase:
        return _pretty(term.body, context, erase)
    return f"[{pretty_grade(term.s)}] {_pretty(term.body, ATOM, erase)}"


@_pretty.register(BoxIntro)
def _(term, context, erase):
    return f"[{_pretty(term.body, TERM, erase)}]"


@_pretty.register(LetBox)
def _(term, context, erase):
    scrutinee = _pretty(term.scrutinee, TERM, erase)
    body = _pretty(term.body, TERM, erase)
    return _wrap(f"let [{term.name}] = {scrutinee} in {body}", TERM, context)


def pretty_declarations(declarations, semiring=None):
    """Print declarations as a source file."""
    lines = []
    if semiring is not None:
        lines.append(f"%semiring {semiring}")
        lines.append("")
    for decl in declarations:
        lines.append(f"{decl.name} : {pretty(decl.signature)}")
        lines.append(f"{decl.name} = {pretty(decl.body)}")
        lines.append("")
    return "\n".join(lines)
