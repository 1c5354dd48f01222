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
Stratified System F, and the fragment of judgments that embeds into it.

Type parameters are bound at subject grade 0, so they are only ever used in types. Term parameters are bound at
subject-type grade 0 and their types do not return a universe. Under those restrictions a function over Type l is
a System F type abstraction over kind ⋆l.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict

from gerty.conf import settings
from gerty.core.exceptions import OutOfFragment, TypeMismatch, UnboundVariable
from gerty.syntax.pretty import pretty
from gerty.syntax.substitution import fresh_name, rename, subst
from gerty.syntax.terms import ANONYMOUS, App, Lam, Pi, Universe, Var

from .fragments import is_zero, positive_universe, require_quantitative, whnf

logger = settings.logger

SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


@dataclass(frozen=True)
class Star:
    level: int

    def __str__(self):
        return "⋆" + str(self.level).translate(SUBSCRIPTS)


# Types


class SsfType:
    @cached_property
    def free_vars(self):
        return frozenset()


@dataclass(frozen=True)
class TVar(SsfType):
    name: str

    @cached_property
    def free_vars(self):
        return frozenset((self.name,))

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class TArrow(SsfType):
    domain: SsfType
    codomain: SsfType

    @cached_property
    def free_vars(self):
        return self.domain.free_vars | self.codomain.free_vars

    def __str__(self):
        domain = f"({self.domain})" if isinstance(self.domain, (TArrow, Forall)) else str(self.domain)
        return f"{domain} → {self.codomain}"


@dataclass(frozen=True)
class Forall(SsfType):
    name: str
    kind: Star
    body: SsfType

    @cached_property
    def free_vars(self):
        return self.body.free_vars - {self.name}

    def __str__(self):
        return f"∀{self.name}:{self.kind}. {self.body}"


# Terms


class SsfTerm:
    pass


@dataclass(frozen=True)
class FVar(SsfTerm):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class FLam(SsfTerm):
    name: str
    type: SsfType
    body: SsfTerm

    def __str__(self):
        return f"λ{self.name}:{self.type}. {self.body}"


@dataclass(frozen=True)
class TLam(SsfTerm):
    name: str
    kind: Star
    body: SsfTerm

    def __str__(self):
        return f"Λ{self.name}:{self.kind}. {self.body}"


@dataclass(frozen=True)
class FApp(SsfTerm):
    fn: SsfTerm
    arg: SsfTerm

    def __str__(self):
        fn = f"({self.fn})" if isinstance(self.fn, (FLam, TLam)) else str(self.fn)
        arg = str(self.arg) if isinstance(self.arg, FVar) else f"({self.arg})"
        return f"{fn} {arg}"


@dataclass(frozen=True)
class TApp(SsfTerm):
    term: SsfTerm
    type: SsfType

    def __str__(self):
        term = f"({self.term})" if isinstance(self.term, (FLam, TLam)) else str(self.term)
        return f"{term} [{self.type}]"


def type_subst(type_, name, replacement):
    """[replacement/name]type_, renaming ∀-binders that would capture."""
    if isinstance(type_, TVar):
        return replacement if type_.name == name else type_
    if isinstance(type_, TArrow):
        return TArrow(type_subst(type_.domain, name, replacement), type_subst(type_.codomain, name, replacement))
    if type_.name == name or name not in type_.body.free_vars:
        return type_
    binder, body = type_.name, type_.body
    if binder in replacement.free_vars:
        binder = fresh_name(binder, replacement.free_vars | body.free_vars)
        body = type_subst(body, type_.name, TVar(binder))
    return Forall(binder, type_.kind, type_subst(body, name, replacement))


def type_alpha_eq(t1, t2, env1=None, env2=None, depth=0):
    env1 = env1 or {}
    env2 = env2 or {}
    if isinstance(t1, TVar) and isinstance(t2, TVar):
        return env1.get(t1.name, t1.name) == env2.get(t2.name, t2.name)
    if isinstance(t1, TArrow) and isinstance(t2, TArrow):
        return type_alpha_eq(t1.domain, t2.domain, env1, env2, depth) and type_alpha_eq(
            t1.codomain, t2.codomain, env1, env2, depth
        )
    if isinstance(t1, Forall) and isinstance(t2, Forall):
        return t1.kind == t2.kind and type_alpha_eq(
            t1.body, t2.body, {**env1, t1.name: depth}, {**env2, t2.name: depth}, depth + 1
        )
    return False


# The target calculus


def kind_of(kinds, type_):
    """
    The level l of the kind ⋆l of type_. A ∀ over ⋆l lives one level above l.

    :param kinds: Mapping from type variables to levels.
    """
    if isinstance(type_, TVar):
        try:
            return kinds[type_.name]
        except KeyError:
            raise UnboundVariable(f"Type variable '{type_.name}' is not in scope.")
    if isinstance(type_, TArrow):
        return max(kind_of(kinds, type_.domain), kind_of(kinds, type_.codomain))
    return max(type_.kind.level + 1, kind_of({**kinds, type_.name: type_.kind.level}, type_.body))


def ssf_type_of(kinds, types, term):
    """
    :param kinds: Mapping from type variables to levels.
    :param types: Mapping from term variables to their types.
    :raises TypeMismatch: for an ill-typed application or instantiation.
    """
    if isinstance(term, FVar):
        try:
            return types[term.name]
        except KeyError:
            raise UnboundVariable(f"Variable '{term.name}' is not in scope.")
    if isinstance(term, FLam):
        kind_of(kinds, term.type)
        return TArrow(term.type, ssf_type_of(kinds, {**types, term.name: term.type}, term.body))
    if isinstance(term, TLam):
        return Forall(term.name, term.kind, ssf_type_of({**kinds, term.name: term.kind.level}, types, term.body))
    if isinstance(term, FApp):
        fn = ssf_type_of(kinds, types, term.fn)
        arg = ssf_type_of(kinds, types, term.arg)
        if not isinstance(fn, TArrow):
            raise TypeMismatch("a function type", str(fn))
        if not type_alpha_eq(fn.domain, arg):
            raise TypeMismatch(str(fn.domain), str(arg))
        return fn.codomain
    fn = ssf_type_of(kinds, types, term.term)
    if not isinstance(fn, Forall):
        raise TypeMismatch("a ∀ type", str(fn))
    level = kind_of(kinds, term.type)
    if level > fn.kind.level:
        raise TypeMismatch(str(fn.kind), str(Star(level)))
    return type_subst(fn.body, fn.name, term.type)


# The fragment


def _universe(env, term, scope):
    found = whnf(env, term, scope)
    return found if isinstance(found, Universe) else None


def _telescope(env, algebra, type_, scope):
    """Type parameters at subject grade 0, term parameters at subject-type grade 0, no universe returned."""
    found = whnf(env, type_, scope)
    if not isinstance(found, Pi):
        return not positive_universe(env, found, scope=scope)
    inner = tuple(scope) + (found.name,)
    if _universe(env, found.domain, scope) is not None:
        return is_zero(algebra, found.s) and _telescope(env, algebra, found.codomain, inner)
    if not is_zero(algebra, found.r) or positive_universe(env, found.domain, scope=scope):
        return False
    return _telescope(env, algebra, found.domain, scope) and _telescope(env, algebra, found.codomain, inner)


def ssf_predicate(j, env, algebra=None):
    """
    Does j lie in the fragment that embeds into Stratified System F?

    Assumptions of a universe must have subject grade 0. Other assumptions must have subject-type grade 0 and a
    type in which no universe occurs positively. The same holds for the parameters of j's type.

    :raises NotQuantitative: unless the semiring is quantitative.
    """
    require_quantitative(env.semiring)
    algebra = env.algebra if algebra is None else algebra
    names = [name for name, _ in j.context]
    for i, (_, type_) in enumerate(j.context):
        if _universe(env, type_, names[:i]) is not None:
            if not is_zero(algebra, j.subject_grades[i]):
                return False
        elif not is_zero(algebra, j.type_grades[i]) or not _telescope(env, algebra, type_, names[:i]):
            return False
    return _telescope(env, algebra, j.type, names)


class _Translator:
    """
    Type-directed translation. Postulated types and constants met on the way are collected into the target
    contexts.
    """

    def __init__(self, env):
        self.env = env
        self.global_kinds: Dict[str, int] = {}
        self.constants: Dict[str, SsfType] = {}

    def type(self, term, kinds, scope):
        found = whnf(self.env, term, scope)
        if isinstance(found, Var):
            if found.name in kinds:
                return TVar(found.name)
            postulate = self.env.globals.get(found.name)
            if found.name not in scope and postulate is not None and postulate.body is None:
                universe = _universe(self.env, postulate.type, ())
                if universe is not None:
                    self.global_kinds[found.name] = universe.index
                    return TVar(found.name)
        elif isinstance(found, Pi):
            inner = tuple(scope) + (found.name,)
            universe = _universe(self.env, found.domain, scope)
            if universe is not None:
                body = self.type(found.codomain, {**kinds, found.name: universe.index}, inner)
                return Forall(found.name, Star(universe.index), body)
            if found.name == ANONYMOUS or found.name not in found.codomain.free_vars:
                codomain_kinds = {k: v for k, v in kinds.items() if k != found.name}
                return TArrow(self.type(found.domain, kinds, scope), self.type(found.codomain, codomain_kinds, inner))
        raise OutOfFragment(f"'{pretty(term)}' has no counterpart among the types of System F.")

    def check(self, term, type_, kinds, types, scope):
        if not isinstance(term, Lam):
            return self.infer(term, kinds, types, scope)[0]
        pi = whnf(self.env, type_, scope)
        if not isinstance(pi, Pi):
            raise OutOfFragment(f"'{pretty(term)}' is a function but is expected to have type {pretty(type_)}.")
        x = term.name
        codomain = pi.codomain if pi.name in (x, ANONYMOUS) else rename(pi.codomain, pi.name, x)
        inner = tuple(scope) + (x,)
        universe = _universe(self.env, pi.domain, scope)
        if universe is not None:
            types = {k: v for k, v in types.items() if k != x}
            body = self.check(term.body, codomain, {**kinds, x: universe.index}, types, inner)
            return TLam(x, Star(universe.index), body)
        domain = self.type(pi.domain, kinds, scope)
        kinds = {k: v for k, v in kinds.items() if k != x}
        return FLam(x, domain, self.check(term.body, codomain, kinds, {**types, x: pi.domain}, inner))

    def infer(self, term, kinds, types, scope):
        """:return: The translated term and the (graded) type of term."""
        if isinstance(term, Var):
            if term.name in types:
                return FVar(term.name), types[term.name]
            if term.name in kinds:
                raise OutOfFragment(f"Type parameter '{term.name}' is used as a term.")
            found = self.env.globals.get(term.name)
            if found is None or found.body is not None or _universe(self.env, found.type, ()) is not None:
                raise OutOfFragment(f"'{term.name}' is not a variable or postulate of System F.")
            self.constants[term.name] = self.type(found.type, {}, ())
            return FVar(term.name), found.type
        if isinstance(term, App):
            fn, fn_type = self.infer(term.fn, kinds, types, scope)
            pi = whnf(self.env, fn_type, scope)
            if not isinstance(pi, Pi):
                raise OutOfFragment(f"'{pretty(term.fn)}' is not a function.")
            result = subst(pi.codomain, pi.name, term.arg) if pi.name != ANONYMOUS else pi.codomain
            if _universe(self.env, pi.domain, scope) is not None:
                return TApp(fn, self.type(term.arg, kinds, scope)), result
            return FApp(fn, self.check(term.arg, pi.domain, kinds, types, scope)), result
        raise OutOfFragment(f"'{pretty(term)}' has no counterpart among the terms of System F.")


@dataclass
class SsfTranslation:
    term: SsfTerm
    type: SsfType
    kinds: Dict[str, int] = field(default_factory=dict)
    types: Dict[str, SsfType] = field(default_factory=dict)

    def __str__(self):
        return f"{self.term} : {self.type}"


def ssf_translate(j, env, algebra=None):
    """
    Translate a judgment of the System F fragment. Functions over Type l become type abstractions over ⋆l and
    applications to types become instantiations.

    The result is checked by the System F checker against the translated type.

    :raises OutOfFragment: if j is not in the fragment or uses pairs, boxes or definitions in its subject.
    :raises NotQuantitative: unless the semiring is quantitative.
    """
    algebra = env.algebra if algebra is None else algebra
    if not ssf_predicate(j, env, algebra):
        raise OutOfFragment(f"'{pretty(j.subject)} : {pretty(j.type)}' is outside the System F fragment.")
    translator = _Translator(env)
    kinds, types, graded, scope = {}, {}, {}, []
    for name, type_ in j.context:
        universe = _universe(env, type_, scope)
        if universe is not None:
            kinds[name] = universe.index
        else:
            types[name] = translator.type(type_, kinds, scope)
            graded[name] = type_
        scope.append(name)
    type_ = translator.type(j.type, kinds, scope)
    term = translator.check(j.subject, j.type, kinds, graded, scope)
    kinds = {**translator.global_kinds, **kinds}
    types = {**translator.constants, **types}
    found = ssf_type_of(kinds, types, term)
    if not type_alpha_eq(found, type_):
        raise TypeMismatch(str(type_), str(found))
    logger.debug(f"Translated {pretty(j.subject)} to {term} : {type_}.")
    return SsfTranslation(term, type_, kinds, types)
