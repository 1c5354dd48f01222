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
The simply typed fragment.

A judgment is simply typed when every subject-type grade and every context grading is 0 and all of its types are
built from postulated base types with arrows whose binders are irrelevant in their codomains. Erasing the grades of
such a judgment gives a term of the simply typed λ-calculus, and call-by-name reduction on both sides proceeds in
lockstep.
"""
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Tuple

from gerty.conf import settings
from gerty.core.exceptions import OutOfFragment, SimulationMismatch, TypeMismatch, UnboundVariable
from gerty.evaluation.reduction import STUCK, step
from gerty.grades.expressions import ONE, ZERO, fresh_metavar, numeral
from gerty.oracle.judgments import Judgment
from gerty.syntax.pretty import pretty
from gerty.syntax.substitution import alpha_eq, fresh_name
from gerty.syntax.terms import ANONYMOUS, App, Lam, Pi, Universe, Var, spine, universe

from .fragments import is_zero, require_quantitative, whnf

logger = settings.logger


class SimpleType:
    pass


@dataclass(frozen=True)
class Base(SimpleType):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Arrow(SimpleType):
    domain: SimpleType
    codomain: SimpleType

    def __str__(self):
        domain = f"({self.domain})" if isinstance(self.domain, Arrow) else str(self.domain)
        return f"{domain} → {self.codomain}"


class SimpleTerm:
    @cached_property
    def free_vars(self):
        return frozenset()


@dataclass(frozen=True)
class SVar(SimpleTerm):
    name: str

    @cached_property
    def free_vars(self):
        return frozenset((self.name,))

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class SLam(SimpleTerm):
    name: str
    type: SimpleType
    body: SimpleTerm

    @cached_property
    def free_vars(self):
        return self.body.free_vars - {self.name}

    def __str__(self):
        return f"λ{self.name}:{self.type}. {self.body}"


@dataclass(frozen=True)
class SApp(SimpleTerm):
    fn: SimpleTerm
    arg: SimpleTerm

    @cached_property
    def free_vars(self):
        return self.fn.free_vars | self.arg.free_vars

    def __str__(self):
        fn = f"({self.fn})" if isinstance(self.fn, SLam) else str(self.fn)
        arg = str(self.arg) if isinstance(self.arg, SVar) else f"({self.arg})"
        return f"{fn} {arg}"


# The target calculus


def simple_type_of(context, term):
    """
    :param context: Mapping from variable names to simple types.
    :raises UnboundVariable: for a variable outside context.
    :raises TypeMismatch: for an ill-typed application.
    """
    if isinstance(term, SVar):
        try:
            return context[term.name]
        except KeyError:
            raise UnboundVariable(f"Variable '{term.name}' is not in scope.")
    if isinstance(term, SLam):
        return Arrow(term.type, simple_type_of({**context, term.name: term.type}, term.body))
    fn = simple_type_of(context, term.fn)
    arg = simple_type_of(context, term.arg)
    if not isinstance(fn, Arrow):
        raise TypeMismatch("a function type", str(fn))
    if fn.domain != arg:
        raise TypeMismatch(str(fn.domain), str(arg))
    return fn.codomain


def simple_subst(term, name, replacement):
    """[replacement/name]term, renaming binders that would capture."""
    if isinstance(term, SVar):
        return replacement if term.name == name else term
    if isinstance(term, SApp):
        return SApp(simple_subst(term.fn, name, replacement), simple_subst(term.arg, name, replacement))
    if term.name == name or name not in term.body.free_vars:
        return term
    binder, body = term.name, term.body
    if binder in replacement.free_vars:
        binder = fresh_name(binder, replacement.free_vars | body.free_vars)
        body = simple_subst(body, term.name, SVar(binder))
    return SLam(binder, term.type, simple_subst(body, name, replacement))


def simple_alpha_eq(t1, t2, env1=None, env2=None, depth=0):
    env1 = env1 or {}
    env2 = env2 or {}
    if isinstance(t1, SVar) and isinstance(t2, SVar):
        return env1.get(t1.name, t1.name) == env2.get(t2.name, t2.name)
    if isinstance(t1, SApp) and isinstance(t2, SApp):
        return simple_alpha_eq(t1.fn, t2.fn, env1, env2, depth) and simple_alpha_eq(t1.arg, t2.arg, env1, env2, depth)
    if isinstance(t1, SLam) and isinstance(t2, SLam):
        if t1.type != t2.type:
            return False
        # Bound names map to their binding depth, which never clashes with a (string) free name.
        return simple_alpha_eq(
            t1.body, t2.body, {**env1, t1.name: depth}, {**env2, t2.name: depth}, depth + 1
        )
    return False


def simple_step(term):
    """One call-by-name step, or None for a value or a neutral term."""
    if isinstance(term, SApp):
        if isinstance(term.fn, SLam):
            return simple_subst(term.fn.body, term.fn.name, term.arg)
        inner = simple_step(term.fn)
        if inner is not None:
            return SApp(inner, term.arg)
    return None


def simple_normal_form(term):
    """The βη-normal form. Simply typed terms always have one."""
    while True:
        reduct = simple_step(term)
        if reduct is None:
            break
        term = reduct
    if isinstance(term, SLam):
        body = simple_normal_form(term.body)
        if isinstance(body, SApp) and body.arg == SVar(term.name) and term.name not in body.fn.free_vars:
            return body.fn
        return SLam(term.name, term.type, body)
    if isinstance(term, SApp):
        return SApp(simple_normal_form(term.fn), simple_normal_form(term.arg))
    return term


def simple_equal(t1, t2):
    """βη-equality."""
    return simple_alpha_eq(simple_normal_form(t1), simple_normal_form(t2))


# The fragment


def simple_type(env, algebra, term, scope=()):
    """
    The simple type a type erases to, or None when it is not one. Base types are postulated globals of a universe.

    :param scope: Names of the local variables, which shadow globals.
    """
    term = whnf(env, term, scope)
    if isinstance(term, Var):
        found = env.globals.get(term.name)
        if term.name in scope or found is None or found.body is not None:
            return None
        return Base(term.name) if isinstance(whnf(env, found.type), Universe) else None
    if isinstance(term, Pi):
        if not is_zero(algebra, term.r) or (term.name != ANONYMOUS and term.name in term.codomain.free_vars):
            return None
        domain = simple_type(env, algebra, term.domain, scope)
        codomain = simple_type(env, algebra, term.codomain, tuple(scope) + (term.name,))
        if domain is None or codomain is None:
            return None
        return Arrow(domain, codomain)
    return None


def stlc_predicate(j, env, algebra=None):
    """
    Is j simply typed: are all subject-type grades and all context gradings 0, with simple types throughout?

    :param env: The checking environment j was produced in.
    :param algebra: Evaluates the grades of j, defaults to the environment's current one.
    :raises NotQuantitative: unless the semiring is quantitative.
    """
    require_quantitative(env.semiring)
    algebra = env.algebra if algebra is None else algebra
    if not all(is_zero(algebra, g) for g in j.type_grades):
        return False
    if not all(is_zero(algebra, g) for row in j.delta for g in row):
        return False
    names = [name for name, _ in j.context]
    for i, (_, type_) in enumerate(j.context):
        if simple_type(env, algebra, type_, names[:i]) is None:
            return False
    return simple_type(env, algebra, j.type, names) is not None


class _Eraser:
    """Type-directed grade erasure. Postulated constants met on the way are collected into the target context."""

    def __init__(self, env, algebra):
        self.env = env
        self.algebra = algebra
        self.constants: Dict[str, SimpleType] = {}

    def type(self, term, scope):
        found = simple_type(self.env, self.algebra, term, tuple(scope))
        if found is None:
            raise OutOfFragment(f"'{pretty(term)}' is not a simple type.")
        return found

    def check(self, term, type_, context):
        if isinstance(term, Lam):
            if not isinstance(type_, Arrow):
                raise OutOfFragment(f"'{pretty(term)}' is a function but is expected to have type {type_}.")
            inner = {**context, term.name: type_.domain}
            return SLam(term.name, type_.domain, self.check(term.body, type_.codomain, inner))
        found, erased = self.infer(term, context)
        if found != type_:
            raise TypeMismatch(str(type_), str(found))
        return erased

    def infer(self, term, context) -> Tuple[SimpleType, SimpleTerm]:
        if isinstance(term, Var):
            if term.name in context:
                return context[term.name], SVar(term.name)
            found = self.env.globals.get(term.name)
            if found is None or found.body is not None:
                raise OutOfFragment(f"'{term.name}' is not a variable or postulate of the simply typed fragment.")
            self.constants[term.name] = self.type(found.type, ())
            return self.constants[term.name], SVar(term.name)
        if isinstance(term, App):
            head, args = spine(term)
            if isinstance(head, Lam):
                return self._redex(head, args, context)
            fn_type, erased = self.infer(head, context)
            return self._apply(fn_type, erased, args, context)
        raise OutOfFragment(f"'{pretty(term)}' lies outside the simply typed fragment.")

    def _redex(self, head, args, context):
        binders = []
        body = head
        while isinstance(body, Lam) and len(binders) < len(args):
            binders.append(body.name)
            body = body.body
        inferred = [self.infer(arg, context) for arg in args[: len(binders)]]
        inner = dict(context)
        for name, (arg_type, _) in zip(binders, inferred):
            inner[name] = arg_type
        body_type, erased = self.infer(body, inner)
        for name, (arg_type, _) in reversed(list(zip(binders, inferred))):
            erased = SLam(name, arg_type, erased)
        for _, arg in inferred:
            erased = SApp(erased, arg)
        return self._apply(body_type, erased, args[len(binders):], context)

    def _apply(self, fn_type, erased, args, context):
        for arg in args:
            if not isinstance(fn_type, Arrow):
                raise TypeMismatch("a function type", str(fn_type))
            erased = SApp(erased, self.check(arg, fn_type.domain, context))
            fn_type = fn_type.codomain
        return fn_type, erased


@dataclass
class SimpleTranslation:
    term: SimpleTerm
    type: SimpleType
    context: Dict[str, SimpleType]
    eraser: _Eraser = field(repr=False, compare=False, default=None)

    def erase(self, term):
        """Erase another term of the same type in the same context."""
        return self.eraser.check(term, self.type, self.context)

    def __str__(self):
        return f"{self.term} : {self.type}"


def stlc_translate(j, env, algebra=None):
    """
    Erase the grades of a simply typed judgment.

    The result is checked by the simply typed checker in the context of the erased assumptions and the postulates
    the term uses.

    :raises OutOfFragment: if j is not simply typed or its subject uses pairs, boxes or definitions.
    :raises NotQuantitative: unless the semiring is quantitative.
    """
    algebra = env.algebra if algebra is None else algebra
    if not stlc_predicate(j, env, algebra):
        raise OutOfFragment(f"'{pretty(j.subject)} : {pretty(j.type)}' is not simply typed.")
    eraser = _Eraser(env, algebra)
    context = {}
    for name, type_ in j.context:
        context[name] = eraser.type(type_, list(context))
    type_ = eraser.type(j.type, list(context))
    term = eraser.check(j.subject, type_, context)
    context = {**eraser.constants, **context}
    found = simple_type_of(context, term)
    if found != type_:
        raise TypeMismatch(str(type_), str(found))
    logger.debug(f"Erased {pretty(j.subject)} to {term} : {type_}.")
    return SimpleTranslation(term, type_, context, eraser)


@dataclass
class SimulationReport:
    steps: int = 0
    trace: List[SimpleTerm] = field(default_factory=list)
    normal: bool = False

    def __str__(self):
        ending = ", normal form reached" if self.normal else ""
        return f"{self.steps} step(s) in lockstep{ending}"


def stlc_simulation_check(j, env, steps, algebra=None):
    """
    Reduce the subject of j and its erasure side by side for up to `steps` steps.

    Every step of the graded term must erase to exactly the step its erasure takes, and every step of the erasure
    must be matched up to βη-equality by a step of the graded term.

    :raises SimulationMismatch: with the number of the first step where the two sides part.
    """
    translation = stlc_translate(j, env, algebra)
    report = SimulationReport(trace=[translation.term])
    term, erased = j.subject, translation.term
    for i in range(1, steps + 1):
        graded = step(term, env.definitions)
        simple = simple_step(erased)
        if graded is STUCK and simple is None:
            report.normal = True
            break
        if graded is STUCK:
            raise SimulationMismatch(i, f"'{erased}' reduces to '{simple}' but '{pretty(term)}' is stuck.")
        expected = translation.erase(graded.term)
        if simple is None:
            raise SimulationMismatch(i, f"'{pretty(term)}' reduces but its erasure '{erased}' is stuck.")
        if not simple_equal(expected, simple):
            raise SimulationMismatch(i, f"'{simple}' is not βη-equal to the erasure '{expected}' of the reduct.")
        if not simple_alpha_eq(expected, simple):
            raise SimulationMismatch(i, f"'{erased}' reduces to '{simple}' but the reduct erases to '{expected}'.")
        term, erased = graded.term, simple
        report.steps = i
        report.trace.append(erased)
    return report


# Generated problems

BASE_A, BASE_B = Var("A"), Var("B")


class SimpleTermGenerator:
    """
    Seeded generator of checked simply typed judgments over two postulated base types A and B.

    Function assumptions are first order, so every argument is a variable, an application or a redex, all of which
    infer. Targets are base types, or a single arrow whose binder grade is left to the checker.
    """

    def __init__(self, seed=None, depth=3):
        self.rng = random.Random(settings.SEED if seed is None else seed)
        self.depth = depth
        self._names = 0

    def fresh(self, prefix):
        self._names += 1
        return f"{prefix}{self._names}"

    def grade(self):
        return numeral(self.rng.choice((0, 1, 1, 2)))

    def context(self):
        return [
            ("x", BASE_A),
            ("y", BASE_B),
            ("x2", BASE_A),
            ("f", Pi("w", ONE, ZERO, BASE_A, BASE_B)),
            ("g", Pi("w", self.grade(), ZERO, BASE_A, BASE_A)),
            ("h", Pi("w", ONE, ZERO, BASE_A, Pi("u", self.grade(), ZERO, BASE_B, BASE_B))),
        ]

    def term(self, context, type_, depth):
        variables = [name for name, t in context if alpha_eq(t, type_)]
        if depth <= 0:
            return Var(self.rng.choice(variables))
        options = [lambda: Var(self.rng.choice(variables))]
        for name, t in context:
            domains = []
            while isinstance(t, Pi):
                domains.append(t.domain)
                t = t.codomain
            if domains and alpha_eq(t, type_):
                options.append(lambda f=name, ds=tuple(domains): self._call(context, f, ds, depth))
        options.append(lambda: self._beta(context, type_, depth))
        options.append(lambda: self._double_beta(context, type_, depth))
        return self.rng.choice(options)()

    def _call(self, context, f, domains, depth):
        term = Var(f)
        for domain in domains:
            term = App(term, self.term(context, domain, depth - 1))
        return term

    def _beta(self, context, type_, depth):
        w, domain = self.fresh("w"), self.rng.choice((BASE_A, BASE_B))
        body = self.term(context + [(w, domain)], type_, depth - 1)
        return App(Lam(w, body), self.term(context, domain, depth - 1))

    def _double_beta(self, context, type_, depth):
        w, v = self.fresh("w"), self.fresh("v")
        first, second = self.rng.choice((BASE_A, BASE_B)), self.rng.choice((BASE_A, BASE_B))
        body = self.term(context + [(w, first), (v, second)], type_, depth - 1)
        head = Lam(w, Lam(v, body))
        return App(App(head, self.term(context, first, depth - 1)), self.term(context, second, depth - 1))

    def problem(self, depth=None):
        """
        :return: The environment (A and B postulated, grades solved) and the judgment the checker derived.
        """
        from gerty.checker import Checker, Environment
        from gerty.oracle.generators import build_state

        depth = self.depth if depth is None else depth
        env = Environment(semiring="nat")
        for name in ("A", "B"):
            env.assume(name, universe(0))
        env.begin()
        checker = Checker(env)
        context = self.context()
        state = build_state(checker, context)
        if self.rng.random() < 0.25:
            domain, codomain = self.rng.choice((BASE_A, BASE_B)), self.rng.choice((BASE_A, BASE_B))
            type_ = Pi(ANONYMOUS, fresh_metavar(), ZERO, domain, codomain)
            w = self.fresh("w")
            term = Lam(w, self.term(context + [(w, domain)], codomain, depth))
        else:
            type_ = self.rng.choice((BASE_A, BASE_B))
            term = self.term(context, type_, depth)
        result = checker.check(state, term, type_)
        env.solver.solve()
        return env, Judgment(state.delta, result.subject, result.subject_type, state.context, term, type_)
