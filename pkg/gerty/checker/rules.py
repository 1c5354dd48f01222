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
The algorithmic typing rules.

`Checker.infer` synthesises the type of variables, universes, type formers, applications, box introductions and
eliminations; `Checker.check` pushes an expected type into λ-abstractions, pairs, boxes and eliminations, and falls
back to inference plus subtyping for everything else. Both return a GradedType carrying the subject and
subject-type grade vectors. Grade obligations go to the environment's solver.
"""
from functools import singledispatchmethod

from gerty.conf import settings
from gerty.core.exceptions import (
    CannotInfer,
    NonZeroTypeUse,
    NotABox,
    NotAFunction,
    NotATensor,
    NotAType,
    TypeMismatch,
    UnboundVariable,
)
from gerty.evaluation.equality import def_equal, subtype
from gerty.evaluation.reduction import Fuel, normalize
from gerty.grades.expressions import ZERO, fresh_metavar
from gerty.grades.vectors import scalar_mul, unit_vec, vec_add, zero_vec
from gerty.oracle.judgments import SUBTYPING, Derivation, Judgment
from gerty.solver.constraints import SUBJECT, SUBJECT_TYPE, Provenance
from gerty.syntax.pretty import pretty
from gerty.syntax.substitution import fresh_name, rename, subst, subst_many
from gerty.syntax.terms import (
    ANONYMOUS,
    App,
    BoxIntro,
    BoxTy,
    Lam,
    LetBox,
    LetPair,
    LSuc,
    Pair,
    Pi,
    Tensor,
    Universe,
    Var,
    level_of,
)

from .state import CheckerState, Formed, GradedType

logger = settings.logger

TYPE_FORMERS = (Pi, Tensor, BoxTy)


class Checker:
    def __init__(self, env):
        self.env = env

    @property
    def algebra(self):
        return self.env.algebra

    @property
    def solver(self):
        return self.env.solver

    def empty(self):
        return CheckerState.empty(record=self.env.record)

    # Grade plumbing

    def add(self, a, b):
        return vec_add(a, b, self.algebra)

    def scale(self, s, v):
        return scalar_mul(s, v, self.algebra)

    def equate(self, expected, actual, rule, variable, stage, span):
        self.solver.equate(expected, actual, Provenance(span, rule, variable, stage))

    def equate_vec(self, expected, actual, state, rule, stage, span):
        for name, e, a in zip(state.names, expected, actual):
            self.equate(e, a, rule, name, stage, span)

    def whnf(self, term):
        return normalize(term, Fuel(self.env.fuel), self.env.definitions)

    # Names

    def fresh(self, state, name, *scopes):
        """name itself unless it would shadow a local or global name, otherwise a primed variant."""
        taken = set(state.names) | self.env.globals.keys()
        if name != ANONYMOUS and name not in taken:
            return name
        for scope in scopes:
            taken |= scope.free_vars
        return fresh_name(name, taken)

    def open(self, state, name, body, *scopes):
        """Pick the context name for a binder and rename the bound variable in body to match."""
        fresh = self.fresh(state, name, body, *scopes)
        if fresh == name or name == ANONYMOUS:
            return fresh, body
        return fresh, rename(body, name, fresh)

    def result(self, rule, state, term, type_, subject, subject_type, premises=()):
        derivation = None
        if self.env.record:
            judgment = Judgment(state.delta, tuple(subject), tuple(subject_type), state.context, term, type_)
            derivation = Derivation(rule, judgment, [p for p in premises if p is not None])
        return GradedType(type_, tuple(subject), tuple(subject_type), derivation)

    # Formation

    def form(self, state, term):
        """
        Check that term is a type, (Δ | σ | 0) ⊙ Γ ⊢ term : Type l.

        :return: The level l and the grades σ.
        :raises NotAType: if term's type is not a universe.
        :raises NonZeroTypeUse: if the type of term uses a variable with a grade known to be non-zero.
        """
        cacheable = isinstance(term, TYPE_FORMERS) and not self.env.record
        if cacheable:
            hit = self.env.cache.get(term, state, self.env)
            if hit is not None:
                return hit

        inferred = self.infer(state, term)
        universe = self.whnf(inferred.type)
        if not isinstance(universe, Universe):
            raise NotAType(f"'{pretty(term)}' is not a type, it has type '{pretty(inferred.type)}'.", term.span)
        for name, grade in zip(state.names, inferred.subject_type):
            if self.algebra.is_zero(grade):
                continue
            if self.algebra.closed(grade):
                raise NonZeroTypeUse(
                    f"The type of '{pretty(term)}' uses '{name}' with grade {self.algebra.render(grade)}, "
                    f"types must be formed at grade 0.",
                    term.span,
                )
            self.equate(ZERO, grade, "T-Type", name, SUBJECT_TYPE, term.span)

        formed = Formed(universe.index, inferred.subject, inferred.derivation)
        if cacheable:
            self.env.cache.put(term, state, self.env, formed)
        return formed

    # Inference

    def infer(self, state, term):
        """
        Synthesise the type of term in state.

        :return: A GradedType.
        :raises CannotInfer: for term formers that only check.
        """
        return self._infer(term, state)

    @singledispatchmethod
    def _infer(self, term, state):
        raise TypeError(f"Not a term: {term!r}.")

    @_infer.register(Var)
    def _(self, term, state):
        n = len(state)
        found = state.lookup(term.name)
        if found is not None:
            i, type_ = found
            subject_type = state.delta[i] + zero_vec(n - i)
            return self.result("T-Var", state, term, type_, unit_vec(n, i), subject_type, [state.wf])
        global_ = self.env.globals.get(term.name)
        if global_ is None:
            raise UnboundVariable(f"Variable not in scope: '{term.name}'.", term.span)
        return self.result("T-Global", state, term, global_.type, zero_vec(n), zero_vec(n), [state.wf])

    @_infer.register(Universe)
    def _(self, term, state):
        n = len(state)
        return self.result("T-Type", state, term, Universe(LSuc(term.level)), zero_vec(n), zero_vec(n), [state.wf])

    def _binder_type(self, rule, state, term, name, r, domain, codomain):
        a = self.form(state, domain)
        x, codomain = self.open(state, name, codomain)
        b = self.form(state.extend(x, domain, a.grades, a.derivation), codomain)
        *sigma2, r_used = b.grades
        self.equate(r, r_used, rule, x, SUBJECT_TYPE, term.span)
        type_ = Universe(level_of(max(a.level, b.level)))
        n = len(state)
        return self.result(rule, state, term, type_, self.add(a.grades, sigma2), zero_vec(n), [a.derivation, b.derivation])

    @_infer.register(Pi)
    def _(self, term, state):
        return self._binder_type("T-Arrow", state, term, term.name, term.r, term.domain, term.codomain)

    @_infer.register(Tensor)
    def _(self, term, state):
        return self._binder_type("T-Ten", state, term, term.name, term.r, term.first, term.second)

    @_infer.register(BoxTy)
    def _(self, term, state):
        a = self.form(state, term.body)
        return self.result(
            "T-Box", state, term, Universe(level_of(a.level)), a.grades, zero_vec(len(state)), [a.derivation]
        )

    @_infer.register(Lam)
    def _(self, term, state):
        raise CannotInfer(
            f"Cannot infer the type of the abstraction '{pretty(term)}', give it a type or apply it.", term.span
        )

    @_infer.register(Pair)
    def _(self, term, state):
        raise CannotInfer(f"Cannot infer the type of the pair '{pretty(term)}', give it a type.", term.span)

    @_infer.register(App)
    def _(self, term, state):
        applications = []
        head = term
        while isinstance(head, App):
            applications.append(head)
            head = head.fn
        applications.reverse()

        if isinstance(head, Lam):
            fn = self._infer_redex(state, head, [app.arg for app in applications])
        else:
            fn = self.infer(state, head)
        for app in applications:
            fn = self.apply(state, app, fn)
        return fn

    def _infer_redex(self, state, head, args):
        """
        Infer a λ-abstraction in head position from its arguments: each argument's inferred type becomes the
        domain of the corresponding binder, and the body's usage of the binders supplies the grades.
        """
        names = []
        body = head
        while isinstance(body, Lam) and len(names) < len(args):
            names.append(body.name)
            body = body.body

        inner = state
        binders = []
        for i, (name, arg) in enumerate(zip(names, args)):
            domain = self.infer(state, arg).type
            a = self.form(state, domain)
            if name in names[i + 1:]:
                x = self.fresh(inner, name, body)
            else:
                x, body = self.open(inner, name, body)
            grades = a.grades + zero_vec(len(inner) - len(state))
            inner = inner.extend(x, domain, grades, a.derivation)
            binders.append((x, domain))

        n = len(state)
        inferred = self.infer(inner, body)
        fn_type = inferred.type
        fn = body
        for i in reversed(range(len(binders))):
            x, domain = binders[i]
            fn_type = Pi(x, inferred.subject[n + i], inferred.subject_type[n + i], domain, fn_type)
            fn = Lam(x, fn, span=head.span)
        logger.debug(f"Inferred {pretty(fn_type)} for the redex head '{pretty(head)}'.")

        checked = self.check(state, fn, fn_type)
        return GradedType(fn_type, checked.subject, checked.subject_type, checked.derivation)

    def apply(self, state, app, fn):
        """
        The application rule, for the function fn already inferred.

        When optimising over a quantitative semiring, a codomain whose binder has type grade 0 is returned
        unchanged instead of substituting the argument into it.
        """
        pi = self.whnf(fn.type)
        if not isinstance(pi, Pi):
            raise NotAFunction(
                f"'{pretty(app.fn)}' is applied to an argument but has type '{pretty(fn.type)}'.", app.span
            )
        a = self.form(state, pi.domain)
        x, codomain = self.open(state, pi.name, pi.codomain)
        b = self.form(state.extend(x, pi.domain, a.grades, a.derivation), codomain)
        *sigma3, r = b.grades
        self.equate(pi.r, r, "T-App", x, SUBJECT_TYPE, app.span)
        self.equate_vec(fn.subject_type, self.add(a.grades, sigma3), state, "T-App", SUBJECT_TYPE, app.span)

        arg = self.check(state, app.arg, pi.domain)
        self.equate_vec(a.grades, arg.subject_type, state, "T-App", SUBJECT_TYPE, app.arg.span)

        subject = self.add(fn.subject, self.scale(pi.s, arg.subject))
        subject_type = self.add(sigma3, self.scale(pi.r, arg.subject))
        type_ = self.instantiate(codomain, x, app.arg, pi.r)
        return self.result(
            "T-App",
            state,
            app,
            type_,
            subject,
            subject_type,
            [a.derivation, b.derivation, fn.derivation, arg.derivation],
        )

    def instantiate(self, codomain, x, arg, r):
        env = self.env
        if env.optimise and env.semiring.quantitative and self.solver.is_zero(r):
            env.metrics.elisions += 1
            if env.elision_debug:
                substituted = subst(codomain, x, arg)
                if not def_equal(codomain, substituted, env.definitions, Fuel(env.fuel)):
                    raise AssertionError(
                        f"Eliding [{pretty(arg)}/{x}] changed the type: {pretty(codomain)} vs {pretty(substituted)}."
                    )
            return codomain
        env.metrics.substitutions += 1
        return subst(codomain, x, arg)

    @_infer.register(BoxIntro)
    def _(self, term, state):
        s = fresh_metavar()
        inner = self.infer(state, term.body)
        return self.result(
            "T-Box-I",
            state,
            term,
            BoxTy(s, inner.type),
            self.scale(s, inner.subject),
            inner.subject_type,
            [inner.derivation],
        )

    @_infer.register(LetPair)
    def _(self, term, state):
        return self.let_pair(state, term)

    @_infer.register(LetBox)
    def _(self, term, state):
        return self.let_box(state, term)

    def _infer_scrutinee(self, state, term):
        """Infer an eliminated term. A literal pair gets a non-dependent tensor built from its components."""
        if not isinstance(term, Pair):
            return self.infer(state, term)
        first = self._infer_scrutinee(state, term.first)
        second = self._infer_scrutinee(state, term.second)
        tensor = Tensor(ANONYMOUS, ZERO, first.type, second.type)
        return self.check(state, term, tensor)

    def _motive(self, state, scrutinee, expected, *scopes):
        """
        Abstract the eliminated variable out of the expected type.

        :return: The motive variable and the motive. The motive only mentions the variable when the scrutinee is a
            variable occurring in expected.
        """
        z = self.fresh(state, "z", expected, *scopes)
        if isinstance(scrutinee, Var) and scrutinee.name in expected.free_vars:
            return z, rename(expected, scrutinee.name, z)
        return z, expected

    def let_pair(self, state, term, expected=None):
        """
        Tensor elimination. Inference needs a body type that does not mention the pattern variables. Checking
        against a type that mentions the scrutinee variable eliminates into that type dependently.
        """
        if term.x == term.y:
            raise CannotInfer(f"Both components of the pattern are named '{term.x}'.", term.span)
        rule = "T-Ten-Cut"
        n = len(state)
        scrut = self._infer_scrutinee(state, term.scrutinee)
        tensor = self.whnf(scrut.type)
        if not isinstance(tensor, Tensor):
            raise NotATensor(
                f"'{pretty(term.scrutinee)}' is taken apart as a pair but has type '{pretty(scrut.type)}'.",
                term.span,
            )
        sigma1, sigma3 = scrut.subject, scrut.subject_type

        a = self.form(state, tensor.first)
        x = self.fresh(state, term.x, term.body, tensor.second)
        ctx = state.extend(x, tensor.first, a.grades, a.derivation)
        second = tensor.second
        if tensor.name not in (x, ANONYMOUS):
            second = rename(second, tensor.name, x)
        b = self.form(ctx, second)
        self.equate(tensor.r, b.grades[-1], rule, x, SUBJECT_TYPE, term.span)
        y = self.fresh(ctx, term.y, term.body)
        ctx = ctx.extend(y, second, b.grades, b.derivation)

        body = term.body
        if (x, y) != (term.x, term.y):
            body = subst_many(body, {term.x: Var(x), term.y: Var(y)})

        if expected is None:
            result = self.infer(ctx, body)
            if {x, y} & result.type.free_vars:
                raise CannotInfer(
                    f"The type '{pretty(result.type)}' of the pair elimination body mentions its pattern "
                    f"variables, give the elimination a type.",
                    term.span,
                )
            z, motive = self.fresh(state, "z", result.type), result.type
            target = result.type
        else:
            z, motive = self._motive(state, term.scrutinee, expected, body)
            instance = motive
            if z in motive.free_vars:
                instance = subst(motive, z, Pair(Var(x), Var(y)))
            result = self.check(ctx, body, instance)
            target = expected

        c = None
        r = ZERO
        if z in motive.free_vars or self.env.record:
            t = self.form(state, scrut.type)
            c = self.form(state.extend(z, scrut.type, sigma3, t.derivation), motive)
            r = c.grades[-1]
            self.equate_vec(c.grades[:n], result.subject_type[:n], state, rule, SUBJECT_TYPE, term.span)

        s = result.subject[n]
        self.equate(s, result.subject[n + 1], rule, y, SUBJECT, term.span)
        self.equate(r, result.subject_type[n], rule, x, SUBJECT_TYPE, term.span)
        self.equate(r, result.subject_type[n + 1], rule, y, SUBJECT_TYPE, term.span)

        subject = self.add(result.subject[:n], self.scale(s, sigma1))
        subject_type = self.add(result.subject_type[:n], self.scale(r, sigma1))
        return self.result(
            rule,
            state,
            term,
            target,
            subject,
            subject_type,
            [scrut.derivation, c.derivation if c else None, result.derivation],
        )

    def let_box(self, state, term, expected=None):
        """Box elimination, with the same treatment of the motive as `let_pair`."""
        rule = "T-Box-E"
        n = len(state)
        scrut = self.infer(state, term.scrutinee)
        box = self.whnf(scrut.type)
        if not isinstance(box, BoxTy):
            raise NotABox(
                f"'{pretty(term.scrutinee)}' is unboxed but has type '{pretty(scrut.type)}'.",
                term.span,
            )
        s = box.s
        sigma1, sigma2 = scrut.subject, scrut.subject_type

        formation = self.form(state, box.body).derivation if self.env.record else None
        x, body = self.open(state, term.name, term.body)
        ctx = state.extend(x, box.body, sigma2, formation)

        if expected is None:
            result = self.infer(ctx, body)
            if x in result.type.free_vars:
                raise CannotInfer(
                    f"The type '{pretty(result.type)}' of the unboxing body mentions '{x}', give the elimination a "
                    f"type.",
                    term.span,
                )
            z, motive = self.fresh(state, "z", result.type), result.type
            target = result.type
        else:
            z, motive = self._motive(state, term.scrutinee, expected, body)
            instance = motive
            if z in motive.free_vars:
                instance = subst(motive, z, BoxIntro(Var(x)))
            result = self.check(ctx, body, instance)
            target = expected

        c = None
        r = ZERO
        if z in motive.free_vars or self.env.record:
            t = self.form(state, scrut.type)
            c = self.form(state.extend(z, scrut.type, sigma2, t.derivation), motive)
            r = c.grades[-1]
            self.equate_vec(c.grades[:n], result.subject_type[:n], state, rule, SUBJECT_TYPE, term.span)

        self.equate(s, result.subject[n], rule, x, SUBJECT, term.span)
        self.equate(self.algebra.mul(r, s), result.subject_type[n], rule, x, SUBJECT_TYPE, term.span)

        subject = self.add(sigma1, result.subject[:n])
        subject_type = self.add(result.subject_type[:n], self.scale(r, sigma1))
        return self.result(
            rule,
            state,
            term,
            target,
            subject,
            subject_type,
            [scrut.derivation, c.derivation if c else None, result.derivation],
        )

    # Checking

    def check(self, state, term, expected):
        """
        Check term against expected.

        :return: The GradedType of term at expected.
        :raises TypeCheckError: if term does not have type expected.
        """
        if isinstance(term, Lam):
            return self._check_lam(state, term, expected)
        if isinstance(term, Pair):
            return self._check_pair(state, term, expected)
        if isinstance(term, BoxIntro):
            return self._check_box(state, term, expected)
        if isinstance(term, LetPair):
            return self.let_pair(state, term, expected)
        if isinstance(term, LetBox):
            return self.let_box(state, term, expected)
        return self._convert(state, term, expected)

    def _expect(self, expected, former, description, term):
        found = self.whnf(expected)
        if not isinstance(found, former):
            raise TypeMismatch(pretty(expected), description, term.span)
        return found

    def _check_lam(self, state, term, expected):
        rule = "T-Fun"
        pi = self._expect(expected, Pi, f"a function '{pretty(term)}'", term)
        a = self.form(state, pi.domain)
        x = self.fresh(state, term.name, term.body, pi.codomain)
        body = term.body if x == term.name else rename(term.body, term.name, x)
        codomain = pi.codomain if pi.name in (x, ANONYMOUS) else rename(pi.codomain, pi.name, x)

        inner = self.check(state.extend(x, pi.domain, a.grades, a.derivation), body, codomain)
        n = len(state)
        variable = term.name
        # Subject grades are reported before type grades.
        self.equate(pi.s, inner.subject[n], rule, variable, SUBJECT, term.span)
        self.equate(pi.r, inner.subject_type[n], rule, variable, SUBJECT_TYPE, term.span)

        return self.result(
            rule,
            state,
            term,
            Pi(x, pi.s, pi.r, pi.domain, codomain, span=pi.span),
            inner.subject[:n],
            self.add(a.grades, inner.subject_type[:n]),
            [a.derivation, inner.derivation],
        )

    def _check_pair(self, state, term, expected):
        rule = "T-Pair"
        tensor = self._expect(expected, Tensor, f"a pair '{pretty(term)}'", term)
        a = self.form(state, tensor.first)
        w, second = self.open(state, tensor.name, tensor.second)
        b = self.form(state.extend(w, tensor.first, a.grades, a.derivation), second)
        *sigma2, r = b.grades
        self.equate(tensor.r, r, rule, w, SUBJECT_TYPE, term.span)

        first = self.check(state, term.first, tensor.first)
        self.equate_vec(a.grades, first.subject_type, state, rule, SUBJECT_TYPE, term.first.span)
        second_type = second if w not in second.free_vars else subst(second, w, term.first)
        rest = self.check(state, term.second, second_type)
        self.equate_vec(
            self.add(sigma2, self.scale(r, first.subject)), rest.subject_type, state, rule, SUBJECT_TYPE,
            term.second.span,
        )
        return self.result(
            rule,
            state,
            term,
            Tensor(w, tensor.r, tensor.first, second, span=tensor.span),
            self.add(first.subject, rest.subject),
            self.add(a.grades, sigma2),
            [a.derivation, b.derivation, first.derivation, rest.derivation],
        )

    def _check_box(self, state, term, expected):
        box = self._expect(expected, BoxTy, f"a box '{pretty(term)}'", term)
        inner = self.check(state, term.body, box.body)
        return self.result(
            "T-Box-I",
            state,
            term,
            box,
            self.scale(box.s, inner.subject),
            inner.subject_type,
            [inner.derivation],
        )

    def _convert(self, state, term, expected):
        inferred = self.infer(state, term)

        def grade_eq(found, stated):
            verdict = self.algebra.equal(stated, found)
            if verdict is None:
                self.equate(stated, found, "T-Ty-Conv", "", SUBJECT, term.span)
                return True
            return verdict

        if not subtype(inferred.type, expected, self.env.definitions, Fuel(self.env.fuel), grade_eq):
            raise TypeMismatch(pretty(expected), pretty(inferred.type), term.span)

        premises = ()
        if self.env.record:
            judgment = Judgment(
                state.delta, inferred.subject_type, (), state.context, inferred.type, expected, SUBTYPING
            )
            premises = [inferred.derivation, Derivation("ST", judgment)]
        return self.result("T-Ty-Conv", state, term, expected, inferred.subject, inferred.subject_type, premises)
