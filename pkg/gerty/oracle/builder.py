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
Derivations built bottom-up from the declarative rules, independently of the algorithmic checker.

Every rule method takes the derivations of its premises and returns the derivation of the conclusion, with the
grades computed by the rule's own equations. Grades a rule leaves open are read off the premises: the grades of a
function type are the binder's usage in the body, and the grade of an unboxed box is the usage of the unboxed
variable. Premises that do not fit a rule raise PreconditionViolated, and `generate` then tries another rule.
"""
import random

from gerty.conf import settings
from gerty.core.exceptions import PreconditionViolated
from gerty.grades.expressions import ZERO, GradeAlgebra
from gerty.grades.semirings import get_semiring
from gerty.syntax.pretty import pretty
from gerty.syntax.substitution import alpha_eq, fresh_name, rename, subst
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
    universe,
)

from .judgments import SUBTYPING, Derivation, Judgment, wf_judgment

logger = settings.logger


class DerivationBuilder:
    """
    :param semiring: Semiring or semiring name, defaults to settings.DEFAULT_SEMIRING.
    :param seed: Seeds the rule choices of `generate`.
    """

    def __init__(self, semiring=None, seed=None):
        if semiring is None or isinstance(semiring, str):
            semiring = get_semiring(semiring)
        self.semiring = semiring
        self.algebra = GradeAlgebra(semiring)
        self.rng = random.Random(settings.SEED if seed is None else seed)

    # Grades

    def grades(self, values):
        return tuple(self.algebra.canonical(v) for v in values)

    def values(self, v):
        return tuple(self.algebra.value(g) for g in v)

    def zeros(self, n):
        return (ZERO,) * n

    def plus(self, *vectors):
        total = [self.semiring.zero] * len(vectors[0])
        for v in vectors:
            for i, g in enumerate(self.values(v)):
                total[i] = self.semiring.add(total[i], g)
        return self.grades(total)

    def times(self, s, v):
        s = self.algebra.value(s)
        return self.grades(self.semiring.mul(s, g) for g in self.values(v))

    def require(self, expected, actual, what):
        """Fail unless two grade vectors (or single grades) evaluate to the same values."""
        if isinstance(expected, tuple):
            expected, actual = self.values(expected), self.values(actual)
        else:
            expected, actual = self.algebra.value(expected), self.algebra.value(actual)
        if expected != actual:
            raise PreconditionViolated(f"{what}: the rule needs {expected}, the premises give {actual}.")

    # Contexts

    @staticmethod
    def size(wf):
        return len(wf.conclusion.context)

    def judgment(self, wf, subject_grades, type_grades, subject, type_):
        scope = wf.conclusion
        return Judgment(scope.delta, tuple(subject_grades), tuple(type_grades), scope.context, subject, type_)

    def fresh(self, wf, name, *scopes):
        """name itself unless wf binds it, otherwise a primed variant also avoiding the free variables of scopes."""
        taken = {n for n, _ in wf.conclusion.context}
        if name != ANONYMOUS and name not in taken:
            return name
        for scope in scopes:
            taken |= scope.free_vars
        return fresh_name(name, taken)

    def opened(self, wf, name, body):
        """A context name for the binder name over body, and body with the binder renamed to it."""
        x = self.fresh(wf, name, body)
        if name in (x, ANONYMOUS):
            return x, body
        return x, rename(body, name, x)

    def context(self, assumptions):
        """The well-formedness derivation of the assumptions (name, type), each type formed before it is added."""
        wf = self.wf_empty()
        for name, type_ in assumptions:
            wf = self.wf_ext(wf, name, self.form(wf, type_))
        return wf

    # Well-formed contexts

    def wf_empty(self):
        return Derivation("Wf-Empty", wf_judgment((), ()))

    def wf_ext(self, wf, name, formation):
        scope, f = wf.conclusion, formation.conclusion
        if any(n == name for n, _ in scope.context):
            raise PreconditionViolated(f"'{name}' is already bound.")
        if f.context != scope.context or not isinstance(f.type, Universe):
            raise PreconditionViolated(f"'{pretty(f.subject)}' is not formed in the context it extends.")
        j = wf_judgment(scope.delta + (f.subject_grades,), scope.context + ((name, f.subject),))
        return Derivation("Wf-Ext", j, [wf, formation])

    # Formation

    def form(self, wf, type_):
        """A formation derivation for type_, following the formation rule of its head."""
        if isinstance(type_, Universe):
            return self.t_type(wf, type_.index)
        if isinstance(type_, Var):
            return self.t_var(wf, type_.name)
        if isinstance(type_, (Pi, Tensor)):
            return self.t_former(wf, type_)
        if isinstance(type_, BoxTy):
            return self.t_box(wf, type_.s, self.form(wf, type_.body))
        if isinstance(type_, App):
            return self.neutral(wf, type_)
        raise PreconditionViolated(f"No formation rule concludes '{pretty(type_)}'.")

    def neutral(self, wf, term):
        """A variable applied to variables, derived by T-Var and T-App."""
        if isinstance(term, Var):
            return self.t_var(wf, term.name)
        if isinstance(term, App):
            return self.t_app(wf, self.neutral(wf, term.fn), self.neutral(wf, term.arg))
        raise PreconditionViolated(f"'{pretty(term)}' is not a neutral term.")

    def t_type(self, wf, level=0):
        n = self.size(wf)
        j = self.judgment(wf, self.zeros(n), self.zeros(n), universe(level), universe(level + 1))
        return Derivation("T-Type", j, [wf])

    def t_var(self, wf, name):
        scope = wf.conclusion
        names = [n for n, _ in scope.context]
        if name not in names:
            raise PreconditionViolated(f"'{name}' is not in the context.")
        i, n = names.index(name), len(names)
        subject = self.grades(self.semiring.one if k == i else self.semiring.zero for k in range(n))
        type_grades = tuple(scope.delta[i]) + self.zeros(n - i)
        return Derivation("T-Var", self.judgment(wf, subject, type_grades, Var(name), scope.context[i][1]), [wf])

    def t_former(self, wf, type_):
        """T-Arrow and T-Ten. The binder's type grade must be its usage in the formed codomain."""
        if isinstance(type_, Pi):
            rule, first, second = "T-Arrow", type_.domain, type_.codomain
        else:
            rule, first, second = "T-Ten", type_.first, type_.second
        n = self.size(wf)
        a = self.form(wf, first)
        x, second = self.opened(wf, type_.name, second)
        b = self.form(self.wf_ext(wf, x, a), second)
        self.require(type_.r, b.conclusion.subject_grades[-1], f"type grade of '{x}'")
        level = max(a.conclusion.type.index, b.conclusion.type.index)
        subject = self.plus(a.conclusion.subject_grades, b.conclusion.subject_grades[:n])
        return Derivation(rule, self.judgment(wf, subject, self.zeros(n), type_, universe(level)), [a, b])

    def t_box(self, wf, s, a):
        f = a.conclusion
        j = self.judgment(wf, f.subject_grades, self.zeros(self.size(wf)), BoxTy(s, f.subject), f.type)
        return Derivation("T-Box", j, [a])

    # Terms

    def t_fun(self, wf, a, body):
        """T-Fun. The function type carries the binder's subject and type grades from the body."""
        n = self.size(wf)
        b = body.conclusion
        x = b.context[n][0]
        pi = Pi(x, b.subject_grades[n], b.type_grades[n], a.conclusion.subject, b.type)
        type_grades = self.plus(a.conclusion.subject_grades, b.type_grades[:n])
        j = self.judgment(wf, b.subject_grades[:n], type_grades, Lam(x, b.subject), pi)
        return Derivation("T-Fun", j, [a, body])

    def t_app(self, wf, fn, arg):
        n = self.size(wf)
        f, u = fn.conclusion, arg.conclusion
        pi = f.type
        if not isinstance(pi, Pi):
            raise PreconditionViolated(f"'{pretty(f.subject)}' does not have a function type.")
        a = self.form(wf, pi.domain)
        x, codomain = self.opened(wf, pi.name, pi.codomain)
        b = self.form(self.wf_ext(wf, x, a), codomain)
        sigma = b.conclusion.subject_grades
        self.require(pi.r, sigma[-1], f"type grade of '{x}'")
        self.require(self.plus(a.conclusion.subject_grades, sigma[:n]), f.type_grades, "type grades of the function")
        if not alpha_eq(pi.domain, u.type):
            raise PreconditionViolated(f"'{pretty(u.subject)}' is not of type '{pretty(pi.domain)}'.")
        self.require(a.conclusion.subject_grades, u.type_grades, "type grades of the argument")

        subject = self.plus(f.subject_grades, self.times(pi.s, u.subject_grades))
        type_grades = self.plus(sigma[:n], self.times(pi.r, u.subject_grades))
        j = self.judgment(wf, subject, type_grades, App(f.subject, u.subject), subst(codomain, x, u.subject))
        return Derivation("T-App", j, [a, b, fn, arg])

    def t_pair(self, wf, tensor, first, second):
        n = self.size(wf)
        p, q = first.conclusion, second.conclusion
        a = self.form(wf, tensor.first)
        x, second_type = self.opened(wf, tensor.name, tensor.second)
        b = self.form(self.wf_ext(wf, x, a), second_type)
        sigma = b.conclusion.subject_grades
        self.require(tensor.r, sigma[-1], f"type grade of '{x}'")
        self.require(a.conclusion.subject_grades, p.type_grades, "type grades of the first component")
        self.require(
            self.plus(sigma[:n], self.times(tensor.r, p.subject_grades)),
            q.type_grades,
            "type grades of the second component",
        )
        if not alpha_eq(subst(second_type, x, p.subject), q.type):
            raise PreconditionViolated(f"'{pretty(q.subject)}' does not have the second component type.")
        j = self.judgment(
            wf,
            self.plus(p.subject_grades, q.subject_grades),
            self.plus(a.conclusion.subject_grades, sigma[:n]),
            Pair(p.subject, q.subject),
            tensor,
        )
        return Derivation("T-Pair", j, [a, b, first, second])

    def t_box_i(self, wf, s, inner):
        i = inner.conclusion
        j = self.judgment(wf, self.times(s, i.subject_grades), i.type_grades, BoxIntro(i.subject), BoxTy(s, i.type))
        return Derivation("T-Box-I", j, [inner])

    def motive(self, wf, scrut, type_):
        """The formation of the non-dependent motive type_ over a fresh variable of the scrutinee's type."""
        sc = scrut.conclusion
        z = self.fresh(wf, "z", type_)
        t = self.form(wf, sc.type)
        self.require(t.conclusion.subject_grades, sc.type_grades, "grades of the scrutinee type")
        return self.form(self.wf_ext(wf, z, t), type_)

    def t_box_e(self, wf, scrut, body):
        """T-Box-E for a body whose last assumption is the unboxed variable, at the body's type."""
        n = self.size(wf)
        sc, bd = scrut.conclusion, body.conclusion
        box = sc.type
        if not isinstance(box, BoxTy):
            raise PreconditionViolated(f"'{pretty(sc.subject)}' is not a box.")
        x = bd.context[n][0]
        if x in bd.type.free_vars:
            raise PreconditionViolated(f"The type of the body mentions '{x}'.")
        c = self.motive(wf, scrut, bd.type)
        r = c.conclusion.subject_grades[-1]
        self.require(sc.type_grades, bd.delta[n], f"grades of the type of '{x}'")
        self.require(box.s, bd.subject_grades[n], f"subject grade of '{x}'")
        self.require(self.times(r, (box.s,))[0], bd.type_grades[n], f"type grade of '{x}'")
        self.require(c.conclusion.subject_grades[:n], bd.type_grades[:n], "motive grades")

        j = self.judgment(
            wf,
            self.plus(sc.subject_grades, bd.subject_grades[:n]),
            self.plus(bd.type_grades[:n], self.times(r, sc.subject_grades)),
            LetBox(x, sc.subject, bd.subject),
            bd.type,
        )
        return Derivation("T-Box-E", j, [scrut, c, body])

    def t_ten_cut(self, wf, scrut, body):
        """T-Ten-Cut for a body whose last two assumptions are the pattern variables, at the body's type."""
        n = self.size(wf)
        sc, bd = scrut.conclusion, body.conclusion
        if not isinstance(sc.type, Tensor):
            raise PreconditionViolated(f"'{pretty(sc.subject)}' is not a pair.")
        (x, _), (y, _) = bd.context[n:n + 2]
        if {x, y} & bd.type.free_vars:
            raise PreconditionViolated("The type of the body mentions the pattern variables.")
        c = self.motive(wf, scrut, bd.type)
        r = c.conclusion.subject_grades[-1]
        self.require(sc.type_grades, self.plus(bd.delta[n], bd.delta[n + 1][:n]), "grades of the pattern")
        s = bd.subject_grades[n]
        self.require(s, bd.subject_grades[n + 1], f"subject grade of '{y}'")
        self.require(r, bd.type_grades[n], f"type grade of '{x}'")
        self.require(r, bd.type_grades[n + 1], f"type grade of '{y}'")
        self.require(c.conclusion.subject_grades[:n], bd.type_grades[:n], "motive grades")

        j = self.judgment(
            wf,
            self.plus(bd.subject_grades[:n], self.times(s, sc.subject_grades)),
            self.plus(bd.type_grades[:n], self.times(r, sc.subject_grades)),
            LetPair(x, y, sc.subject, bd.subject),
            bd.type,
        )
        return Derivation("T-Ten-Cut", j, [scrut, c, body])

    def t_ty_conv(self, wf, inner, type_):
        i = inner.conclusion
        st = Derivation("ST", Judgment(i.delta, i.type_grades, (), i.context, i.type, type_, SUBTYPING))
        j = self.judgment(wf, i.subject_grades, i.type_grades, i.subject, type_)
        return Derivation("T-Ty-Conv", j, [inner, st])

    # Generation

    def generate(self, wf, type_, depth=2):
        """
        A derivation of some term at type_ in wf's context, built from a rule chosen at random among those whose
        conclusion can have that type. Boxes and tensors are introduced, other types are reached through a variable,
        an application of a function assumption, a conversion or a β-redex for λ, □ or ⊗.

        :raises PreconditionViolated: if no rule applies, e.g. type_ is not inhabited in the context.
        """
        if isinstance(type_, BoxTy):
            return self.t_box_i(wf, type_.s, self.generate(wf, type_.body, depth))
        if isinstance(type_, Tensor):
            first = self.generate(wf, type_.first, depth)
            second_type = type_.second
            if type_.name != ANONYMOUS:
                second_type = subst(second_type, type_.name, first.conclusion.subject)
            return self.t_pair(wf, type_, first, self.generate(wf, second_type, depth))

        context = wf.conclusion.context
        variables = [name for name, t in context if alpha_eq(t, type_)]
        options = []
        if variables:
            options.append(lambda: self.t_var(wf, self.rng.choice(variables)))
        if depth > 0:
            for name, t in context:
                if isinstance(t, Pi) and t.name not in t.codomain.free_vars and alpha_eq(t.codomain, type_):
                    options.append(
                        lambda f=name, d=t.domain: self.t_app(wf, self.t_var(wf, f), self.generate(wf, d, depth - 1))
                    )
            values = [(name, t) for name, t in context if isinstance(t, Var)]
            if values:
                options.append(lambda: self.beta(wf, type_, depth, values))
                options.append(lambda: self.box_redex(wf, type_, depth, values))
                options.append(lambda: self.pair_redex(wf, type_, depth, values))
            options.append(lambda: self.t_ty_conv(wf, self.generate(wf, type_, depth - 1), type_))

        self.rng.shuffle(options)
        for option in options:
            try:
                return option()
            except PreconditionViolated as e:
                logger.debug(f"Rule not applicable at '{pretty(type_)}': {e}")
        raise PreconditionViolated(f"No rule derives a term of type '{pretty(type_)}' here.")

    def beta(self, wf, type_, depth, values):
        """(λw. t) v"""
        v, t = self.rng.choice(values)
        a = self.form(wf, t)
        w = self.fresh(wf, "w")
        body = self.generate(self.wf_ext(wf, w, a), type_, depth - 1)
        return self.t_app(wf, self.t_fun(wf, a, body), self.t_var(wf, v))

    def box_redex(self, wf, type_, depth, values):
        """let [z] = [v] in t, the box graded by z's usage in t."""
        v, t = self.rng.choice(values)
        z = self.fresh(wf, "z")
        body = self.generate(self.wf_ext(wf, z, self.form(wf, t)), type_, depth - 1)
        s = body.conclusion.subject_grades[self.size(wf)]
        return self.t_box_e(wf, self.t_box_i(wf, s, self.t_var(wf, v)), body)

    def pair_redex(self, wf, type_, depth, values):
        """let (x, y) = (v1, v2) in t, which needs x and y used alike in t."""
        (v1, t1), (v2, t2) = self.rng.choice(values), self.rng.choice(values)
        tensor = Tensor(ANONYMOUS, ZERO, t1, t2)
        scrut = self.t_pair(wf, tensor, self.t_var(wf, v1), self.t_var(wf, v2))
        x = self.fresh(wf, "u")
        inner = self.wf_ext(wf, x, self.form(wf, t1))
        y = self.fresh(inner, "u")
        inner = self.wf_ext(inner, y, self.form(inner, t2))
        return self.t_ten_cut(wf, scrut, self.generate(inner, type_, depth - 1))
