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
A derivation checker for the declarative rules. It knows nothing about modes or constraint solving: it looks at
one node at a time and confirms that the conclusion follows from the premises by the node's rule, evaluating every
grade expression in the semiring.
"""
from dataclasses import dataclass
from typing import Optional

from gerty.conf import settings
from gerty.core.exceptions import ForeignLiteral, FuelExhausted, UnresolvedMetaVar
from gerty.evaluation.equality import def_equal, subtype
from gerty.evaluation.reduction import Fuel, normalize
from gerty.grades.expressions import GradeAlgebra, GradeExpr
from gerty.grades.semirings import get_semiring
from gerty.syntax.pretty import pretty
from gerty.syntax.substitution import alpha_eq, rename, subst, subst_many
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

from .judgments import SUBTYPING, TYPING, WF, Derivation

logger = settings.logger


@dataclass
class DerivationReport:
    ok: bool
    node: Optional[Derivation] = None
    reason: str = ""

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "valid"
        return f"invalid at {self.node.rule}: {self.reason}"


class Invalid(Exception):
    pass


def _open(body, name, fresh):
    if name in (fresh, ANONYMOUS):
        return body
    return rename(body, name, fresh)


class Validator:
    def __init__(self, algebra, globals=None, definitions=None, fuel=None):
        self.algebra = algebra
        self.semiring = algebra.semiring
        self.globals = globals
        self.definitions = definitions or {}
        self.fuel = fuel
        self.rules = {
            "Wf-Empty": self.wf_empty,
            "Wf-Ext": self.wf_ext,
            "T-Var": self.t_var,
            "T-Global": self.t_global,
            "T-Type": self.t_type,
            "T-Arrow": self.t_arrow,
            "T-Ten": self.t_ten,
            "T-Box": self.t_box,
            "T-Fun": self.t_fun,
            "T-App": self.t_app,
            "T-Pair": self.t_pair,
            "T-Ten-Cut": self.t_ten_cut,
            "T-Box-I": self.t_box_i,
            "T-Box-E": self.t_box_e,
            "T-Ty-Conv": self.t_ty_conv,
            "ST": self.st,
        }

    # Grades

    def values(self, v):
        """Evaluate a vector. Entries that are already carrier values pass through."""
        return tuple(self.algebra.value(g) if isinstance(g, GradeExpr) else g for g in v)

    def plus(self, *vectors):
        n = max(len(v) for v in vectors)
        total = [self.semiring.zero] * n
        for v in vectors:
            for i, g in enumerate(self.values(v)):
                total[i] = self.semiring.add(total[i], g)
        return tuple(total)

    def times(self, s, v):
        s = self.algebra.value(s)
        return tuple(self.semiring.mul(s, g) for g in self.values(v))

    def same(self, expected, actual, what):
        expected, actual = self.values(expected), self.values(actual)
        if expected != actual:
            raise Invalid(f"{what}: expected {_show(self.semiring, expected)}, got {_show(self.semiring, actual)}")

    def zero(self, v, what):
        self.same((self.semiring.zero,) * len(v), self.values(v), what)

    def grade(self, expected, actual, what):
        if self.algebra.value(expected) != self.algebra.value(actual):
            raise Invalid(
                f"{what}: expected {self.semiring.render(self.algebra.value(expected))}, "
                f"got {self.semiring.render(self.algebra.value(actual))}"
            )

    # Terms and contexts

    def grade_eq(self, a, b):
        return self.algebra.value(a) == self.algebra.value(b)

    def term(self, expected, actual, what):
        if alpha_eq(expected, actual, self.grade_eq):
            return
        if not def_equal(expected, actual, self.definitions, Fuel(self.fuel), self.grade_eq):
            raise Invalid(f"{what}: expected {pretty(expected)}, got {pretty(actual)}")

    def whnf(self, term, former, what):
        found = normalize(term, Fuel(self.fuel), self.definitions)
        if not isinstance(found, former):
            raise Invalid(f"{what}: '{pretty(term)}' is not a {former.__name__}")
        return found

    def premises(self, node, count):
        if len(node.premises) != count:
            raise Invalid(f"expected {count} premises, got {len(node.premises)}")
        return [p.conclusion for p in node.premises]

    def context(self, premise, j, extra=0, form=TYPING):
        """premise's context is j's context followed by extra assumptions."""
        n = len(j.context)
        if premise.form != form:
            raise Invalid(f"premise is a {premise.form} judgment, expected {form}")
        if len(premise.context) != n + extra or premise.context[:n] != j.context:
            raise Invalid("premise context does not extend the conclusion context")
        for i in range(n):
            self.same(j.delta[i], premise.delta[i], f"context grading at {i}")

    def universe(self, premise, what):
        return self.whnf(premise.type, Universe, what).index

    # Rules

    def validate(self, node):
        j = node.conclusion
        if not j.sized():
            raise Invalid("vector sizes do not match the context")
        check = self.rules.get(node.rule)
        if check is None:
            raise Invalid(f"unknown rule '{node.rule}'")
        check(node, j)

    def wf_empty(self, node, j):
        self.premises(node, 0)
        if j.form != WF or j.context:
            raise Invalid("Wf-Empty concludes the empty context")

    def wf_ext(self, node, j):
        wf, formation = self.premises(node, 2)
        if j.form != WF or not j.context:
            raise Invalid("Wf-Ext concludes a non-empty context")
        *prefix, (name, type_) = j.context
        if wf.form != WF or list(wf.context) != prefix:
            raise Invalid("Wf-Ext premise is not the well-formedness of the prefix")
        if list(formation.context) != prefix:
            raise Invalid("the formation premise is not in the prefix context")
        self.term(type_, formation.subject, "formed type")
        self.same(j.delta[-1], formation.subject_grades, "grades of the new assumption")
        self.zero(formation.type_grades, "type grades of a formation")
        self.universe(formation, "formation type")

    def t_var(self, node, j):
        (wf,) = self.premises(node, 1)
        self.context(wf, j, form=WF)
        if not isinstance(j.subject, Var):
            raise Invalid("T-Var concludes a variable")
        names = [name for name, _ in j.context]
        if j.subject.name not in names:
            raise Invalid(f"'{j.subject.name}' is not in the context")
        i = names.index(j.subject.name)
        n = len(names)
        unit = tuple(self.semiring.one if k == i else self.semiring.zero for k in range(n))
        self.same(unit, j.subject_grades, "subject grades")
        self.same(self.values(j.delta[i]) + (self.semiring.zero,) * (n - i), j.type_grades, "type grades")
        self.term(j.context[i][1], j.type, "type")

    def t_global(self, node, j):
        (wf,) = self.premises(node, 1)
        self.context(wf, j, form=WF)
        if not isinstance(j.subject, Var) or any(name == j.subject.name for name, _ in j.context):
            raise Invalid("T-Global concludes a name that is not local")
        self.zero(j.subject_grades, "subject grades")
        self.zero(j.type_grades, "type grades")
        if self.globals is not None:
            global_ = self.globals.get(j.subject.name)
            if global_ is None:
                raise Invalid(f"'{j.subject.name}' is not defined")
            self.term(global_.type, j.type, "type")

    def t_type(self, node, j):
        (wf,) = self.premises(node, 1)
        self.context(wf, j, form=WF)
        if not isinstance(j.subject, Universe):
            raise Invalid("T-Type concludes a universe")
        if self.whnf(j.type, Universe, "type").index != j.subject.index + 1:
            raise Invalid("a universe lives in the next universe")
        self.zero(j.subject_grades, "subject grades")
        self.zero(j.type_grades, "type grades")

    def _former(self, node, j, former, name, r, first, second):
        a, b = self.premises(node, 2)
        if not isinstance(j.subject, former):
            raise Invalid(f"{node.rule} concludes a {former.__name__}")
        n = len(j.context)
        self.context(a, j)
        self.term(first, a.subject, "domain")
        self.zero(a.type_grades, "type grades of the domain")
        self.context(b, j, 1)
        x, bound = b.context[-1]
        self.term(first, bound, "bound type")
        self.same(a.subject_grades, b.delta[-1], "grades of the bound type")
        self.term(_open(second, name, x), b.subject, "codomain")
        self.zero(b.type_grades, "type grades of the codomain")
        self.grade(r, b.subject_grades[-1], f"type grade of '{x}'")
        self.same(self.plus(a.subject_grades, b.subject_grades[:n]), j.subject_grades, "subject grades")
        self.zero(j.type_grades, "type grades")
        level = max(self.universe(a, "domain type"), self.universe(b, "codomain type"))
        if self.whnf(j.type, Universe, "type").index != level:
            raise Invalid("the level is the lub of the component levels")

    def t_arrow(self, node, j):
        t = j.subject
        if not isinstance(t, Pi):
            raise Invalid("T-Arrow concludes a function type")
        self._former(node, j, Pi, t.name, t.r, t.domain, t.codomain)

    def t_ten(self, node, j):
        t = j.subject
        if not isinstance(t, Tensor):
            raise Invalid("T-Ten concludes a tensor type")
        self._former(node, j, Tensor, t.name, t.r, t.first, t.second)

    def t_box(self, node, j):
        (a,) = self.premises(node, 1)
        if not isinstance(j.subject, BoxTy):
            raise Invalid("T-Box concludes a box type")
        self.context(a, j)
        self.term(j.subject.body, a.subject, "boxed type")
        self.same(a.subject_grades, j.subject_grades, "subject grades")
        self.zero(a.type_grades, "type grades of the boxed type")
        self.zero(j.type_grades, "type grades")
        if self.whnf(j.type, Universe, "type").index != self.universe(a, "boxed type"):
            raise Invalid("a box lives at the level of its contents")

    def t_fun(self, node, j):
        a, body = self.premises(node, 2)
        lam = j.subject
        if not isinstance(lam, Lam):
            raise Invalid("T-Fun concludes an abstraction")
        pi = self.whnf(j.type, Pi, "type")
        n = len(j.context)
        self.context(a, j)
        self.term(pi.domain, a.subject, "domain")
        self.zero(a.type_grades, "type grades of the domain")
        self.context(body, j, 1)
        x, bound = body.context[-1]
        self.term(pi.domain, bound, "bound type")
        self.same(a.subject_grades, body.delta[-1], "grades of the bound type")
        self.term(_open(lam.body, lam.name, x), body.subject, "body")
        self.term(_open(pi.codomain, pi.name, x), body.type, "body type")
        self.grade(pi.s, body.subject_grades[n], f"subject grade of '{x}'")
        self.grade(pi.r, body.type_grades[n], f"type grade of '{x}'")
        self.same(body.subject_grades[:n], j.subject_grades, "subject grades")
        self.same(self.plus(a.subject_grades, body.type_grades[:n]), j.type_grades, "type grades")

    def t_app(self, node, j):
        a, b, fn, arg = self.premises(node, 4)
        app = j.subject
        if not isinstance(app, App):
            raise Invalid("T-App concludes an application")
        n = len(j.context)
        self.context(fn, j)
        self.term(app.fn, fn.subject, "function")
        pi = self.whnf(fn.type, Pi, "function type")
        self.context(a, j)
        self.term(pi.domain, a.subject, "domain")
        self.context(b, j, 1)
        x = b.context[-1][0]
        self.same(a.subject_grades, b.delta[-1], "grades of the bound type")
        self.term(_open(pi.codomain, pi.name, x), b.subject, "codomain")
        self.grade(pi.r, b.subject_grades[-1], f"type grade of '{x}'")
        self.same(self.plus(a.subject_grades, b.subject_grades[:n]), fn.type_grades, "type grades of the function")
        self.context(arg, j)
        self.term(app.arg, arg.subject, "argument")
        self.term(pi.domain, arg.type, "argument type")
        self.same(a.subject_grades, arg.type_grades, "type grades of the argument")
        self.same(
            self.plus(fn.subject_grades, self.times(pi.s, arg.subject_grades)), j.subject_grades, "subject grades"
        )
        self.same(
            self.plus(b.subject_grades[:n], self.times(pi.r, arg.subject_grades)), j.type_grades, "type grades"
        )
        self.term(subst(b.subject, x, app.arg), j.type, "type")

    def t_pair(self, node, j):
        a, b, first, second = self.premises(node, 4)
        pair = j.subject
        if not isinstance(pair, Pair):
            raise Invalid("T-Pair concludes a pair")
        n = len(j.context)
        tensor = self.whnf(j.type, Tensor, "type")
        self.context(a, j)
        self.term(tensor.first, a.subject, "first component type")
        self.context(b, j, 1)
        x = b.context[-1][0]
        self.same(a.subject_grades, b.delta[-1], "grades of the bound type")
        self.term(_open(tensor.second, tensor.name, x), b.subject, "second component type")
        self.grade(tensor.r, b.subject_grades[-1], f"type grade of '{x}'")
        self.context(first, j)
        self.term(pair.first, first.subject, "first component")
        self.term(tensor.first, first.type, "first component type")
        self.same(a.subject_grades, first.type_grades, "type grades of the first component")
        self.context(second, j)
        self.term(pair.second, second.subject, "second component")
        self.term(subst(b.subject, x, pair.first), second.type, "second component type")
        self.same(
            self.plus(b.subject_grades[:n], self.times(tensor.r, first.subject_grades)),
            second.type_grades,
            "type grades of the second component",
        )
        self.same(self.plus(first.subject_grades, second.subject_grades), j.subject_grades, "subject grades")
        self.same(self.plus(a.subject_grades, b.subject_grades[:n]), j.type_grades, "type grades")

    def _motive(self, c, j, scrut):
        self.context(c, j, 1)
        z, bound = c.context[-1]
        self.term(scrut.type, bound, "motive variable type")
        self.same(scrut.type_grades, c.delta[-1], "grades of the motive variable type")
        self.zero(c.type_grades, "type grades of the motive")
        self.universe(c, "motive type")
        return z

    def t_ten_cut(self, node, j):
        scrut, c, body = self.premises(node, 3)
        elim = j.subject
        if not isinstance(elim, LetPair):
            raise Invalid("T-Ten-Cut concludes a pair elimination")
        n = len(j.context)
        self.context(scrut, j)
        self.term(elim.scrutinee, scrut.subject, "scrutinee")
        tensor = self.whnf(scrut.type, Tensor, "scrutinee type")
        z = self._motive(c, j, scrut)
        r = c.subject_grades[-1]

        self.context(body, j, 2)
        (x, x_type), (y, y_type) = body.context[n:]
        self.term(tensor.first, x_type, f"type of '{x}'")
        self.term(_open(tensor.second, tensor.name, x), y_type, f"type of '{y}'")
        self.same(self.plus(body.delta[n], body.delta[n + 1][:n]), scrut.type_grades, "grades of the pattern")
        self.grade(tensor.r, body.delta[n + 1][n], f"grade of '{x}' in the type of '{y}'")
        self.term(subst_many(elim.body, {elim.x: Var(x), elim.y: Var(y)}), body.subject, "body")
        self.term(subst(c.subject, z, Pair(Var(x), Var(y))), body.type, "body type")

        s = body.subject_grades[n]
        self.grade(s, body.subject_grades[n + 1], f"subject grade of '{y}'")
        self.grade(r, body.type_grades[n], f"type grade of '{x}'")
        self.grade(r, body.type_grades[n + 1], f"type grade of '{y}'")
        self.same(c.subject_grades[:n], body.type_grades[:n], "motive grades")
        self.same(self.plus(body.subject_grades[:n], self.times(s, scrut.subject_grades)), j.subject_grades,
                  "subject grades")
        self.same(self.plus(body.type_grades[:n], self.times(r, scrut.subject_grades)), j.type_grades,
                  "type grades")
        self.term(subst(c.subject, z, elim.scrutinee), j.type, "type")

    def t_box_i(self, node, j):
        (inner,) = self.premises(node, 1)
        if not isinstance(j.subject, BoxIntro):
            raise Invalid("T-Box-I concludes a box")
        box = self.whnf(j.type, BoxTy, "type")
        self.context(inner, j)
        self.term(j.subject.body, inner.subject, "boxed term")
        self.term(box.body, inner.type, "boxed term type")
        self.same(self.times(box.s, inner.subject_grades), j.subject_grades, "subject grades")
        self.same(inner.type_grades, j.type_grades, "type grades")

    def t_box_e(self, node, j):
        scrut, c, body = self.premises(node, 3)
        elim = j.subject
        if not isinstance(elim, LetBox):
            raise Invalid("T-Box-E concludes an unboxing")
        n = len(j.context)
        self.context(scrut, j)
        self.term(elim.scrutinee, scrut.subject, "scrutinee")
        box = self.whnf(scrut.type, BoxTy, "scrutinee type")
        z = self._motive(c, j, scrut)
        r = c.subject_grades[-1]

        self.context(body, j, 1)
        x, x_type = body.context[n]
        self.term(box.body, x_type, f"type of '{x}'")
        self.same(scrut.type_grades, body.delta[n], f"grades of the type of '{x}'")
        self.term(_open(elim.body, elim.name, x), body.subject, "body")
        self.term(subst(c.subject, z, BoxIntro(Var(x))), body.type, "body type")

        self.grade(box.s, body.subject_grades[n], f"subject grade of '{x}'")
        rs = self.semiring.mul(self.algebra.value(r), self.algebra.value(box.s))
        if self.algebra.value(body.type_grades[n]) != rs:
            raise Invalid(f"type grade of '{x}': expected {self.semiring.render(rs)}")
        self.same(c.subject_grades[:n], body.type_grades[:n], "motive grades")
        self.same(self.plus(scrut.subject_grades, body.subject_grades[:n]), j.subject_grades, "subject grades")
        self.same(self.plus(body.type_grades[:n], self.times(r, scrut.subject_grades)), j.type_grades,
                  "type grades")
        self.term(subst(c.subject, z, elim.scrutinee), j.type, "type")

    def t_ty_conv(self, node, j):
        inner, st = self.premises(node, 2)
        self.context(inner, j)
        self.term(j.subject, inner.subject, "subject")
        self.same(inner.subject_grades, j.subject_grades, "subject grades")
        self.same(inner.type_grades, j.type_grades, "type grades")
        if st.form != SUBTYPING:
            raise Invalid("the second premise of T-Ty-Conv is a subtyping")
        self.term(inner.type, st.subject, "subtype")
        self.term(j.type, st.type, "supertype")

    def st(self, node, j):
        self.premises(node, 0)
        if j.form != SUBTYPING:
            raise Invalid("ST concludes a subtyping")
        if not subtype(j.subject, j.type, self.definitions, Fuel(self.fuel), self.grade_eq):
            raise Invalid(f"'{pretty(j.subject)}' is not a subtype of '{pretty(j.type)}'")


def _show(semiring, values):
    return "(" + ", ".join(semiring.render(v) for v in values) + ")"


def check_derivation(derivation, algebra=None, globals=None, definitions=None, fuel=None):
    """
    Validate every node of a derivation.

    :param algebra: Evaluates the grades, including solved metavariables. Defaults to the default semiring.
    :param globals: Top-level names a T-Global node may refer to. When None their types are not checked.
    :return: A DerivationReport naming the first invalid node in pre-order.
    """
    if algebra is None:
        algebra = GradeAlgebra(get_semiring())
    validator = Validator(algebra, globals, definitions, fuel)
    checked = 0
    for node in derivation.walk():
        try:
            validator.validate(node)
        except (Invalid, UnresolvedMetaVar, ForeignLiteral, FuelExhausted) as e:
            logger.debug(f"Derivation invalid at {node.rule} after {checked} valid node(s): {e}")
            return DerivationReport(False, node, str(e))
        checked += 1
    return DerivationReport(True)
