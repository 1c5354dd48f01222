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
Executable versions of the metatheory: each check builds the judgment a lemma promises from judgments the checker
produced, then asks the checker whether it really holds with exactly those grades.
"""
from dataclasses import dataclass, field
from typing import Optional

from gerty.conf import settings
from gerty.core.exceptions import FuelExhausted, PreconditionViolated, TypeCheckError, UnresolvedMetaVar
from gerty.evaluation.reduction import Fuel, Stepped, normal_form, step
from gerty.grades.expressions import ZERO
from gerty.grades.vectors import contr, exch, ins, scalar_mul, substitute_grading, vec_add
from gerty.syntax.pretty import pretty
from gerty.syntax.substitution import alpha_eq, subst
from gerty.syntax.terms import Universe, Var

logger = settings.logger


@dataclass
class Outcome:
    """The verdict of one check. expected and got are (subject grades, type grades) as carrier values."""

    check: str
    ok: bool
    expected: Optional[tuple] = None
    got: Optional[tuple] = None
    message: str = ""

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return f"{self.check}: ok"
        return f"{self.check}: {self.message or f'expected {self.expected}, got {self.got}'}"


@dataclass
class StructuralReport:
    weakening: Optional[Outcome] = None
    contraction: Optional[Outcome] = None
    exchange: Optional[Outcome] = None
    notes: list = field(default_factory=list)

    @property
    def outcomes(self):
        return [o for o in (self.weakening, self.contraction, self.exchange) if o is not None]

    def __bool__(self):
        return all(self.outcomes)


def _values(algebra, v):
    return tuple(algebra.value(g) for g in v)


def _ground(algebra, v):
    """Replace every grade by its canonical closed form, so the vector survives a new solver run."""
    return tuple(algebra.canonical(algebra.value(g)) for g in v)


def recheck(env, check, context, delta, term, type_, expected, algebra):
    """
    Check term against type_ in the given context and compare the grades with the expected ones.

    :param expected: (subject grades, type grades) in algebra.
    """
    from gerty.checker import Checker, CheckerState, validate_context

    names = [name for name, _ in context]
    types = [t for _, t in context]
    delta = tuple(_ground(algebra, d) for d in delta)
    want = (_values(algebra, expected[0]), _values(algebra, expected[1]))

    bad = validate_context(env, names, types, delta)
    if bad is not None:
        return Outcome(check, False, want, None, f"the context is not well formed at '{names[bad]}'")
    env.begin()
    try:
        result = Checker(env).check(CheckerState(names, types, delta), term, type_)
        env.solver.solve()
        got = (_values(env.algebra, result.subject), _values(env.algebra, result.subject_type))
    except (TypeCheckError, FuelExhausted, UnresolvedMetaVar) as e:
        return Outcome(check, False, want, None, f"'{pretty(term)}' is rejected: {e}")
    if got != want:
        logger.debug(f"{check} failed for {pretty(term)}: expected {want}, got {got}.")
    return Outcome(check, got == want, want, got)


def subst_lemma_check(env, d1, d2, algebra):
    """
    The substitution lemma. From

        (Δ | σ2 | σ1) ⊙ Γ1 ⊢ t : A
        (Δ, σ1, Δ' | σ3, s, σ4 | σ5, r, σ6) ⊙ Γ1, x : A, Γ2 ⊢ t' : B

    the checker must derive

        (Δ, (Δ'\\|Δ| + (Δ'/|Δ|) * σ2) | σ3 + s * σ2, σ4 | σ5 + r * σ2, σ6) ⊙ Γ1, [t/x]Γ2 ⊢ [t/x]t' : [t/x]B.

    :param d1: The derivation (or its conclusion) for t.
    :param d2: The derivation (or its conclusion) for t'.
    :raises PreconditionViolated: if the two judgments do not fit together.
    """
    j1 = getattr(d1, "conclusion", d1)
    j2 = getattr(d2, "conclusion", d2)
    n = len(j1.context)
    if not (j1.sized() and j2.sized()) or len(j2.context) <= n or j2.context[:n] != j1.context:
        raise PreconditionViolated("The second judgment's context must extend the first one's by an assumption.")
    x, a = j2.context[n]
    if not alpha_eq(a, j1.type):
        raise PreconditionViolated(f"'{x}' has type {pretty(a)}, the substituted term has type {pretty(j1.type)}.")
    if _values(algebra, j2.delta[n]) != _values(algebra, j1.type_grades):
        raise PreconditionViolated(f"The grades forming the type of '{x}' differ from the term's type grades.")

    t = j1.subject
    sigma2 = j1.subject_grades
    s, r = j2.subject_grades[n], j2.type_grades[n]
    delta = substitute_grading(j1.delta, j2.delta[n + 1:], sigma2, algebra)
    context = list(j1.context) + [(name, subst(type_, x, t)) for name, type_ in j2.context[n + 1:]]
    subject = vec_add(j2.subject_grades[:n], scalar_mul(s, sigma2, algebra), algebra) + j2.subject_grades[n + 1:]
    type_grades = vec_add(j2.type_grades[:n], scalar_mul(r, sigma2, algebra), algebra) + j2.type_grades[n + 1:]
    return recheck(
        env, "substitution", context, delta, subst(j2.subject, x, t), subst(j2.type, x, t),
        (subject, type_grades), algebra,
    )


def weakening_check(env, j, pi, name, type_, algebra):
    """Insert name : type_ at position pi; every grade of the new assumption is 0."""
    from gerty.checker import Checker, CheckerState

    if name in (n for n, _ in j.context):
        raise PreconditionViolated(f"'{name}' is already in the context.")
    prefix = j.context[:pi]
    env.begin()
    try:
        formed = Checker(env).form(
            CheckerState([n for n, _ in prefix], [t for _, t in prefix], _ground_delta(algebra, j.delta[:pi])),
            type_,
        )
    except TypeCheckError as e:
        raise PreconditionViolated(f"'{pretty(type_)}' is not a type before position {pi}: {e}")
    grades = _ground(env.algebra, formed.grades)
    delta = tuple(j.delta[:pi]) + (grades,) + ins(pi, ZERO, j.delta[pi:])
    context = list(prefix) + [(name, type_)] + list(j.context[pi:])
    expected = (ins(pi, ZERO, (j.subject_grades,))[0], ins(pi, ZERO, (j.type_grades,))[0])
    return recheck(env, "weakening", context, delta, j.subject, j.type, expected, algebra)


def _ground_delta(algebra, delta):
    return tuple(_ground(algebra, d) for d in delta)


def contraction_check(env, j, pi, algebra):
    """Merge the assumptions at pi and pi + 1, which must have the same type, into the one at pi."""
    (x, a), (y, b) = j.context[pi], j.context[pi + 1]
    if not alpha_eq(a, b) or x in b.free_vars:
        raise PreconditionViolated(f"'{x}' and '{y}' do not have the same independent type.")
    merge = Var(x)
    context = list(j.context[:pi + 1]) + [(name, subst(t, y, merge)) for name, t in j.context[pi + 2:]]
    delta = tuple(j.delta[:pi + 1]) + contr(pi, j.delta[pi + 2:], algebra)
    expected = (contr(pi, (j.subject_grades,), algebra)[0], contr(pi, (j.type_grades,), algebra)[0])
    return recheck(
        env, "contraction", context, delta, subst(j.subject, y, merge), subst(j.type, y, merge), expected, algebra
    )


def exchange_check(env, j, pi, algebra):
    """Swap the assumptions at pi and pi + 1. The second's type must not mention the first."""
    (x, a), (y, b) = j.context[pi], j.context[pi + 1]
    if x in b.free_vars:
        raise PreconditionViolated(f"The type of '{y}' depends on '{x}', they cannot be exchanged.")
    context = list(j.context[:pi]) + [(y, b), (x, a)] + list(j.context[pi + 2:])
    delta = tuple(j.delta[:pi]) + (j.delta[pi + 1][:pi], tuple(j.delta[pi]) + (ZERO,)) + exch(pi, j.delta[pi + 2:])

    def swap(v):
        return tuple(v[:pi]) + (v[pi + 1], v[pi]) + tuple(v[pi + 2:])

    return recheck(env, "exchange", context, delta, j.subject, j.type, (swap(j.subject_grades), swap(j.type_grades)),
                   algebra)


def structural_checks(env, derivation, algebra, rng=None):
    """
    Weaken, contract and exchange a judgment wherever the context allows it, and re-check each result.

    Weakening adds an assumption of the first type variable of the context right after it. Contraction and
    exchange use the first adjacent pair of assumptions they apply to.
    """
    import random

    rng = rng or random.Random(settings.SEED)
    j = getattr(derivation, "conclusion", derivation)
    report = StructuralReport()
    names = [name for name, _ in j.context]

    kinds = [i for i, (_, t) in enumerate(j.context) if isinstance(t, Universe)]
    if kinds:
        k = kinds[0]
        pi = rng.randint(k + 1, len(names))
        fresh = "weak"
        while fresh in names:
            fresh += "'"
        report.weakening = weakening_check(env, j, pi, fresh, Var(names[k]), algebra)
    else:
        report.notes.append("no type variable to weaken with")

    for pi in range(len(names) - 1):
        (x, a), (_, b) = j.context[pi], j.context[pi + 1]
        if alpha_eq(a, b) and x not in b.free_vars:
            report.contraction = contraction_check(env, j, pi, algebra)
            break
    else:
        report.notes.append("no adjacent assumptions of the same type")

    for pi in range(len(names) - 1):
        if names[pi] not in j.context[pi + 1][1].free_vars:
            report.exchange = exchange_check(env, j, pi, algebra)
            break
    else:
        report.notes.append("no adjacent independent assumptions")
    return report


def preservation_check(env, derivation, algebra):
    """
    Take one step of the subject and check the reduct at the same type with the same grades. A subject that does
    not step passes.
    """
    j = getattr(derivation, "conclusion", derivation)
    stepped = step(j.subject, env.definitions)
    if not isinstance(stepped, Stepped):
        return Outcome("preservation", True, message="no step")
    return recheck(
        env, "preservation", j.context, j.delta, stepped.term, j.type, (j.subject_grades, j.type_grades), algebra
    )


def agreement_check(env, derivation, algebra):
    """
    The checker, run on the subject and type of a declarative derivation's conclusion, computes the grades the
    derivation concludes.
    """
    j = getattr(derivation, "conclusion", derivation)
    return recheck(env, "agreement", j.context, j.delta, j.subject, j.type, (j.subject_grades, j.type_grades), algebra)


def assumption_check(env, derivation, i, algebra):
    """
    An assumption of a well-formed context is a type: (Δ[:i] | Δ[i] | 0) ⊙ Γ[:i] ⊢ Γ[i] : Type l.
    """
    from gerty.checker import Checker, CheckerState

    j = getattr(derivation, "conclusion", derivation)
    prefix = j.context[:i]
    want = _values(algebra, j.delta[i])
    env.begin()
    try:
        formed = Checker(env).form(
            CheckerState([n for n, _ in prefix], [t for _, t in prefix], _ground_delta(algebra, j.delta[:i])),
            j.context[i][1],
        )
        env.solver.solve()
    except TypeCheckError as e:
        return Outcome("assumption", False, want, None, str(e))
    got = _values(env.algebra, formed.grades)
    return Outcome("assumption", got == want, want, got)


def termination_check(term, fuel=None, definitions=None):
    """Normalise term completely within the fuel."""
    try:
        normal_form(term, Fuel(fuel), definitions)
    except FuelExhausted as e:
        return Outcome("termination", False, message=str(e))
    return Outcome("termination", True)
