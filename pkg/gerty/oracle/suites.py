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
Seeded self-test suites over generated judgments, shared by the test-suite and `gerty selftest`.
"""
import random
from dataclasses import dataclass, field
from typing import List

from gerty.conf import settings
from gerty.core.exceptions import ImproperlyConfigured, OutOfFragment, SimulationMismatch
from gerty.grades.semirings import builtin_semirings, check_semiring_laws, get_semiring, is_quantitative
from gerty.syntax.terms import Var

from .derivations import check_derivation
from .generators import A, TermGenerator, build_state, gen_derivation
from .metatheory import (
    Outcome,
    agreement_check,
    assumption_check,
    preservation_check,
    structural_checks,
    subst_lemma_check,
    termination_check,
)

logger = settings.logger

SUITES = ("subst", "structural", "preservation", "termination", "derivations", "simulation", "semirings")


@dataclass
class SuiteReport:
    suite: str
    passed: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def __bool__(self):
        return self.ok

    def record(self, outcome, case):
        if outcome:
            self.passed += 1
        else:
            self.failures.append(f"case {case}: {outcome}")

    def __str__(self):
        total = self.passed + len(self.failures)
        lines = [f"{self.suite}: {self.passed}/{total} passed"]
        lines += [f"  {failure}" for failure in self.failures]
        return "\n".join(lines)


def checked_problem(generator, record=True):
    """
    Generate an open problem and check it.

    :return: The environment and the checker's derivation for the problem.
    """
    from gerty.checker import Checker, Environment

    env = Environment(semiring=generator.semiring, record=record)
    checker = Checker(env)
    problem = generator.scenario()
    state = build_state(checker, problem.context)
    result = checker.check(state, problem.term, problem.type)
    env.solver.solve()
    return env, result.derivation


def substitution_case(generator):
    """
    Two judgments for the substitution lemma: t : a in Γ1 = a, b, P, y : a, and t' in Γ1, x : a, Γ2, where Γ2
    holds an assumption whose type P x mentions x.

    :return: The environment and the two derivations.
    """
    from gerty.checker import Checker, Environment
    from gerty.syntax.terms import App

    env = Environment(semiring=generator.semiring, record=True)
    checker = Checker(env)
    gamma1 = generator.header() + [("y", A)]
    gamma2 = [("xb", Var("b")), ("q", App(Var("P"), Var("x")))]
    gamma2 += [(generator.fresh("v"), generator.value_type()) for _ in range(generator.rng.randint(0, 2))]

    state1 = build_state(checker, gamma1)
    d1 = checker.check(state1, generator.term(gamma1, A, 1), A).derivation
    context = gamma1 + [("x", A)] + gamma2
    target = generator.target_type()
    state2 = build_state(checker, context)
    d2 = checker.check(state2, generator.term(context, target), target).derivation
    env.solver.solve()
    return env, d1, d2


def derivation_case(generator, budget=7):
    """
    Build a derivation from the declarative rules, validate it, then check that the algorithmic checker computes its
    grades and re-forms one of its assumptions.
    """
    from gerty.checker import Environment

    derivation, algebra = gen_derivation(budget, generator.semiring, generator.seed)
    verdict = check_derivation(derivation, algebra)
    if not verdict:
        return Outcome("derivation", False, message=str(verdict))
    env = Environment(semiring=generator.semiring)
    outcome = agreement_check(env, derivation, algebra)
    if not outcome:
        return outcome
    j = derivation.conclusion
    return assumption_check(env, derivation, generator.rng.randrange(len(j.context)), algebra)


def simulation_case(seed, steps=10):
    """Reduce a generated simply typed term and its erasure side by side."""
    from gerty.embeddings import SimpleTermGenerator, stlc_simulation_check

    env, j = SimpleTermGenerator(seed).problem()
    try:
        report = stlc_simulation_check(j, env, steps)
    except (SimulationMismatch, OutOfFragment) as e:
        return Outcome("simulation", False, message=str(e))
    return Outcome("simulation", True, message=str(report))


def run_suite(suite, cases=None, seed=None, semiring=None):
    """
    :param suite: One of SUITES.
    :param cases: Number of generated cases (ignored by the semiring suite).
    :raises ImproperlyConfigured: for an unknown suite.
    """
    if suite not in SUITES:
        raise ImproperlyConfigured(f"Unknown self-test suite '{suite}'. Choose one of: {', '.join(SUITES)}.")
    seed = settings.SEED if seed is None else seed
    cases = 100 if cases is None else cases
    report = SuiteReport(suite)

    if suite == "semirings":
        semirings = [get_semiring(semiring)] if semiring else builtin_semirings()
        for s in semirings:
            laws = check_semiring_laws(s, seed=seed)
            report.record(Outcome(f"{s.name} laws", bool(laws), message=str(laws)), s.name)
            expected = s.quantitative
            verdict = is_quantitative(s, seed=seed)
            report.record(
                Outcome(
                    f"{s.name} quantitative",
                    bool(verdict) == expected,
                    message=f"declared quantitative={expected} but the check says {bool(verdict)}: {verdict}",
                ),
                s.name,
            )
        return report

    rng = random.Random(seed)
    for case in range(cases):
        generator = TermGenerator(rng.randrange(2 ** 32), semiring)
        if suite == "subst":
            env, d1, d2 = substitution_case(generator)
            outcome = subst_lemma_check(env, d1, d2, env.algebra)
        elif suite == "termination":
            problem = generator.scenario(depth=generator.rng.randint(1, 5))
            outcome = termination_check(problem.term)
        elif suite == "simulation":
            outcome = simulation_case(generator.seed)
        elif suite == "derivations":
            outcome = derivation_case(generator)
        else:
            env, derivation = checked_problem(generator)
            algebra = env.algebra
            if suite == "structural":
                structural = structural_checks(env, derivation, algebra, generator.rng)
                outcome = Outcome("structural", bool(structural), message="; ".join(map(str, structural.outcomes)))
            else:
                outcome = preservation_check(env, derivation, algebra)
        if not outcome:
            logger.debug(f"{suite} case {case} failed: {outcome}")
        report.record(outcome, case)
    logger.info(f"Self-test '{suite}': {report.passed} passed, {len(report.failures)} failed.")
    return report


__all__ = [
    "SUITES",
    "SuiteReport",
    "run_suite",
    "derivation_case",
    "simulation_case",
    "substitution_case",
    "checked_problem",
]
