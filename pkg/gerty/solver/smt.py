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
Grade equality through an SMT solver.

All obligations of a declaration are collected and discharged in one SMT-LIB 2 script. Naturals are encoded as
non-negative integers, finite carriers as an enumeration sort with addition and multiplication given by tables.
The script is fed to an external solver process when one is configured and found, otherwise to the z3 bindings.
"""
import itertools
import shutil
import subprocess
from functools import lru_cache

from lark import Lark, Transformer

from gerty.conf import settings
from gerty.core.exceptions import SolverUnavailable, SolverUnknown, Unsatisfiable
from gerty.grades.expressions import Add, MetaVar, Mul, metavars
from gerty.solver.base import GradeSolver
from gerty.solver.constraints import Solution, mismatch

logger = settings.logger

SORT = "Grade"
OPTIONS = "(set-option :produce-models true)\n(set-option :produce-unsat-cores true)\n"


@lru_cache(maxsize=None)
def _sexp_parser():
    return Lark.open_from_package("gerty.solver", "sexp.lark", ("",), parser="lalr")


class _ToPython(Transformer):
    def start(self, children):
        return children

    def list(self, children):
        return children

    def symbol(self, children):
        return str(children[0])

    def string(self, children):
        return str(children[0])[1:-1]


def parse_response(text):
    """Parse solver output into nested lists of strings."""
    return _ToPython().transform(_sexp_parser().parse(text))


class SmtEncoding:
    """SMT-LIB 2 text for one semiring."""

    def __init__(self, semiring):
        self.semiring = semiring

    def constant(self, value):
        if self.semiring.carrier is None:
            return str(value)
        return f"g{self.semiring.carrier.index(value)}"

    def decode(self, text):
        if self.semiring.carrier is None:
            return int(text)
        return self.semiring.carrier[int(text[1:])]

    def preamble(self):
        lines = []
        carrier = self.semiring.carrier
        if carrier is None:
            return lines
        constructors = " ".join(f"(g{i})" for i in range(len(carrier)))
        lines.append(f"(declare-datatypes (({SORT} 0)) (({constructors})))")
        for op, fn in (("gadd", self.semiring.add), ("gmul", self.semiring.mul)):
            table = self.constant(fn(carrier[-1], carrier[-1]))
            for a, b in itertools.product(carrier, repeat=2):
                table = (
                    f"(ite (and (= a {self.constant(a)}) (= b {self.constant(b)})) "
                    f"{self.constant(fn(a, b))} {table})"
                )
            lines.append(f"(define-fun {op} ((a {SORT}) (b {SORT})) {SORT} {table})")
        return lines

    def declare(self, metavar_id):
        if self.semiring.carrier is None:
            return [f"(declare-const m{metavar_id} Int)"], [f"(>= m{metavar_id} 0)"]
        return [f"(declare-const m{metavar_id} {SORT})"], []

    def term(self, expr, algebra):
        if algebra.closed(expr):
            return self.constant(algebra.value(expr))
        if isinstance(expr, MetaVar):
            return f"m{expr.id}"
        if isinstance(expr, Add):
            op = "+" if self.semiring.carrier is None else "gadd"
            return f"({op} {self.term(expr.left, algebra)} {self.term(expr.right, algebra)})"
        if isinstance(expr, Mul):
            op = "*" if self.semiring.carrier is None else "gmul"
            return f"({op} {self.term(expr.left, algebra)} {self.term(expr.right, algebra)})"
        raise TypeError(f"Not a grade expression: {expr!r}.")


class SmtSolver(GradeSolver):
    """
    Defer every obligation to an SMT solver, invoked once per declaration. An 'unknown' answer is a failure.
    """

    name = "smt"

    def __init__(self, semiring, algebra=None):
        super().__init__(semiring, algebra)
        self.encoding = SmtEncoding(semiring)
        self.invocations = 0

    def equate(self, expected, actual, provenance=None):
        self.constraints.append(self.constraint(expected, actual, provenance))
        return True

    def is_zero(self, expr):
        # Grade variables are only solved per declaration, so anything still open cannot be shown to be 0 here.
        return self.algebra.is_zero(expr)

    def script(self, metavariables):
        """
        :return: The SMT-LIB 2 declarations and assertions (no options, no check-sat) and the ids of the declared
        metavariables.
        """
        ids = set(metavariables)
        for c in self.constraints:
            ids |= metavars(c.left) | metavars(c.right)
        ids = sorted(ids - self.algebra.assignment.keys())

        lines = self.encoding.preamble()
        side_conditions = []
        for m in ids:
            declarations, conditions = self.encoding.declare(m)
            lines.extend(declarations)
            side_conditions.extend(conditions)
        lines.extend(f"(assert {condition})" for condition in side_conditions)
        for i, c in enumerate(self.constraints):
            left = self.encoding.term(c.left, self.algebra)
            right = self.encoding.term(c.right, self.algebra)
            lines.append(f"(assert (! (= {left} {right}) :named c{i}))")
        return "\n".join(lines) + "\n", ids

    def solve(self, metavariables=()):
        script, ids = self.script(metavariables)
        self.invocations += 1
        logger.info(
            f"Discharging {len(self.constraints)} grade constraint(s) over {len(ids)} variable(s) with SMT."
        )

        executable = shutil.which(settings.SMT_SOLVER) if settings.SMT_SOLVER else None
        if executable is not None:
            status, payload = self._run_process(executable, script, ids)
        else:
            status, payload = self._run_bindings(script, ids)

        if status == "unknown":
            raise SolverUnknown(f"The SMT solver could not decide {len(self.constraints)} grade constraint(s).")
        if status == "unsat":
            core = sorted(int(name[1:]) for name in payload if name.startswith("c"))
            culprit = self.constraints[core[0]] if core else self.constraints[0]
            if self.algebra.closed(culprit.left) and self.algebra.closed(culprit.right):
                raise mismatch(culprit, self.algebra)
            raise Unsatisfiable(culprit)

        self.algebra.assignment.update(payload)
        self.constraints = []
        self.default_unconstrained(metavariables)
        return Solution(dict(self.algebra.assignment), [])

    def _run_process(self, executable, script, ids):
        try:
            process = subprocess.Popen(
                [executable, *settings.SMT_SOLVER_ARGS],
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                stderr=subprocess.PIPE,
                text=True,
            )
        except OSError as e:
            raise SolverUnavailable(f"Could not start '{executable}': {e}.") from e

        try:
            process.stdin.write(OPTIONS + script + "(check-sat)\n")
            process.stdin.flush()
            status = process.stdout.readline().strip()
            if status == "sat" and ids:
                follow_up = f"(get-value ({' '.join(f'm{m}' for m in ids)}))\n(exit)\n"
            elif status == "unsat":
                follow_up = "(get-unsat-core)\n(exit)\n"
            else:
                follow_up = "(exit)\n"
            output, errors = process.communicate(follow_up, timeout=settings.SMT_TIMEOUT)
        except subprocess.TimeoutExpired:
            process.kill()
            process.communicate()
            return "unknown", None

        logger.debug(f"SMT solver answered '{status}'.")
        if status not in ("sat", "unsat", "unknown"):
            raise SolverUnavailable(f"Unexpected response from '{executable}': {status} {errors.strip()}")
        if status == "sat":
            assignment = {}
            if ids:
                for name, value in parse_response(output)[0]:
                    assignment[int(name[1:])] = self.encoding.decode(value)
            return status, assignment
        if status == "unsat":
            response = parse_response(output)
            return status, response[0] if response else []
        return status, None

    def _run_bindings(self, script, ids):
        try:
            import z3
        except ImportError as e:
            raise SolverUnavailable(
                f"No SMT solver executable '{settings.SMT_SOLVER}' was found and the z3 bindings are not installed."
            ) from e

        solver = z3.Solver()
        solver.set(unsat_core=True)
        solver.set(timeout=int(settings.SMT_TIMEOUT * 1000))

        assertions = z3.parse_smt2_string(script)
        side_conditions = len(assertions) - len(self.constraints)
        for i, assertion in enumerate(assertions):
            if i < side_conditions:
                solver.add(assertion)
            else:
                solver.assert_and_track(assertion, z3.Bool(f"c{i - side_conditions}"))

        result = solver.check()
        logger.debug(f"z3 answered '{result}'.")
        if result == z3.sat:
            model = solver.model()
            values = {decl.name(): model[decl] for decl in model.decls()}
            assignment = {}
            for m in ids:
                value = values.get(f"m{m}")
                if value is None:
                    continue
                assignment[m] = self.encoding.decode(value.as_long() if self.semiring.carrier is None else str(value))
            return "sat", assignment
        if result == z3.unsat:
            return "unsat", [str(c) for c in solver.unsat_core()]
        return "unknown", None
