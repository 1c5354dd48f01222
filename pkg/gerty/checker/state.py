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
Checking state: the global environment shared by a run, the local context (Δ; Γ) threaded through the rules, and
the results the rules return.
"""
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from gerty.conf import settings
from gerty.core.exceptions import DuplicateVariable
from gerty.grades.expressions import ZERO, GradeAlgebra
from gerty.grades.semirings import get_semiring
from gerty.grades.vectors import CtxGradeVec, GradeVec
from gerty.oracle.judgments import Derivation, wf_judgment
from gerty.solver.base import make_solver
from gerty.syntax.terms import Term

logger = settings.logger


@dataclass(frozen=True)
class Global:
    """A top-level name. Postulates have no body."""

    name: str
    type: Term
    body: Optional[Term] = None


@dataclass
class GradedType:
    """
    What the rules compute for a term: its type, the grades of its use of each context variable in the term itself
    (subject) and in its type (subject_type), and the derivation when recording.
    """

    type: Term
    subject: GradeVec
    subject_type: GradeVec
    derivation: Optional[Derivation] = None


@dataclass(frozen=True)
class Formed:
    """A type formation result: the universe level and the subject grades of the type."""

    level: int
    grades: GradeVec
    derivation: Optional[Derivation] = None


class CheckerState:
    """
    An immutable local context Γ together with its grading Δ. Δ[i] holds the grades with which the type of the
    i-th variable uses the variables before it.
    """

    __slots__ = ("names", "types", "delta", "index", "wf")

    def __init__(self, names=(), types=(), delta=(), wf=None):
        self.names: Tuple[str, ...] = tuple(names)
        self.types: Tuple[Term, ...] = tuple(types)
        self.delta: CtxGradeVec = tuple(delta)
        self.index: Dict[str, int] = {name: i for i, name in enumerate(self.names)}
        self.wf = wf

    @classmethod
    def empty(cls, record=False):
        return cls(wf=Derivation("Wf-Empty", wf_judgment((), ())) if record else None)

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self.index

    @property
    def context(self):
        return tuple(zip(self.names, self.types))

    def lookup(self, name):
        """
        :return: The position and type of name, or None when it is not bound here.
        """
        i = self.index.get(name)
        if i is None:
            return None
        return i, self.types[i]

    def extend(self, name, type_, grades, formation=None):
        """
        Γ, name : type_ with Δ extended by the grades that form type_.

        :param formation: The formation derivation of type_, needed for the well-formedness derivation when
            recording.
        :raises DuplicateVariable: if name is already bound.
        """
        if name in self.index:
            raise DuplicateVariable(f"Variable '{name}' is already bound in this context.")
        names = self.names + (name,)
        types = self.types + (type_,)
        delta = self.delta + (tuple(grades),)
        wf = None
        if self.wf is not None and formation is not None:
            wf = Derivation("Wf-Ext", wf_judgment(delta, tuple(zip(names, types))), [self.wf, formation])
        return CheckerState(names, types, delta, wf)

    def __repr__(self):
        return f"CheckerState({', '.join(self.names)})"


class FormationCache:
    """
    Memoises the formation of type formers (Π, ⊗ and □ nodes) within one declaration.

    Entries are keyed on the identity of the type node and of the types of its free variables, so a hit needs the
    very same node formed over the same variable types. The node is kept alive alongside its result, which keeps
    its identity from being reused.
    """

    def __init__(self):
        self.entries = {}
        self.hits = 0
        self.misses = 0

    @staticmethod
    def key(term, state, env):
        parts = []
        for name in sorted(term.free_vars):
            found = state.lookup(name)
            if found is not None:
                parts.append((name, id(found[1])))
            elif name in env.globals:
                parts.append((name, id(env.globals[name].type)))
            else:
                return None
        return id(term), tuple(parts)

    def get(self, term, state, env):
        key = self.key(term, state, env)
        if key is None:
            return None
        entry = self.entries.get(key)
        if entry is None:
            self.misses += 1
            return None
        self.hits += 1
        _, level, by_name = entry
        return Formed(level, tuple(by_name.get(name, ZERO) for name in state.names))

    def put(self, term, state, env, formed):
        key = self.key(term, state, env)
        if key is None:
            return
        by_name = {name: grade for name, grade in zip(state.names, formed.grades) if name in term.free_vars}
        self.entries[key] = (term, formed.level, by_name)

    def clear(self):
        self.entries.clear()


@dataclass
class Metrics:
    substitutions: int = 0
    elisions: int = 0


@dataclass
class Environment:
    """
    Everything a checking run shares across declarations: the semiring, the equality backend, the globals checked
    so far and the switches that steer the rules.

    The grade algebra and the solver are per declaration, see `begin`.
    """

    semiring: object = None
    backend: Optional[str] = None
    optimise: Optional[bool] = None
    fuel: Optional[int] = None
    record: bool = False
    elision_debug: Optional[bool] = None
    globals: Dict[str, Global] = field(default_factory=dict)
    metrics: Metrics = field(default_factory=Metrics)

    def __post_init__(self):
        if self.semiring is None or isinstance(self.semiring, str):
            self.semiring = get_semiring(self.semiring)
        if self.backend is None:
            self.backend = settings.DEFAULT_EQUALITY
        if self.optimise is None:
            self.optimise = settings.OPTIMISE
        if self.fuel is None:
            self.fuel = settings.FUEL
        if self.elision_debug is None:
            self.elision_debug = settings.ELISION_DEBUG
        self.cache = FormationCache()
        self.definitions = {name: g.body for name, g in self.globals.items() if g.body is not None}
        self.begin()

    def begin(self):
        """Start a declaration: fresh metavariable assignment, fresh solver, empty formation cache."""
        self.algebra = GradeAlgebra(self.semiring)
        self.solver = make_solver(self.backend, self.semiring, self.algebra)
        self.cache.clear()

    def define(self, name, type_, body=None):
        if name in self.globals:
            raise DuplicateVariable(f"'{name}' is already defined.")
        self.globals[name] = Global(name, type_, body)
        if body is not None:
            self.definitions[name] = body
        logger.debug(f"Added global '{name}'{'' if body is not None else ' (postulate)'}.")

    def assume(self, name, type_):
        """
        Postulate name : type_ after checking that type_ is a type.

        :raises TypeCheckError: if type_ is not well formed.
        """
        from gerty.checker.rules import Checker

        self.begin()
        Checker(self).form(CheckerState.empty(), type_)
        self.solver.solve()
        self.define(name, type_)
