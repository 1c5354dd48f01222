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
from gerty.core.exceptions import ImproperlyConfigured, UnboundVariable
from gerty.syntax.terms import universe

from .fragments import closed_judgment
from .prelude import PRELUDE, prelude
from .ssf import SsfTranslation, Star, ssf_predicate, ssf_translate, ssf_type_of
from .stlc import (
    Arrow,
    Base,
    SimpleTermGenerator,
    SimpleTranslation,
    simple_type_of,
    stlc_predicate,
    stlc_simulation_check,
    stlc_translate,
)

TARGETS = {"stlc": stlc_translate, "ssf": ssf_translate}


def translate_declaration(source, name, target, semiring=None, bases=(), **kwargs):
    """
    Check the declarations of source up to and including name, then translate that one.

    :param target: "stlc" or "ssf".
    :param bases: Names postulated as base types in Type 0 before checking, as source files cannot postulate.
    :param kwargs: Passed on to the Environment.
    :raises UnboundVariable: if source declares no such name.
    :raises ImproperlyConfigured: for an unknown target.
    :raises TypeCheckError: if the declaration is rejected.
    """
    from gerty.checker import Environment, check_declarations

    if target not in TARGETS:
        raise ImproperlyConfigured(f"Unknown translation target '{target}'. Choose one of: {', '.join(TARGETS)}.")
    declarations = list(source)
    names = [declaration.name for declaration in declarations]
    if name not in names:
        raise UnboundVariable(f"No declaration named '{name}'.")
    declaration = declarations[names.index(name)]
    env = Environment(semiring=getattr(source, "semiring", None) or semiring, **kwargs)
    for base in bases:
        env.assume(base, universe(0))
    report = check_declarations(declarations[: names.index(name) + 1], env=env)
    result = report[name]
    if not result.ok:
        raise result.error
    return TARGETS[target](closed_judgment(declaration.body, declaration.signature), env)


__all__ = [
    "Arrow",
    "Base",
    "PRELUDE",
    "SimpleTermGenerator",
    "SimpleTranslation",
    "SsfTranslation",
    "Star",
    "TARGETS",
    "closed_judgment",
    "prelude",
    "simple_type_of",
    "ssf_predicate",
    "ssf_translate",
    "ssf_type_of",
    "stlc_predicate",
    "stlc_simulation_check",
    "stlc_translate",
    "translate_declaration",
]
