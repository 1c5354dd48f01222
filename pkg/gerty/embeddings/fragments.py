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
What the STLC and SSF embeddings share: reading grades off a checked judgment and unfolding the types it mentions.
"""
from gerty.core.exceptions import NotQuantitative
from gerty.evaluation.reduction import normalize
from gerty.grades.expressions import ZERO
from gerty.oracle.judgments import Judgment
from gerty.syntax.terms import BoxTy, Pi, Tensor, Universe


def require_quantitative(semiring):
    """
    :raises NotQuantitative: grade 0 only means absence in a quantitative semiring, which both embeddings rely on.
    """
    if not semiring.quantitative:
        raise NotQuantitative(semiring.name)


def is_zero(algebra, grade):
    """True when grade is known to be 0. Unsolved grades are not."""
    return algebra.equal(grade, ZERO) is True


def whnf(env, term, scope=()):
    """Unfold term to weak head normal form, leaving alone the globals shadowed by names in scope."""
    definitions = env.definitions
    if any(name in definitions for name in scope):
        definitions = {k: v for k, v in definitions.items() if k not in scope}
    return normalize(term, env.fuel, definitions)


def closed_judgment(subject, type_):
    """⊢ subject : type_ in the empty context, as for a top-level declaration."""
    return Judgment((), (), (), (), subject, type_)


def positive_universe(env, term, polarity=True, scope=()):
    """
    Does a universe occur positively in term? Domains of function types flip the polarity.
    """
    term = whnf(env, term, scope)
    if isinstance(term, Universe):
        return polarity
    if isinstance(term, Pi):
        inner = tuple(scope) + (term.name,)
        return positive_universe(env, term.domain, not polarity, scope) or positive_universe(
            env, term.codomain, polarity, inner
        )
    if isinstance(term, Tensor):
        inner = tuple(scope) + (term.name,)
        return positive_universe(env, term.first, polarity, scope) or positive_universe(
            env, term.second, polarity, inner
        )
    if isinstance(term, BoxTy):
        return positive_universe(env, term.body, polarity, scope)
    return False
