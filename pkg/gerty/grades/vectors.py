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
Grade vectors (σ) and context grade vectors (Δ), with the vector operations used by the typing rules and the
structural lemmas.

Vectors are tuples of grade expressions. Inner vectors that are too short for an index are passed through unchanged.
"""
from typing import Tuple

from gerty.core.exceptions import MalformedExchange
from gerty.grades.expressions import ONE, ZERO, GradeAlgebra, GradeExpr
from gerty.grades.semirings import get_semiring

GradeVec = Tuple[GradeExpr, ...]
CtxGradeVec = Tuple[GradeVec, ...]


def _algebra(algebra):
    if algebra is None:
        return GradeAlgebra(get_semiring())
    return algebra


def zero_vec(n):
    return (ZERO,) * n


def unit_vec(n, i):
    """0^i, 1, 0^(n - i - 1)"""
    return zero_vec(i) + (ONE,) + zero_vec(n - i - 1)


def vec_add(a, b, algebra=None):
    """Pointwise sum, right-padding the shorter vector with zeros."""
    algebra = _algebra(algebra)
    n = max(len(a), len(b))
    a = tuple(a) + zero_vec(n - len(a))
    b = tuple(b) + zero_vec(n - len(b))
    return tuple(algebra.add(x, y) for x, y in zip(a, b))


def vec_sum(vectors, n, algebra=None):
    result = zero_vec(n)
    for v in vectors:
        result = vec_add(result, v, algebra)
    return result


def scalar_mul(s, v, algebra=None):
    algebra = _algebra(algebra)
    return tuple(algebra.mul(s, x) for x in v)


def ctx_scale(g, v, algebra=None):
    """(g / ...) * v: one scaled copy of v per element of g."""
    return tuple(scalar_mul(s, v, algebra) for s in g)


def ctx_add(d1, d2, algebra=None):
    """
    Pointwise sum of context grade vectors. When one is shorter it covers the trailing assumptions of the other,
    which is where the inner vectors produced by choose live.
    """
    if len(d1) < len(d2):
        d1, d2 = d2, d1
    offset = len(d1) - len(d2)
    return tuple(
        v if k < offset else vec_add(v, d2[k - offset], algebra) for k, v in enumerate(d1)
    )


def discard(d, i):
    return tuple(v[:i] + v[i + 1:] if len(v) > i else v for v in d)


def choose(d, i):
    return tuple(v[i] for v in d if len(v) > i)


def contr(pi, d, algebra=None):
    """
    Contract the assumptions at pi and pi + 1: Δ\\(π+1) + (Δ/(π+1)) * (0^π, 1).
    """
    return ctx_add(discard(d, pi + 1), ctx_scale(choose(d, pi + 1), unit_vec(pi + 1, pi), algebra), algebra)


def exch(pi, d):
    """
    Swap the grades at pi and pi + 1.

    :raises MalformedExchange: if an inner vector ends between the two positions.
    """
    for v in d:
        if len(v) == pi + 1:
            raise MalformedExchange(
                f"Cannot exchange positions {pi} and {pi + 1}: vector {tuple(map(str, v))} ends between them."
            )
    return tuple(v[:pi] + (v[pi + 1], v[pi]) + v[pi + 2:] if len(v) > pi + 1 else v for v in d)


def ins(pi, s, d):
    return tuple(v[:pi] + (s,) + v[pi:] if len(v) >= pi else v for v in d)


def substitute_grading(delta, delta_prime, sigma, algebra=None):
    """
    Context grading after substituting a term graded sigma for the variable following delta:
    Δ, (Δ'\\|Δ| + (Δ'/|Δ|) * σ).

    :param delta: Grading of the assumptions before the substituted variable.
    :param delta_prime: Grading of the assumptions after it.
    :param sigma: Subject grades of the substituted term, one per assumption of delta.
    """
    n = len(delta)
    return tuple(delta) + ctx_add(discard(delta_prime, n), ctx_scale(choose(delta_prime, n), sigma, algebra), algebra)


def vec_equal(a, b, algebra=None):
    """Pointwise equality of closed vectors of the same length."""
    algebra = _algebra(algebra)
    return len(a) == len(b) and all(algebra.equal(x, y) for x, y in zip(a, b))


def vec_values(v, algebra=None):
    algebra = _algebra(algebra)
    return tuple(algebra.value(x) for x in v)
