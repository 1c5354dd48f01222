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
The fan-out programs: fanN uses its argument x n times by passing it n times to the n-ary application combinator
appN. Each use of x substitutes into the remaining type of appN, which is what grade-directed elision saves.
"""
from gerty.syntax.parser import parse_file


def app_source(n):
    xs = [f"x{i}" for i in range(n)]
    params = " -> ".join(f"(x{i} : (1, 0) a)" for i in range(n))
    domains = " -> ".join(f"(y{i}:(1,0) a)" for i in range(n))
    lambdas = " -> ".join("\\" + x for x in xs)
    return (
        f"app{n} : (a : (0, {2 * n}) Type 0) -> (b : (0, 2) Type 0)\n"
        f"-> {params}\n"
        f"-> (f:(1, 0) ({domains} -> b)) -> b\n"
        f"app{n} = \\a -> \\b -> {lambdas} -> \\f -> f {' '.join(xs)}\n"
    )


def fan_source(n):
    domains = " -> ".join(f"(z{i} : (1,0) a)" for i in range(n))
    return (
        f"fan{n} : (a : (0, {n + 1}) Type 0) -> (b : (0, 2) Type 0)\n"
        f"-> (f : (1,0) ({domains} -> b))\n"
        f"-> (x : ({n}, 0) a) -> b\n"
        f"fan{n} = \\a -> \\b -> \\f -> \\x -> app{n} a b {' '.join(['x'] * n)} f\n"
    )


def fanout_source(n):
    """The text of appN followed by fanN."""
    if n < 1:
        raise ValueError(f"Fan-out programs need an arity of at least 1, got {n}.")
    return f"{app_source(n)}\n{fan_source(n)}"


def gen_fanout(n):
    """
    :return: The parsed declarations of appN and fanN.
    """
    return parse_file(fanout_source(n), f"<fan{n}>")
