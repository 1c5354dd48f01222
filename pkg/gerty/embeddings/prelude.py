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
Standard definitions expressible in the core theory, checked under the natural numbers semiring.
"""
from gerty.syntax.parser import parse_file

PRELUDE = """\
-- Graded universal quantification over a family of types: the quantified type may be used once in the family
-- but never computationally.
forall : (f : (.1, .0) ((a : (.1, .0) Type 0) -> Type 0)) -> Type 1
forall = \\f -> (a : (.0, .1) Type 0) -> f a

-- The graded existential, Church encoded.
exists : (f : (.1, .0) ((a : (.1, .0) Type 0) -> Type 0)) -> Type 1
exists = \\f -> (c : (.0, .2) Type 0) -> (k : (.1, .0) ((a : (.0, .1) Type 0) -> (b : (.1, .0) f a) -> c)) -> c

-- Linear functions.
lolli : (a : (.1, .0) Type 0) -> (b : (.1, .0) Type 0) -> Type 0
lolli = \\a b -> (x : (.1, .0) a) -> b

-- Representation independence: a function of this type can only use c by passing it to h.
ri : (a : (.1, .0) Type 0) -> (b : (.1, .0) Type 0) -> Type 1
ri = \\a b -> (g : (.0, .2) Type 0) -> (h : (.1, .0) ((x : (.1, .0) g) -> a)) -> (c : (.1, .0) g) -> b

iso : (a : (.0, .2) Type 0) -> (b : (.0, .2) Type 0) -> (r : (.1, .0) ri a b) -> (x : (.1, .0) a) -> b
iso = \\a b r -> r a (\\y -> y)

isoInv : (a : (.0, .2) Type 0) -> (b : (.0, .2) Type 0) -> (f : (.1, .0) ((x : (.1, .0) a) -> b)) -> ri a b
isoInv = \\a b f -> \\g h c -> f (h c)

-- The graded comonad structure of the box modality.
counit : (a : (.0, .2) Type) -> (z : (.1 , .0) [.1] a) -> a
counit = \\a z -> case z of [y] -> y

comult : (a : (.0, .2) Type) -> (z : (.1 , .0) [.6] a) -> [.2] ([.3] a)
comult = \\a z -> case z of [y] -> [([y])]
"""


def prelude():
    """:return: The prelude declarations in dependency order."""
    return list(parse_file(PRELUDE, "<prelude>"))
