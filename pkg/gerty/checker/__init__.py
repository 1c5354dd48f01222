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

from .declarations import CheckReport, DeclarationResult, check_declaration, check_declarations
from .rules import Checker
from .state import CheckerState, Environment, GradedType
from .validate import validate_context

__all__ = [
    "CheckReport",
    "Checker",
    "CheckerState",
    "DeclarationResult",
    "Environment",
    "GradedType",
    "check_declaration",
    "check_declarations",
    "validate_context",
]
