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
Default gerty settings. Override these with settings in the module pointed to
by the GERTY_SETTINGS_MODULE environment variable.
"""

####################
# CORE             #
####################
import logging

DEBUG = False
LOGGER = "gerty"
LOGGING_LEVEL = logging.INFO

# Source files are expected to carry this suffix.
SOURCE_SUFFIX = ".gerty"

####################
# GRADES           #
####################

# Built-in grade algebras, by the name used on the command line and in '%semiring' pragmas.
SEMIRINGS = {
    "nat": "gerty.grades.semirings.NATURALS",
    "zero-one": "gerty.grades.semirings.ZERO_ONE",
    "none-one-tons": "gerty.grades.semirings.NONE_ONE_TONS",
    "security": "gerty.grades.semirings.SECURITY",
    "singleton": "gerty.grades.semirings.SINGLETON",
}

DEFAULT_SEMIRING = "nat"

# Number of random samples used when checking the laws of a semiring with an infinite carrier.
SEMIRING_LAW_SAMPLES = 500

####################
# EQUALITY         #
####################

EQUALITY_BACKENDS = {
    "normal": "gerty.solver.syntactic.SyntacticSolver",
    "smt": "gerty.solver.smt.SmtSolver",
}

DEFAULT_EQUALITY = "normal"

# Skip substitutions into codomains whose bound variable is graded 0 at the type level.
OPTIMISE = False

# When eliding a substitution, also perform it and compare both results.
ELISION_DEBUG = False

# External SMT-LIB 2 solver, invoked with SMT_SOLVER_ARGS and fed the script on stdin. The z3 Python
# bindings are used instead when the executable cannot be found.
SMT_SOLVER = "z3"
SMT_SOLVER_ARGS = ("-in",)
SMT_TIMEOUT = 30

####################
# NORMALISATION    #
####################

# Maximum number of reduction steps taken by a single normalisation.
FUEL = 100000

####################
# GENERATORS       #
####################

SEED = 0

####################
# BENCHMARKS       #
####################

BENCH_ARITIES = (3, 4, 5, 6, 7, 8)
BENCH_TRIALS = 10
