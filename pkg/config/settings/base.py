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
Base settings to build other settings files upon.
"""
import logging
import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()


def env_flag(name, default="False"):
    return os.getenv(name, default).strip().lower() in ("1", "y", "yes", "t", "true", "on")


ROOT_DIR = Path(__file__).parents[2]  # (config/settings/base.py - 2 = project root)

# GENERAL
# ------------------------------------------------------------------------------
DEBUG = env_flag("DEBUG")
LOGGING_LEVEL = logging.INFO

# GRADES
# ------------------------------------------------------------------------------
DEFAULT_SEMIRING = os.getenv("GERTY_SEMIRING", "nat")

# EQUALITY
# ------------------------------------------------------------------------------
DEFAULT_EQUALITY = os.getenv("GERTY_EQUALITY", "normal")
OPTIMISE = env_flag("GERTY_OPTIMISE")

# Path (or name on $PATH) of the SMT solver used by the 'smt' equality backend.
SMT_SOLVER = os.getenv("GERTY_SMT_SOLVER", "z3")
SMT_TIMEOUT = int(os.getenv("GERTY_SMT_TIMEOUT", "30"))

# NORMALISATION
# ------------------------------------------------------------------------------
FUEL = int(os.getenv("GERTY_FUEL", "100000"))
