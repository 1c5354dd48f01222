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
from .local import *  # noqa

DEBUG = True

# Substituted and elided codomains are compared on every elision while testing.
ELISION_DEBUG = True

SEED = 0
SEMIRING_LAW_SAMPLES = 200
