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
from .programs import fanout_source, gen_fanout
from .runner import BenchConfig, BenchRow, format_table, grade_trace, run_bench, standard_error, write_csv

__all__ = [
    "BenchConfig",
    "BenchRow",
    "fanout_source",
    "format_table",
    "gen_fanout",
    "grade_trace",
    "run_bench",
    "standard_error",
    "write_csv",
]
