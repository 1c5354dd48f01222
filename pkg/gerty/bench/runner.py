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
Timing of the fan-out programs with and without substitution elision.

Each trial checks appN and fanN from scratch in a new environment. Parsing happens once per arity, outside the
timed region. Base and optimised runs alternate within a trial so that drift affects both alike.
"""
import csv
import math
import statistics
import time
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from gerty.conf import settings
from gerty.core.exceptions import ImproperlyConfigured
from gerty.grades.vectors import vec_values

from .programs import gen_fanout

logger = settings.logger

CSV_COLUMNS = ("arity", "backend", "optimised", "mean_ms", "stderr_ms", "speedup", "accepted")


@dataclass
class BenchConfig:
    """
    :param optimisation: True or False to time one mode only, None to time both in pairs.
    """

    arities: Sequence[int] = field(default_factory=lambda: list(settings.BENCH_ARITIES))
    trials: int = settings.BENCH_TRIALS
    backend: Optional[str] = None
    optimisation: Optional[bool] = None
    semiring: str = "nat"

    def __post_init__(self):
        if self.trials < 1:
            raise ImproperlyConfigured(f"A benchmark needs at least one trial, got {self.trials}.")
        if not self.arities:
            raise ImproperlyConfigured("A benchmark needs at least one arity.")
        if any(n < 1 for n in self.arities):
            raise ImproperlyConfigured(f"Arities must be at least 1, got {list(self.arities)}.")
        if self.backend is None:
            self.backend = settings.DEFAULT_EQUALITY

    @property
    def modes(self):
        return (False, True) if self.optimisation is None else (self.optimisation,)


@dataclass
class BenchRow:
    arity: int
    backend: str
    optimised: bool
    mean_ms: float
    stderr_ms: Optional[float]
    speedup: Optional[float] = None
    accepted: bool = True
    samples: List[float] = field(default_factory=list, repr=False)
    grades: Optional[tuple] = field(default=None, repr=False)

    def as_csv(self):
        return {
            "arity": self.arity,
            "backend": self.backend,
            "optimised": int(self.optimised),
            "mean_ms": f"{self.mean_ms:.2f}",
            "stderr_ms": "" if self.stderr_ms is None else f"{self.stderr_ms:.2f}",
            "speedup": "" if self.speedup is None else f"{self.speedup:.2f}",
            "accepted": int(self.accepted),
        }


def standard_error(samples):
    """The standard error of the mean, None for a single sample."""
    if len(samples) < 2:
        return None
    return statistics.stdev(samples) / math.sqrt(len(samples))


def timed_check(source, backend, optimise, semiring="nat"):
    """
    Check source in a new environment.

    :return: Elapsed milliseconds and the CheckReport.
    """
    from gerty.checker import Environment, check_declarations

    start = time.perf_counter()
    env = Environment(semiring=semiring, backend=backend, optimise=optimise, elision_debug=False)
    report = check_declarations(source, env=env)
    elapsed = (time.perf_counter() - start) * 1000
    return elapsed, report


def grade_trace(source, backend, optimise, semiring="nat"):
    """
    Check source with derivations recorded, untimed.

    :return: Per declaration, its name and the rule, subject grades and subject-type grades of every judgment of its
        formation and checking derivations in pre-order, all grades evaluated. A rejected declaration has None in
        place of its judgments.
    """
    from gerty.checker import Environment, check_declaration

    env = Environment(semiring=semiring, backend=backend, optimise=optimise, record=True, elision_debug=False)
    trace = []
    for declaration in source:
        result = check_declaration(env, declaration)
        if not result.ok:
            trace.append((declaration.name, None))
            continue
        judgments = []
        for derivation in (result.formation, result.derivation):
            for node in derivation.walk():
                j = node.conclusion
                judgments.append(
                    (node.rule, vec_values(j.subject_grades, env.algebra), vec_values(j.type_grades, env.algebra))
                )
        trace.append((declaration.name, tuple(judgments)))
    return tuple(trace)


def run_bench(config):
    """
    :return: One row per arity and mode. Optimised rows carry the speedup over the base row of the same arity.
    :raises SolverUnavailable: under the smt backend when no solver can be started.
    """
    rows = []
    for arity in config.arities:
        source = gen_fanout(arity)
        samples = {mode: [] for mode in config.modes}
        accepted = {mode: True for mode in config.modes}
        for _ in range(config.trials):
            for mode in config.modes:
                elapsed, report = timed_check(source, config.backend, mode, config.semiring)
                samples[mode].append(elapsed)
                if not report.ok:
                    accepted[mode] = False
                    logger.warning(f"fan{arity} was rejected (optimised={mode}): {report.errors[0]}")

        by_mode = {}
        for mode in config.modes:
            row = BenchRow(
                arity,
                config.backend,
                mode,
                statistics.mean(samples[mode]),
                standard_error(samples[mode]),
                accepted=accepted[mode],
                samples=samples[mode],
                grades=grade_trace(source, config.backend, mode, config.semiring),
            )
            by_mode[mode] = row
            rows.append(row)
        if False in by_mode and True in by_mode:
            by_mode[True].speedup = by_mode[False].mean_ms / by_mode[True].mean_ms
            if by_mode[True].grades != by_mode[False].grades:
                logger.warning(f"fan{arity}: the optimised run computed different grades from the base run.")
        logger.info(
            f"Arity {arity} ({config.backend}): "
            + ", ".join(f"{'optimised' if m else 'base'} {r.mean_ms:.2f}ms" for m, r in by_mode.items())
        )
    return rows


def write_csv(rows, stream):
    writer = csv.DictWriter(stream, fieldnames=CSV_COLUMNS)
    writer.writeheader()
    for row in rows:
        writer.writerow(row.as_csv())


def format_table(rows):
    """Rows grouped per arity: base and optimised mean (± standard error), then the speedup."""
    lines = [f"{'arity':>5}  {'mode':<9}  {'mean ms':>10}  {'± se':>8}  {'speedup':>7}"]
    for row in rows:
        se = "-" if row.stderr_ms is None else f"{row.stderr_ms:.2f}"
        speedup = "" if row.speedup is None else f"{row.speedup:.2f}"
        mode = "optimised" if row.optimised else "base"
        flag = "" if row.accepted else "  (rejected)"
        lines.append(f"{row.arity:>5}  {mode:<9}  {row.mean_ms:>10.2f}  {se:>8}  {speedup:>7}{flag}")
    return "\n".join(lines)
