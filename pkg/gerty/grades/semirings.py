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
Built-in grade algebras and the checks that classify them.
"""
import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from gerty.conf import settings
from gerty.core.klass import lookup_registered

logger = settings.logger

INFINITY = "∞"


@dataclass(frozen=True)
class Semiring:
    """
    A grade algebra (R, *, 1, +, 0).

    :param carrier: The elements of a finite carrier, or None for the natural numbers.
    :param tokens: Surface spellings of carrier values that are not written as numerals.
    :param quantitative: Whether 0 means semantic non-use. Declared per semiring and checked by `is_quantitative`.
    :param order: Elements of a lattice carrier from bottom to top, for semirings defined by meet and join.
    :param counts_usage: False when the grades are labels (e.g. security levels) rather than amounts of use. Such a
        semiring is not quantitative even when its algebra satisfies the quantitative axioms.
    """

    name: str
    carrier: Optional[Tuple[Any, ...]]
    zero: Any
    one: Any
    add: Callable[[Any, Any], Any] = field(repr=False)
    mul: Callable[[Any, Any], Any] = field(repr=False)
    quantitative: bool
    tokens: Dict[str, Any] = field(default_factory=dict, repr=False, compare=False)
    order: Optional[Tuple[Any, ...]] = None
    counts_usage: bool = True

    @property
    def is_finite(self):
        return self.carrier is not None

    def contains(self, value):
        if self.carrier is None:
            return isinstance(value, int) and not isinstance(value, bool) and value >= 0
        return value in self.carrier

    def from_numeral(self, n):
        """The value of the unary sum 1 + ... + 1 (n times)."""
        value = self.zero
        for _ in range(n):
            value = self.add(value, self.one)
        return value

    def literal(self, token):
        """
        Resolve a non-numeric surface token (e.g. 'Lo', 'Inf').

        :return: The carrier value, or None if this semiring has no such token.
        """
        return self.tokens.get(token)

    def render(self, value):
        """Canonical surface spelling of a carrier value."""
        if value == self.one:
            return ".1"
        if value == self.zero:
            return ".0"
        if isinstance(value, int):
            return f".{value}"
        for token, token_value in self.tokens.items():
            if token_value == value:
                return token
        return str(value)

    def sample(self, rng):
        if self.carrier is not None:
            return rng.choice(self.carrier)
        # Small naturals hit the interesting cases, a few large ones check arbitrary precision.
        return rng.choice((rng.randrange(0, 4), rng.randrange(0, 64), rng.randrange(0, 2 ** 80)))

    def __str__(self):
        return self.name


def _saturating(a, b):
    """Addition on {0, 1, ∞}."""
    if a == 0:
        return b
    if b == 0:
        return a
    return INFINITY


def _saturating_mul(a, b):
    if a == 0 or b == 0:
        return 0
    if a == 1:
        return b
    if b == 1:
        return a
    return INFINITY


def _meet(a, b):
    return "Lo" if "Lo" in (a, b) else "Hi"


def _join(a, b):
    return "Hi" if "Hi" in (a, b) else "Lo"


NATURALS = Semiring(
    name="nat",
    carrier=None,
    zero=0,
    one=1,
    add=lambda a, b: a + b,
    mul=lambda a, b: a * b,
    quantitative=True,
)

ZERO_ONE = Semiring(
    name="zero-one",
    carrier=(0, 1),
    zero=0,
    one=1,
    add=lambda a, b: a | b,
    mul=lambda a, b: a & b,
    quantitative=True,
)

NONE_ONE_TONS = Semiring(
    name="none-one-tons",
    carrier=(0, 1, INFINITY),
    zero=0,
    one=1,
    add=_saturating,
    mul=_saturating_mul,
    quantitative=True,
    tokens={"Inf": INFINITY, INFINITY: INFINITY},
)

# Information flow: 0 = Hi, 1 = Lo, addition is the meet and multiplication the join of Lo <= Hi.
SECURITY = Semiring(
    name="security",
    carrier=("Lo", "Hi"),
    zero="Hi",
    one="Lo",
    add=_meet,
    mul=_join,
    quantitative=False,
    tokens={"Lo": "Lo", "Hi": "Hi"},
    order=("Lo", "Hi"),
    counts_usage=False,
)

SINGLETON = Semiring(
    name="singleton",
    carrier=(0,),
    zero=0,
    one=0,
    add=lambda a, b: 0,
    mul=lambda a, b: 0,
    quantitative=False,
)


def builtin_semirings():
    """
    :return: The built-in semirings, in the order they are documented.
    """
    return [NATURALS, ZERO_ONE, NONE_ONE_TONS, SECURITY, SINGLETON]


def get_semiring(name=None):
    """
    Look up a semiring by name in settings.SEMIRINGS.

    :param name: Semiring name, defaults to settings.DEFAULT_SEMIRING.
    :raises ImproperlyConfigured: for unknown names.
    """
    if name is None:
        name = settings.DEFAULT_SEMIRING
    return lookup_registered(settings.SEMIRINGS, name, "semiring")


@dataclass
class Violation:
    law: str
    witness: Tuple[Any, ...]

    def __str__(self):
        return f"{self.law}: {', '.join(map(str, self.witness))}"


@dataclass
class LawReport:
    semiring: str
    exhaustive: bool
    checked: int
    violations: List[Violation] = field(default_factory=list)

    def __bool__(self):
        return not self.violations

    def __str__(self):
        mode = "exhaustive" if self.exhaustive else f"{self.checked} samples"
        if not self.violations:
            return f"{self.semiring}: all semiring laws hold ({mode})"
        lines = [f"{self.semiring}: {len(self.violations)} violation(s) ({mode})"]
        lines.extend(f"  {v}" for v in self.violations)
        return "\n".join(lines)


def _tuples(semiring, arity, samples, rng):
    if semiring.is_finite:
        return list(itertools.product(semiring.carrier, repeat=arity))
    return [tuple(semiring.sample(rng) for _ in range(arity)) for _ in range(samples)]


def check_semiring_laws(semiring, samples=None, seed=None):
    """
    Verify the semiring laws. Finite carriers are checked exhaustively, the naturals on random samples.

    :param samples: Number of random triples to try for infinite carriers (settings.SEMIRING_LAW_SAMPLES).
    :param seed: Random seed (settings.SEED).
    :return: A LawReport whose violations name the law and carry a witness. Only the first witness of each law is kept.
    """
    samples = settings.SEMIRING_LAW_SAMPLES if samples is None else samples
    if samples < 1:
        raise ValueError("At least one sample is required.")
    rng = random.Random(settings.SEED if seed is None else seed)

    add, mul, zero, one = semiring.add, semiring.mul, semiring.zero, semiring.one
    laws = [
        ("add-commutativity", 2, lambda a, b: add(a, b) == add(b, a)),
        ("add-associativity", 3, lambda a, b, c: add(add(a, b), c) == add(a, add(b, c))),
        ("add-unit", 1, lambda a: add(zero, a) == a and add(a, zero) == a),
        ("mul-associativity", 3, lambda a, b, c: mul(mul(a, b), c) == mul(a, mul(b, c))),
        ("mul-unit", 1, lambda a: mul(one, a) == a and mul(a, one) == a),
        ("left-distributivity", 3, lambda a, b, c: mul(a, add(b, c)) == add(mul(a, b), mul(a, c))),
        ("right-distributivity", 3, lambda a, b, c: mul(add(a, b), c) == add(mul(a, c), mul(b, c))),
        ("zero-absorption", 1, lambda a: mul(zero, a) == zero and mul(a, zero) == zero),
        ("closure", 2, lambda a, b: semiring.contains(add(a, b)) and semiring.contains(mul(a, b))),
    ]

    report = LawReport(semiring.name, exhaustive=semiring.is_finite, checked=0)
    for law, arity, holds in laws:
        for witness in _tuples(semiring, arity, samples, rng):
            report.checked += 1
            if not holds(*witness):
                report.violations.append(Violation(law, witness))
                break

    logger.debug(f"Checked {report.checked} law instance(s) for '{semiring.name}'.")
    return report


@dataclass
class QuantitativeReport:
    """
    The verdicts on the three quantitative axioms, plus the semiring's `counts_usage` flag. Truthy only when all
    axioms hold and the semiring counts usage.
    """

    semiring: str
    axioms: Dict[str, bool]
    counts_usage: bool = True
    witnesses: Dict[str, Tuple[Any, ...]] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    def __bool__(self):
        return self.counts_usage and all(self.axioms.values())

    @property
    def failing(self):
        """The failing axioms, in the order they are checked."""
        return [axiom for axiom, holds in self.axioms.items() if not holds]

    def __str__(self):
        verdict = "quantitative" if self else "not quantitative"
        lines = [f"{self.semiring}: {verdict}"]
        for axiom, holds in self.axioms.items():
            witness = self.witnesses.get(axiom)
            suffix = f" (witness: {', '.join(map(str, witness))})" if witness else ""
            lines.append(f"  {axiom}: {'ok' if holds else 'fails'}{suffix}")
        if not self.counts_usage:
            lines.append("  grades do not count usage")
        lines.extend(f"  {note}" for note in self.notes)
        return "\n".join(lines)


def is_quantitative(semiring, samples=None, seed=None):
    """
    Decide whether 0 means semantic non-use by checking the axioms 1 != 0 (zero-unique), r + s = 0 implies
    r = s = 0 (positivity) and r * s = 0 implies r = 0 or s = 0 (zero-product). Finite carriers are checked
    exhaustively and the naturals by sampling. A semiring declared with counts_usage=False is reported as not
    quantitative whatever the axioms say.

    :return: A QuantitativeReport, truthy when the semiring is quantitative.
    """
    samples = settings.SEMIRING_LAW_SAMPLES if samples is None else samples
    rng = random.Random(settings.SEED if seed is None else seed)
    zero = semiring.zero

    report = QuantitativeReport(semiring.name, axioms={}, counts_usage=semiring.counts_usage)

    report.axioms["zero-unique"] = semiring.one != zero
    if not report.axioms["zero-unique"]:
        report.witnesses["zero-unique"] = (semiring.one, zero)

    def first_counterexample(holds):
        for r, s in _tuples(semiring, 2, samples, rng):
            if not holds(r, s):
                return r, s
        return None

    axioms = {
        "positivity": lambda r, s: semiring.add(r, s) != zero or (r == zero and s == zero),
        "zero-product": lambda r, s: semiring.mul(r, s) != zero or r == zero or s == zero,
    }
    for axiom, holds in axioms.items():
        witness = first_counterexample(holds)
        report.axioms[axiom] = witness is None
        if witness is not None:
            report.witnesses[axiom] = witness

    if semiring.order is not None:
        report.notes.append("grades are labels of a lattice ordered " + " <= ".join(map(str, semiring.order)))
    if not semiring.is_finite:
        report.notes.append(
            "sampled; holds for all naturals since m + n = 0 and m * n = 0 force a zero operand"
        )
    return report
