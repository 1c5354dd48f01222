import dataclasses
import random

import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from gerty.core.exceptions import ImproperlyConfigured
from gerty.grades.semirings import (
    INFINITY,
    NATURALS,
    NONE_ONE_TONS,
    SECURITY,
    SINGLETON,
    ZERO_ONE,
    builtin_semirings,
    check_semiring_laws,
    get_semiring,
    is_quantitative,
)


class TestBuiltinSemirings:
    def test_builtin_semirings_returns_the_five_documented_semirings_in_order(self):
        assert [s.name for s in builtin_semirings()] == ["nat", "zero-one", "none-one-tons", "security", "singleton"]

    @pytest.mark.parametrize(
        "name, quantitative",
        [("nat", True), ("zero-one", True), ("none-one-tons", True), ("security", False), ("singleton", False)],
    )
    def test_quantitative_flags(self, name, quantitative):
        assert get_semiring(name).quantitative is quantitative

    def test_security_zero_is_hi_and_one_is_lo(self):
        assert SECURITY.zero == "Hi"
        assert SECURITY.one == "Lo"

    def test_security_addition_is_the_meet(self):
        assert SECURITY.add("Lo", "Hi") == "Lo"
        assert SECURITY.add("Hi", "Hi") == "Hi"

    def test_security_multiplication_is_the_join(self):
        assert SECURITY.mul("Lo", "Hi") == "Hi"
        assert SECURITY.mul("Lo", "Lo") == "Lo"

    def test_singleton_one_is_zero(self):
        assert SINGLETON.one == SINGLETON.zero
        assert SINGLETON.add(0, 0) == 0

    def test_none_one_tons_saturates_at_infinity(self):
        assert NONE_ONE_TONS.add(1, 1) == INFINITY
        assert NONE_ONE_TONS.add(1, INFINITY) == INFINITY
        assert NONE_ONE_TONS.mul(0, INFINITY) == 0

    def test_zero_one_addition_is_idempotent(self):
        assert ZERO_ONE.add(1, 1) == 1

    def test_get_semiring_defaults_to_the_configured_semiring(self):
        assert get_semiring() is NATURALS

    def test_get_semiring_raises_exception_for_unknown_names(self):
        with pytest.raises(ImproperlyConfigured):
            get_semiring("reals")

    @pytest.mark.parametrize(
        "semiring, value, spelling",
        [(NATURALS, 0, ".0"), (NATURALS, 1, ".1"), (NATURALS, 7, ".7"), (SECURITY, "Hi", ".0"), (SECURITY, "Lo", ".1")],
    )
    def test_render_spells_zero_and_one_as_numerals(self, semiring, value, spelling):
        assert semiring.render(value) == spelling

    def test_render_spells_other_tokens_by_name(self):
        assert NONE_ONE_TONS.render(INFINITY) == "Inf"

    def test_contains_accepts_only_naturals_for_nat(self):
        assert NATURALS.contains(3)
        assert not NATURALS.contains(-1)
        assert not NATURALS.contains(True)
        assert not NATURALS.contains("Lo")

    def test_from_numeral_folds_unary_sums(self):
        assert NATURALS.from_numeral(3) == 3
        assert NONE_ONE_TONS.from_numeral(2) == INFINITY
        assert SECURITY.from_numeral(2) == "Lo"

    def test_sample_stays_in_the_carrier(self):
        rng = random.Random(1)
        for semiring in builtin_semirings():
            assert all(semiring.contains(semiring.sample(rng)) for _ in range(50))


class TestSemiringLaws:
    @pytest.mark.parametrize("semiring", builtin_semirings(), ids=lambda s: s.name)
    def test_all_builtin_semirings_satisfy_the_laws(self, semiring):
        report = check_semiring_laws(semiring, seed=0)

        assert report, str(report)
        assert report.exhaustive is semiring.is_finite

    def test_security_is_checked_exhaustively(self):
        report = check_semiring_laws(SECURITY)

        assert report.exhaustive
        assert report.checked > 0

    def test_non_commutative_addition_is_reported_with_a_witness(self):
        broken = dataclasses.replace(ZERO_ONE, name="broken", add=lambda a, b: a)

        report = check_semiring_laws(broken)

        assert not report
        violation = next(v for v in report.violations if v.law == "add-commutativity")
        a, b = violation.witness
        assert broken.add(a, b) != broken.add(b, a)
        assert "add-commutativity" in str(report)

    def test_check_semiring_laws_needs_at_least_one_sample(self):
        with pytest.raises(ValueError):
            check_semiring_laws(NATURALS, samples=0)

    @hypothesis_settings(max_examples=200)
    @given(st.integers(min_value=0), st.integers(min_value=0), st.integers(min_value=0))
    def test_naturals_distribute(self, a, b, c):
        assert NATURALS.mul(a, NATURALS.add(b, c)) == NATURALS.add(NATURALS.mul(a, b), NATURALS.mul(a, c))


class TestIsQuantitative:
    @pytest.mark.parametrize("semiring", [NATURALS, ZERO_ONE, NONE_ONE_TONS], ids=lambda s: s.name)
    def test_quantitative_semirings(self, semiring):
        assert is_quantitative(semiring, seed=0)

    def test_security_satisfies_the_axioms_but_does_not_count_usage(self):
        report = is_quantitative(SECURITY)

        assert not report
        assert report.failing == []
        assert not report.counts_usage

    def test_usage_flag_is_the_only_exclusion_beyond_the_axioms(self):
        labels_as_counts = dataclasses.replace(SECURITY, name="flow", counts_usage=True)

        assert is_quantitative(labels_as_counts)

    def test_singleton_fails_zero_unique(self):
        report = is_quantitative(SINGLETON)

        assert not report
        assert "zero-unique" in report.failing
        assert report.witnesses["zero-unique"] == (0, 0)

    def test_declared_flags_agree_with_the_axioms(self):
        for semiring in builtin_semirings():
            assert bool(is_quantitative(semiring, seed=0)) is semiring.quantitative

    def test_report_prints_each_axiom(self):
        text = str(is_quantitative(SECURITY))

        assert "security: not quantitative" in text
        assert "positivity: ok" in text
        assert "grades do not count usage" in text
