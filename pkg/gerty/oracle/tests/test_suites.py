import pytest

from gerty.core.exceptions import ImproperlyConfigured
from gerty.oracle.suites import SUITES, SuiteReport, run_suite, simulation_case


@pytest.mark.parametrize("suite", [s for s in SUITES if s != "semirings"])
def test_generated_suites_pass(suite):
    report = run_suite(suite, cases=10, seed=11)

    assert report.ok, str(report)
    assert report.passed == 10


@pytest.mark.slow
@pytest.mark.parametrize(
    "suite, cases",
    [("subst", 300), ("structural", 300), ("preservation", 300), ("simulation", 200), ("termination", 1000)],
)
def test_suites_pass_at_acceptance_size(suite, cases):
    report = run_suite(suite, cases=cases, seed=2021)

    assert report.ok, str(report)
    assert report.passed == cases


def test_suites_run_under_another_semiring():
    report = run_suite("structural", cases=5, seed=3, semiring="security")

    assert report.ok, str(report)


def test_semiring_suite_checks_laws_and_quantitativity():
    report = run_suite("semirings")

    assert report.ok, str(report)
    assert report.passed == 2 * 5


def test_semiring_suite_for_one_semiring():
    report = run_suite("semirings", semiring="security")

    assert report.ok
    assert report.passed == 2


def test_unknown_suite():
    with pytest.raises(ImproperlyConfigured) as e:
        run_suite("soundness")

    assert "Unknown self-test suite 'soundness'" in str(e.value)


def test_simulation_case():
    assert simulation_case(0, steps=5)


class TestSuiteReport:
    def test_str_lists_the_failures(self):
        report = SuiteReport("subst", passed=2, failures=["case 3: substitution: expected ((1,), ()), got None"])

        assert not report
        assert str(report) == "subst: 2/3 passed\n  case 3: substitution: expected ((1,), ()), got None"

    def test_empty_report_is_ok(self):
        assert SuiteReport("termination")
