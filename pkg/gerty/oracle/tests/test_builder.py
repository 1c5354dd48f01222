from dataclasses import replace

import pytest

from gerty.checker import Environment
from gerty.core.exceptions import PreconditionViolated
from gerty.grades.expressions import ONE, ZERO
from gerty.grades.vectors import vec_values
from gerty.oracle.builder import DerivationBuilder
from gerty.oracle.derivations import check_derivation
from gerty.oracle.generators import gen_derivation
from gerty.oracle.metatheory import agreement_check
from gerty.syntax.terms import BoxIntro, LetBox, Pi, Var, arrow, universe

from .conftest import AX


@pytest.fixture
def builder():
    return DerivationBuilder("nat", seed=0)


@pytest.fixture
def wf_ax(builder):
    return builder.context(AX)


def test_context_records_the_formation_grades(builder, wf_ax):
    j = wf_ax.conclusion

    assert j.delta == ((), (ONE,))
    assert wf_ax.rule == "Wf-Ext"
    assert wf_ax.rules() == {"Wf-Empty", "Wf-Ext", "T-Type", "T-Var"}
    assert check_derivation(wf_ax, builder.algebra)


def test_abstraction_takes_its_grades_from_the_body(builder):
    wf = builder.context(AX[:1])
    a = builder.form(wf, Var("a"))
    body = builder.t_var(builder.wf_ext(wf, "x", a), "x")

    derivation = builder.t_fun(wf, a, body)

    j = derivation.conclusion
    assert j.type == Pi("x", ONE, ZERO, Var("a"), Var("a"))
    assert vec_values(j.subject_grades, builder.algebra) == (0,)
    assert vec_values(j.type_grades, builder.algebra) == (2,)
    assert check_derivation(derivation, builder.algebra)


def test_unboxing_a_box_of_a_variable(builder, wf_ax):
    a = builder.form(wf_ax, Var("a"))
    body = builder.t_var(builder.wf_ext(wf_ax, "z", a), "z")
    scrut = builder.t_box_i(wf_ax, ONE, builder.t_var(wf_ax, "x"))

    derivation = builder.t_box_e(wf_ax, scrut, body)

    j = derivation.conclusion
    assert j.subject == LetBox("z", BoxIntro(Var("x")), Var("z"))
    assert vec_values(j.subject_grades, builder.algebra) == (0, 1)
    assert vec_values(j.type_grades, builder.algebra) == (1, 0)
    assert check_derivation(derivation, builder.algebra)
    assert agreement_check(Environment("nat"), derivation, builder.algebra)


def test_box_grade_must_be_the_usage_of_the_unboxed_variable(builder, wf_ax):
    a = builder.form(wf_ax, Var("a"))
    body = builder.t_var(builder.wf_ext(wf_ax, "z", a), "z")
    scrut = builder.t_box_i(wf_ax, ZERO, builder.t_var(wf_ax, "x"))

    with pytest.raises(PreconditionViolated) as e:
        builder.t_box_e(wf_ax, scrut, body)

    assert "subject grade of 'z'" in str(e.value)


def test_applying_to_an_argument_of_another_type_raises_exception(builder):
    wf = builder.context(
        [("a", universe(0)), ("b", universe(0)), ("f", arrow(Var("a"), Var("a"), ONE, ZERO)), ("y", Var("b"))]
    )

    with pytest.raises(PreconditionViolated) as e:
        builder.t_app(wf, builder.t_var(wf, "f"), builder.t_var(wf, "y"))

    assert "'y' is not of type 'a'" in str(e.value)


def test_extending_with_a_bound_name_raises_exception(builder, wf_ax):
    with pytest.raises(PreconditionViolated):
        builder.wf_ext(wf_ax, "x", builder.form(wf_ax, Var("a")))


def test_uninhabited_type_raises_exception(builder):
    wf = builder.context([("a", universe(0)), ("b", universe(0)), ("x", Var("a"))])

    with pytest.raises(PreconditionViolated):
        builder.generate(wf, Var("b"), depth=0)


@pytest.mark.parametrize("semiring", ["nat", "security"])
@pytest.mark.parametrize("seed", range(8))
def test_checker_computes_the_grades_of_built_derivations(semiring, seed):
    derivation, algebra = gen_derivation(7, semiring=semiring, seed=seed)

    assert check_derivation(derivation, algebra)
    outcome = agreement_check(Environment(semiring), derivation, algebra)
    assert outcome, str(outcome)


def test_agreement_detects_grades_the_checker_does_not_compute(builder, wf_ax):
    derivation = builder.t_var(wf_ax, "x")
    derivation.conclusion = replace(derivation.conclusion, subject_grades=(ONE, ONE))

    outcome = agreement_check(Environment("nat"), derivation, builder.algebra)

    assert not outcome
    assert outcome.expected == ((1, 1), (1, 0))
    assert outcome.got == ((0, 1), (1, 0))


def test_built_derivations_cover_the_term_rules():
    rules = set()
    for seed in range(60):
        rules |= gen_derivation(9, seed=seed)[0].rules()

    assert {"T-Fun", "T-App", "T-Box-I", "T-Box-E", "T-Pair", "T-Ten-Cut", "T-Ty-Conv"} <= rules
