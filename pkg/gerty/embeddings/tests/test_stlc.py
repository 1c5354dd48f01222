import pytest

from gerty.checker import Environment
from gerty.core.exceptions import ImproperlyConfigured, NotQuantitative, OutOfFragment, TypeMismatch, UnboundVariable
from gerty.embeddings import (
    Arrow,
    Base,
    SimpleTermGenerator,
    closed_judgment,
    simple_type_of,
    stlc_predicate,
    stlc_simulation_check,
    translate_declaration,
)
from gerty.embeddings.stlc import SApp, SLam, SVar, simple_equal, simple_normal_form, simple_step
from gerty.syntax.parser import parse_term

A, B = Base("A"), Base("B")


class TestSimplyTypedCalculus:
    def test_arrow_str_is_right_associative(self):
        assert str(Arrow(Arrow(A, B), Arrow(A, B))) == "(A → B) → A → B"

    def test_type_of_lambda(self):
        assert simple_type_of({}, SLam("x", A, SVar("x"))) == Arrow(A, A)

    def test_ill_typed_application(self):
        with pytest.raises(TypeMismatch):
            simple_type_of({"f": Arrow(A, B), "y": B}, SApp(SVar("f"), SVar("y")))

    def test_unbound_variable(self):
        with pytest.raises(UnboundVariable):
            simple_type_of({}, SVar("x"))

    def test_call_by_name_step(self):
        redex = SApp(SLam("x", A, SVar("x")), SApp(SVar("f"), SVar("y")))

        assert simple_step(redex) == SApp(SVar("f"), SVar("y"))
        assert simple_step(SVar("x")) is None

    def test_eta(self):
        f = SVar("f")

        assert simple_normal_form(SLam("x", A, SApp(f, SVar("x")))) == f
        assert simple_equal(SLam("x", A, SApp(f, SVar("x"))), SLam("y", A, SApp(f, SVar("y"))))


class TestTranslate:
    def test_const(self, const_source):
        translation = translate_declaration(const_source, "const", "stlc", bases=["A", "B"])

        assert str(translation) == "λx:A. λy:B. x : A → B → A"

    def test_second_declaration_sees_the_first(self, const_source):
        translation = translate_declaration(const_source, "apply", "stlc", bases=["A", "B"])

        assert str(translation) == "λf:A → B. λx:A. f x : (A → B) → A → B"

    def test_type_parameters_are_not_simply_typed(self, id_source):
        with pytest.raises(OutOfFragment):
            translate_declaration(id_source, "id", "stlc")

    def test_unknown_declaration(self, id_source):
        with pytest.raises(UnboundVariable):
            translate_declaration(id_source, "const", "stlc")

    def test_unknown_target(self, id_source):
        with pytest.raises(ImproperlyConfigured):
            translate_declaration(id_source, "id", "fomega")

    def test_without_postulated_bases(self, const_source):
        with pytest.raises(UnboundVariable):
            translate_declaration(const_source, "const", "stlc")


def test_predicate_needs_a_quantitative_semiring():
    env = Environment("security")

    with pytest.raises(NotQuantitative):
        stlc_predicate(closed_judgment(parse_term("\\x -> x"), parse_term("(x : (Lo, Hi) A) -> A")), env)


@pytest.mark.parametrize("seed", range(20))
def test_generated_terms_simulate(seed):
    env, j = SimpleTermGenerator(seed).problem()

    assert stlc_predicate(j, env)
    report = stlc_simulation_check(j, env, 10)
    assert report.steps <= 10
    assert len(report.trace) == report.steps + 1
