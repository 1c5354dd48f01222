import pytest

from gerty.core.exceptions import (
    CannotInfer,
    DuplicateVariable,
    GradeMismatch,
    NonZeroTypeUse,
    NotAFunction,
    NotAType,
    TypeMismatch,
    UnboundVariable,
)
from gerty.grades.expressions import ONE, ZERO, MetaVar
from gerty.grades.vectors import vec_values
from gerty.oracle.generators import build_state
from gerty.syntax.parser import parse_file, parse_term
from gerty.syntax.terms import BoxIntro, BoxTy, Lam, Var, universe

from .conftest import AX, ID_SOURCE


class TestInfer:
    def test_variable_grades_follow_the_context_grading(self, checker, axy):
        result = checker.infer(axy, Var("x"))

        assert result.type == Var("a")
        assert axy.delta == ((), (ONE,), (ONE, ZERO))
        assert result.subject == (ZERO, ONE, ZERO)
        assert result.subject_type == (ONE, ZERO, ZERO)

    def test_universe_lives_in_the_next_universe(self, checker, ax):
        result = checker.infer(ax, universe(0))

        assert result.type == universe(1)
        assert result.subject == (ZERO, ZERO)

    @pytest.mark.parametrize(
        "source, expected",
        [
            ("a", universe(0)),
            ("x", Var("a")),
            ("Type 0", universe(1)),
            ("(y : (.1, .0) a) -> a", universe(0)),
            ("[.2] a", universe(0)),
        ],
    )
    def test_rule_is_selected_by_the_term_former(self, checker, ax, source, expected):
        assert checker.infer(ax, parse_term(source)).type == expected

    def test_inferring_a_non_term_raises_exception(self, checker, ax):
        with pytest.raises(TypeError):
            checker.infer(ax, "x")

    def test_unbound_variable_raises_exception(self, checker, ax):
        with pytest.raises(UnboundVariable):
            checker.infer(ax, Var("nope"))

    def test_abstractions_cannot_be_inferred(self, checker, ax):
        with pytest.raises(CannotInfer):
            checker.infer(ax, Lam("y", Var("y")))

    def test_applying_a_non_function_raises_exception(self, checker, ax):
        with pytest.raises(NotAFunction):
            checker.infer(ax, parse_term("x x"))

    def test_redex_head_is_inferred_from_its_argument(self, checker, ax):
        result = checker.infer(ax, parse_term("(\\y -> y) x"))

        assert result.type == Var("a")
        assert vec_values(result.subject, checker.algebra) == (0, 1)

    def test_box_introduction_grade_is_a_fresh_metavariable(self, checker, ax):
        result = checker.infer(ax, BoxIntro(Var("x")))

        assert isinstance(result.type, BoxTy)
        assert isinstance(result.type.s, MetaVar)
        assert result.type.body == Var("a")

    def test_globals_are_used_at_grade_zero(self, env, checker, ax):
        env.define("A", universe(0))

        result = checker.infer(ax, Var("A"))

        assert result.type == universe(0)
        assert result.subject == (ZERO, ZERO)


class TestForm:
    def test_signature_of_the_identity(self, checker):
        signature = parse_file(ID_SOURCE)["id"].signature

        formed = checker.form(checker.empty(), signature)

        assert formed.level == 1
        assert formed.grades == ()

    def test_type_grades_count_uses_in_the_codomain(self, checker):
        signature = parse_term("(a : (.0, .1) Type 0) -> (x : (.1, .0) a) -> a")

        with pytest.raises(GradeMismatch) as e:
            checker.form(checker.empty(), signature)

        assert str(e.value) == (
            "At subject-type stage got the following mismatched grades:\n For 'a' expected .1 but got .2"
        )

    def test_terms_that_are_not_types_raise_exception(self, checker, ax):
        with pytest.raises(NotAType):
            checker.form(ax, Var("x"))

    def test_binder_domain_that_is_not_a_type_raises_exception(self, checker, ax):
        with pytest.raises(NotAType) as e:
            checker.form(ax, parse_term("(y : (.1, .0) x) -> a"))

        assert "'x' is not a type" in str(e.value)

    def test_type_used_at_a_non_zero_grade_in_its_own_type_raises_exception(self, env, checker):
        # K a unfolds to Type 0, but its type K a charges 'a' at grade 1.
        env.define("K", parse_term("(y : (.1, .0) Type 0) -> Type 1"), parse_term("\\y -> Type 0"))
        state = build_state(checker, [("F", parse_term("(x : (.0, .1) Type 0) -> K x")), ("a", universe(0))])

        with pytest.raises(NonZeroTypeUse) as e:
            checker.form(state, parse_term("F a"))

        assert "uses 'a' with grade" in str(e.value)

    def test_formation_of_the_same_node_is_memoised(self, env, checker):
        signature = parse_file(ID_SOURCE)["id"].signature

        first = checker.form(checker.empty(), signature)
        second = checker.form(checker.empty(), signature)

        assert first.level == second.level
        assert env.cache.hits == 1


class TestCheck:
    def test_identity(self, checker):
        decl = parse_file(ID_SOURCE)["id"]

        result = checker.check(checker.empty(), decl.body, decl.signature)

        assert result.subject == ()
        assert result.subject_type == ()

    def test_wrong_subject_grade_is_reported_for_the_variable(self, checker):
        signature = parse_term("(a : (.0, .2) Type 0) -> (x : (.2, .0) a) -> a")

        with pytest.raises(GradeMismatch) as e:
            checker.check(checker.empty(), parse_term("\\a x -> x"), signature)

        assert str(e.value) == "At subject stage got the following mismatched grades:\n For 'x' expected .2 but got .1"

    def test_type_mismatch(self, checker, ax):
        with pytest.raises(TypeMismatch) as e:
            checker.check(ax, universe(0), Var("a"))

        assert (e.value.expected, e.value.actual) == ("a", "Type 1")

    def test_abstraction_against_a_non_function_type(self, checker, ax):
        with pytest.raises(TypeMismatch):
            checker.check(ax, Lam("y", Var("y")), Var("a"))

    def test_universe_subsumption(self, checker, ax):
        result = checker.check(ax, Var("a"), universe(1))

        assert result.type == universe(1)


def test_extending_a_context_twice_with_a_name_raises_exception(ax):
    with pytest.raises(DuplicateVariable):
        ax.extend("x", Var("a"), (ONE, ZERO))


def test_building_a_context_with_a_repeated_name_raises_exception(checker):
    with pytest.raises(DuplicateVariable) as e:
        build_state(checker, AX + [("x", Var("a"))])

    assert str(e.value) == "Variable 'x' is already bound in this context."


def test_context_lookup(axy):
    assert axy.lookup("y") == (2, Var("a"))
    assert axy.lookup("z") is None
    assert "x" in axy
    assert len(axy) == 3
