from gerty.core.exceptions import (
    FuelExhausted,
    GradeMismatch,
    NotQuantitative,
    ParseError,
    SimulationMismatch,
    TypeCheckError,
    TypeMismatch,
    Unsatisfiable,
    UnresolvedMetaVar,
)


class TestParseError:
    def test_message_lists_the_expected_tokens_in_order(self):
        e = ParseError("id.gerty", 3, 7, {"RPAR", "COMMA"})

        assert str(e) == "id.gerty:3:7: parse error: expected COMMA, RPAR"
        assert (e.line, e.column) == (3, 7)

    def test_message_for_nothing_expected(self):
        assert str(ParseError("f", 1, 1, [])) == "f:1:1: parse error: expected end of input"


class TestTypeCheckErrors:
    def test_span_prefixes_the_message(self):
        assert str(TypeCheckError("boom", span="id.gerty:2:1")) == "id.gerty:2:1: boom"
        assert str(TypeCheckError("boom")) == "boom"

    def test_type_mismatch_shows_both_types(self):
        e = TypeMismatch("Type 0", "Type 1")

        assert str(e) == "Type mismatch:\n expected Type 0\n but got  Type 1"

    def test_grade_mismatch_is_printed_without_a_location(self):
        e = GradeMismatch("subject", "x", "Hi", ".1", span="leak.gerty:5:1")

        assert str(e) == "At subject stage got the following mismatched grades:\n For 'x' expected Hi but got .1"
        assert isinstance(e, Unsatisfiable)
        assert isinstance(e, TypeCheckError)


def test_other_messages():
    assert str(UnresolvedMetaVar(4)) == "Grade variable ?4 has not been resolved."
    assert str(FuelExhausted(None, 10)) == "Normalisation did not finish within 10 steps."
    assert str(NotQuantitative("security")) == "The 'security' semiring is not quantitative."
    assert str(SimulationMismatch(2, "stuck")) == "Step 2: stuck"
