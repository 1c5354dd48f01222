import pytest

from gerty.core.exceptions import ParseError
from gerty.grades.expressions import ONE, ZERO, Lit, MetaVar, numeral
from gerty.syntax.parser import parse_file, parse_term, split_items
from gerty.syntax.terms import (
    ANONYMOUS,
    App,
    BoxIntro,
    BoxTy,
    Lam,
    LetBox,
    LetPair,
    Pair,
    Pi,
    Tensor,
    Var,
    universe,
)


class TestParseTerm:
    def test_lambda_with_several_binders(self):
        assert parse_term("\\x y -> x") == Lam("x", Lam("y", Var("x")))

    def test_application_associates_to_the_left(self):
        assert parse_term("f x y") == App(App(Var("f"), Var("x")), Var("y"))

    def test_graded_pi(self):
        assert parse_term("(a : (.0, .2) Type 0) -> a") == Pi("a", ZERO, numeral(2), universe(0), Var("a"))

    def test_universe_level_defaults_to_zero(self):
        assert parse_term("Type") == universe(0)
        assert parse_term("Type 2") == universe(2)

    def test_several_binders_share_one_arrow(self):
        term = parse_term("(a : (.0, .1) Type 0) (b : (.0, .1) Type 0) -> a")

        assert isinstance(term, Pi) and isinstance(term.codomain, Pi)
        assert (term.name, term.codomain.name) == ("a", "b")

    def test_omitted_grades_become_metavariables(self):
        term = parse_term("A -> B")

        assert term.name == ANONYMOUS
        assert isinstance(term.s, MetaVar) and isinstance(term.r, MetaVar)
        assert term.s != term.r

    def test_underscore_grade_is_a_hole(self):
        term = parse_term("(x : (_, .0) A) -> B")

        assert isinstance(term.s, MetaVar)
        assert term.r == ZERO

    def test_lattice_literals(self):
        term = parse_term("(x : (Lo, Hi) A) -> B")

        assert (term.s, term.r) == (Lit("Lo"), Lit("Hi"))

    def test_integer_grades_are_numerals(self):
        assert parse_term("[3] A") == BoxTy(numeral(3), Var("A"))

    def test_tensor(self):
        assert parse_term("(x : .1 A) * B") == Tensor("x", ONE, Var("A"), Var("B"))

    def test_tensor_binder_takes_a_single_grade(self):
        with pytest.raises(ParseError):
            parse_term("(x : (.1, .0) A) * B")

    def test_pairs_and_products(self):
        assert parse_term("<a, b>") == Pair(Var("a"), Var("b"))
        assert parse_term("<A * B>") == Tensor(ANONYMOUS, ZERO, Var("A"), Var("B"))

    def test_boxes(self):
        assert parse_term("[.2] A") == BoxTy(numeral(2), Var("A"))
        assert parse_term("[x]") == BoxIntro(Var("x"))
        assert parse_term("let [z] = y in z") == LetBox("z", Var("y"), Var("z"))
        assert parse_term("case y of [z] -> z") == LetBox("z", Var("y"), Var("z"))

    def test_case_of_a_pair(self):
        assert parse_term("case p of <a, b> -> a") == LetPair("a", "b", Var("p"), Var("a"))

    def test_parse_error_reports_file_line_and_column(self):
        with pytest.raises(ParseError) as e:
            parse_term("\\x -> ", filename="bad.gerty")

        assert str(e.value).startswith("bad.gerty:1:")
        assert "parse error: expected" in str(e.value)


class TestParseFile:
    def test_declaration(self, id_source):
        source = parse_file(id_source, "id.gerty")

        assert len(source) == 1
        decl = source["id"]
        assert decl.body == Lam("a", Lam("x", Var("x")))
        assert decl.signature.codomain == Pi("x", ONE, ZERO, Var("a"), Var("a"))
        assert source.semiring is None

    def test_signature_span_points_at_its_line(self, id_source):
        decl = parse_file(id_source, "id.gerty")["id"]

        assert (decl.span.file, decl.span.line, decl.span.column) == ("id.gerty", 2, 1)

    def test_semiring_pragma_and_continuation_lines(self, two_item_source):
        source = parse_file(two_item_source, "idlo.gerty")

        assert source.semiring == "security"
        assert [decl.name for decl in source] == ["idLo", "const"]
        assert source[1].signature.codomain.s == Lit("Lo")

    def test_unknown_name_raises_key_error(self, id_source):
        with pytest.raises(KeyError):
            parse_file(id_source)["const"]

    def test_signature_without_definition_raises_exception(self):
        with pytest.raises(ParseError) as e:
            parse_file("id : Type 0\n", "lonely.gerty")

        assert str(e.value) == "lonely.gerty:1:1: parse error: expected 'id ='"

    def test_definition_without_signature_raises_exception(self):
        with pytest.raises(ParseError) as e:
            parse_file("id = \\x -> x\n", "lonely.gerty")

        assert str(e.value) == "lonely.gerty:1:1: parse error: expected 'id :'"

    def test_duplicate_definitions_raise_exception(self, id_source):
        with pytest.raises(ParseError):
            parse_file(id_source + "id = \\a y -> y\n")

    def test_malformed_item_reports_its_own_line(self, id_source):
        with pytest.raises(ParseError) as e:
            parse_file(id_source + "\nbad : (x : ) -> x\nbad = x\n", "bad.gerty")

        assert e.value.line == 5

    def test_stray_text_before_the_first_item_raises_exception(self):
        with pytest.raises(ParseError) as e:
            parse_file("  oops\nid : Type 0\nid = Type 0\n", "stray.gerty")

        assert (e.value.file, e.value.line) == ("stray.gerty", 1)


def test_split_items_keeps_comments_with_the_item_above():
    pragmas, items = split_items("%semiring nat\nf : A\n-- note\nf = a\n")

    assert pragmas == [(1, "nat")]
    assert items == [(2, "f : A\n-- note"), (4, "f = a\n")]
