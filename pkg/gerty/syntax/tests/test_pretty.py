import pytest

from gerty.grades.expressions import ONE, ZERO, Lit, Mul, fresh_metavar, numeral
from gerty.grades.semirings import INFINITY
from gerty.syntax.parser import parse_file, parse_term
from gerty.syntax.pretty import pretty, pretty_declarations, pretty_grade
from gerty.syntax.substitution import alpha_eq
from gerty.syntax.terms import App, BoxTy, Var, arrow


@pytest.mark.parametrize(
    "grade, text",
    [
        (ZERO, ".0"),
        (numeral(3), ".3"),
        (Lit(5), ".5"),
        (Lit("Lo"), "Lo"),
        (Lit(INFINITY), "Inf"),
        (Mul(Lit("Hi"), numeral(2)), "Hi * .2"),
    ],
)
def test_pretty_grade(grade, text):
    assert pretty_grade(grade) == text


def test_holes_print_as_underscores():
    assert pretty_grade(fresh_metavar()) == "_"


@pytest.mark.parametrize(
    "text",
    [
        "(a : (.0, .2) Type 0) -> (x : (.1, .0) a) -> a",
        "\\a x -> x",
        "f x (g y)",
        "(x : .1 A) * B",
        "<A * B>",
        "<a, b>",
        "[.2] (f x)",
        "[x]",
        "let [z] = y in z",
        "case p of <a, b> -> a",
        "(x : (Lo, Hi) A) -> Type 1",
    ],
)
def test_canonical_text_is_printed_unchanged(text):
    assert pretty(parse_term(text)) == text


def test_anonymous_binders_get_a_fresh_name():
    assert pretty(arrow(Var("A"), Var("x"), ONE, ZERO)) == "(x' : (.1, .0) A) -> x"


def test_erase_drops_grades():
    term = parse_term("(a : (.0, .2) Type 0) -> (x : (.1, .0) [.2] a) -> a")

    assert pretty(term, erase=True) == "(a : Type 0) -> (x : a) -> a"


def test_box_of_an_application_is_parenthesised():
    assert pretty(BoxTy(ONE, App(Var("f"), Var("x")))) == "[.1] (f x)"


def test_pretty_declarations_parse_back(id_source):
    source = parse_file(id_source)

    text = pretty_declarations(source, semiring="nat")
    again = parse_file(text)

    assert text.startswith("%semiring nat\n")
    assert again.semiring == "nat"
    assert alpha_eq(again["id"].signature, source["id"].signature)
    assert alpha_eq(again["id"].body, source["id"].body)
