from gerty.grades.expressions import ONE, ZERO, GradeAlgebra, Lit, numeral
from gerty.grades.semirings import NATURALS
from gerty.syntax.substitution import alpha_eq, fresh_name, rename, subst, subst_many
from gerty.syntax.terms import App, Lam, LetPair, Pi, Var, universe


def test_fresh_name_primes_until_unused():
    assert fresh_name("x", {"x", "x'"}) == "x''"
    assert fresh_name("y", {"x"}) == "y"
    assert fresh_name("_", set()) == "x"


def test_subst_replaces_free_occurrences():
    assert subst(App(Var("f"), Var("x")), "x", Var("z")) == App(Var("f"), Var("z"))


def test_subst_leaves_bound_occurrences_alone():
    term = Lam("x", Var("x"))

    assert subst(term, "x", Var("z")) == term


def test_subst_renames_capturing_binders():
    term = Lam("y", App(Var("x"), Var("y")))

    result = subst(term, "x", Var("y"))

    assert result == Lam("y'", App(Var("y"), Var("y'")))


def test_subst_into_pi_codomain_avoids_capture():
    term = Pi("a", ONE, ZERO, universe(0), App(Var("P"), Var("a")))

    result = subst(term, "P", Var("a"))

    assert result.name != "a"
    assert result.codomain == App(Var("a"), Var(result.name))


def test_subst_many_is_simultaneous():
    result = subst_many(App(Var("x"), Var("y")), {"x": Var("y"), "y": Var("x")})

    assert result == App(Var("y"), Var("x"))


def test_subst_renames_both_pair_binders_when_needed():
    term = LetPair("a", "b", Var("p"), App(App(Var("f"), Var("a")), Var("b")))

    result = subst(term, "f", App(Var("a"), Var("b")))

    assert result == LetPair("a'", "b'", Var("p"), App(App(App(Var("a"), Var("b")), Var("a'")), Var("b'")))


def test_rename():
    assert rename(App(Var("x"), Var("y")), "x", "z") == App(Var("z"), Var("y"))


def test_alpha_eq_ignores_bound_names():
    assert alpha_eq(Lam("x", Var("x")), Lam("y", Var("y")))
    assert not alpha_eq(Lam("x", Var("y")), Lam("y", Var("y")))
    assert not alpha_eq(Lam("x", Lam("y", Var("x"))), Lam("x", Lam("y", Var("y"))))


def test_alpha_eq_compares_grades_with_the_given_equality():
    nat = GradeAlgebra(NATURALS)
    t1 = Pi("x", numeral(2), ZERO, Var("A"), Var("A"))
    t2 = Pi("y", Lit(2), ZERO, Var("A"), Var("A"))

    assert not alpha_eq(t1, t2)
    assert alpha_eq(t1, t2, grade_eq=nat.equal)


def test_free_vars():
    term = Pi("a", ONE, ZERO, Var("A"), Lam("x", App(Var("a"), Var("b"))))

    assert term.free_vars == {"A", "b"}
