import pytest

from gerty.core.exceptions import MalformedExchange
from gerty.grades.expressions import ONE, ZERO, Lit, numeral
from gerty.grades.vectors import (
    choose,
    contr,
    ctx_add,
    ctx_scale,
    discard,
    exch,
    ins,
    substitute_grading,
    unit_vec,
    vec_add,
    vec_equal,
    vec_sum,
    vec_values,
    zero_vec,
)


def test_unit_vec():
    assert unit_vec(3, 1) == (ZERO, ONE, ZERO)
    assert unit_vec(1, 0) == (ONE,)


def test_vec_add_pads_the_shorter_vector(nat):
    assert vec_values(vec_add((ONE,), (ONE, ONE), nat), nat) == (2, 1)


def test_vec_sum_of_nothing_is_zero(nat):
    assert vec_sum([], 2, nat) == zero_vec(2)


def test_discard_and_choose_skip_short_vectors():
    d = ((), (ONE,), (ZERO, Lit(2)))

    assert discard(d, 1) == ((), (ONE,), (ZERO,))
    assert choose(d, 1) == (Lit(2),)


def test_ctx_add_aligns_trailing_assumptions(nat):
    d1 = ((), (ONE,), (ZERO, ZERO))
    d2 = ((ONE, ONE),)

    assert ctx_add(d1, d2, nat) == ((), (ONE,), (ONE, ONE))
    assert ctx_add(d2, d1, nat) == ctx_add(d1, d2, nat)


def test_ctx_scale(nat):
    assert ctx_scale((Lit(2), ZERO), (ONE, ONE), nat) == ((Lit(2), Lit(2)), (ZERO, ZERO))


def test_substitute_grading_worked_example(nat):
    delta = ((), (ONE,))
    delta_prime = ((ZERO, ZERO, numeral(2)),)
    sigma = (ZERO, ONE)

    result = substitute_grading(delta, delta_prime, sigma, nat)

    assert len(result) == 3
    assert result[:2] == delta
    assert vec_values(result[2], nat) == (0, 2)


def test_substitute_grading_under_security(security):
    delta = ((),)
    delta_prime = ((ONE, Lit("Hi")),)

    result = substitute_grading(delta, delta_prime, (ONE,), security)

    assert vec_values(result[1], security) == ("Lo",)


def test_contr_merges_the_two_positions(nat):
    # Gradings of the assumptions after the contracted pair.
    d = ((ONE, ONE), (ZERO, ONE, Lit(2)))

    result = contr(0, d, nat)

    assert vec_values(result[0], nat) == (2,)
    assert vec_values(result[1], nat) == (1, 2)


def test_exch_swaps_positions():
    d = ((), (ZERO, ONE, Lit(3)))

    assert exch(0, d) == ((), (ONE, ZERO, Lit(3)))


def test_exch_raises_exception_if_a_vector_ends_between_the_positions():
    with pytest.raises(MalformedExchange):
        exch(0, ((ONE,),))


def test_ins_inserts_into_long_enough_vectors():
    d = ((), (ONE,))

    assert ins(1, Lit(2), d) == ((), (ONE, Lit(2)))
    assert ins(0, ZERO, d) == ((ZERO,), (ZERO, ONE))


def test_vec_equal(nat):
    assert vec_equal((Lit(2),), (ONE + ONE,), nat)
    assert not vec_equal((ONE,), (ONE, ZERO), nat)
