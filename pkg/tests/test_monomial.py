from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monolift.errors import ParseError
from monolift.monomial import (
    DEGLEX,
    DegRevLexOrder,
    Monomial,
    MonomialIdeal,
    contains,
    count_monomials,
    divides,
    format_ideal,
    gcd,
    hilbert_function_by_count,
    is_artinian,
    is_lex_segment,
    lcm,
    max_exponents,
    minimalize,
    monomials_of_degree,
    parse_ideal,
    parse_monomial,
    standard_monomials,
)

N = 3


def exps(n=N, top=3):
    return st.tuples(*[st.integers(0, top)] * n).map(Monomial)


def ideals(n=N, top=3, max_size=5):
    return st.lists(exps(n, top).filter(lambda m: m.degree > 0), min_size=1, max_size=max_size).map(
        lambda gs: MonomialIdeal(n, gs))


def test_monomial_arithmetic():
    a, b = Monomial((2, 1, 0)), Monomial((0, 1, 3))
    assert a * b == (2, 2, 3)
    assert (a * b) / b == a
    assert a ** 2 == (4, 2, 0)
    assert lcm([a, b]) == (2, 1, 3) and gcd(a, b) == (0, 1, 0)
    assert a.degree == 3 and a.support() == (0, 1)
    with pytest.raises(ValueError):
        a / b


def test_monomials_of_degree_is_descending_lex():
    ms = monomials_of_degree(3, 2)
    assert ms[0] == (2, 0, 0) and ms[-1] == (0, 0, 2)
    assert len(ms) == count_monomials(3, 2) == 6
    assert all(DEGLEX.greater(ms[k], ms[k + 1]) for k in range(len(ms) - 1))


def test_orders_differ_on_classic_pair():
    a, b = Monomial((1, 0, 2)), Monomial((0, 2, 1))
    assert DEGLEX.greater(a, b)
    assert DegRevLexOrder().greater(b, a)


def test_parse_and_format_round_trip():
    J = parse_ideal("x1^2*x2, x2^2*x3, x3^2*x1")
    assert J.n == 3 and len(J) == 3
    assert parse_ideal(format_ideal(J), 3) == J
    assert parse_monomial("x2^3", 3) == (0, 3, 0)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as info:
        parse_ideal("x1^2, x2^")
    assert info.value.line == 1 and info.value.column > 1


def test_minimal_generators_drop_multiples():
    J = MonomialIdeal(2, [(1, 0), (2, 0), (1, 1), (0, 3)])
    assert set(J.gens) == {(1, 0), (0, 3)}


def test_artinian_and_bounds():
    J = parse_ideal("x1^3, x2^2, x1*x2")
    assert is_artinian(J)
    assert max_exponents(J)[0] == (3, 2)
    assert not is_artinian(parse_ideal("x1^3, x1*x2"))


def test_standard_monomials_and_lex():
    J = parse_ideal("x1^2, x1*x2, x2^3")
    assert sorted(standard_monomials(J)) == [(0, 0), (0, 1), (0, 2), (1, 0)]
    assert is_lex_segment(J)
    assert not is_lex_segment(parse_ideal("x2^2, x1*x2, x1^3"))


@settings(max_examples=60, deadline=None)
@given(ideals(), exps())
def test_contains_matches_divisibility(J, m):
    assert contains(J, m) == any(divides(g, m) for g in J.gens)


@settings(max_examples=60, deadline=None)
@given(ideals())
def test_minimalize_is_idempotent(J):
    assert minimalize(list(J.gens), N) == J
    assert all(not divides(a, b) for a in J.gens for b in J.gens if a != b)


@settings(max_examples=40, deadline=None)
@given(ideals(top=2))
def test_hilbert_count_matches_brute_force(J):
    values = hilbert_function_by_count(J, 4)
    for d in range(5):
        outside = [m for m in monomials_of_degree(N, d) if not contains(J, m)]
        assert values[d] == len(outside)


def test_count_monomials_brute_force():
    for n, d in product(range(1, 4), range(5)):
        assert count_monomials(n, d) == sum(1 for e in product(range(d + 1), repeat=n) if sum(e) == d)
