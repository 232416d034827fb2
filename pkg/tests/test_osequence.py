import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monolift.errors import PreconditionError
from monolift.ideals import hilbert_series
from monolift.monomial import MonomialIdeal, count_monomials, is_lex_segment, monomials_of_degree
from monolift.osequence import (
    binomial_representation,
    difference,
    integrate,
    is_generic_h_vector,
    is_o_sequence,
    is_t_differentiable,
    lex_ideal_from_h_vector,
    macaulay_growth,
    non_lex_ideal_with_h_vector,
    stick_figure_from_h_vector,
    stick_figure_from_o_sequence,
)


def lex_growth_brute_force(c, d, n):
    """Degree ``d+1`` monomials all of whose degree-``d`` divisors are among the ``c`` lex-last ones."""
    last = set(monomials_of_degree(n, d)[-c:]) if c else set()
    count = 0
    for m in monomials_of_degree(n, d + 1):
        divisors = [tuple(m[k] - (k == j) for k in range(n)) for j in range(n) if m[j]]
        if all(x in last for x in divisors):
            count += 1
    return count


def test_binomial_representation():
    assert binomial_representation(6, 2) == [(4, 2)]
    assert binomial_representation(9, 3) == [(4, 3), (3, 2), (2, 1)]


def test_growth_values():
    assert macaulay_growth(3, 1) == 6
    assert macaulay_growth(6, 2) == 10
    assert macaulay_growth(1, 4) == 1
    assert not is_o_sequence((1, 5, 3, 6))
    assert is_o_sequence((1, 3, 6, 9, 1))


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_growth_matches_lex_order_ideals(n, d, data):
    c = data.draw(st.integers(1, min(20, count_monomials(n, d))))
    assert macaulay_growth(c, d) == lex_growth_brute_force(c, d, n)


def test_differences():
    s = [1, 3, 6, 10, 15]
    assert difference(s) == [1, 2, 3, 4, 5]
    assert difference(s, 2) == [1, 1, 1, 1, 1]
    assert integrate([1, 2, 1], 1, 5) == [1, 3, 4, 4, 4]
    assert is_t_differentiable(integrate([1, 2, 1], 2, 6), 2)


def test_generic_h_vectors():
    assert is_generic_h_vector((1, 3, 6, 0))
    assert is_generic_h_vector((1, 2, 3, 4))
    assert not is_generic_h_vector((1, 3, 6, 2))
    assert not is_generic_h_vector((1, 3, 5))


@pytest.mark.parametrize("h", [(1, 2), (1, 2, 3), (1, 3), (1, 3, 6), (1, 2, 3, 4)])
def test_generic_h_vectors_force_lex(h):
    assert non_lex_ideal_with_h_vector(h) is None


@pytest.mark.parametrize("h", [(1, 2, 1), (1, 2, 2), (1, 3, 2), (1, 3, 6, 2), (1, 3, 4, 1)])
def test_other_h_vectors_admit_non_lex_ideals(h):
    J = non_lex_ideal_with_h_vector(h)
    assert J is not None and not is_lex_segment(J)
    assert tuple(hilbert_series(J).h_vector) == h


def h_vectors():
    return st.lists(st.integers(1, 6), min_size=1, max_size=4).map(lambda tail: [1] + tail).filter(is_o_sequence)


@settings(max_examples=60, deadline=None)
@given(h_vectors())
def test_lex_ideal_round_trip(h):
    J = lex_ideal_from_h_vector(h)
    assert is_lex_segment(J)
    assert list(hilbert_series(J).h_vector) == h


def test_lex_small_example():
    assert lex_ideal_from_h_vector([1, 2, 1]) == MonomialIdeal.parse("x1^2, x1*x2, x2^3")


def test_almost_lex_differs_from_lex_in_one_monomial(almost_lex):
    lex = lex_ideal_from_h_vector([1, 3, 6, 9, 1])
    for d in range(4):
        assert set(lex.degree_part(d)) == set(almost_lex.degree_part(d))
    swapped = set(lex.degree_part(4)) ^ set(almost_lex.degree_part(4))
    assert {str(m) for m in swapped} == {"x1^2*x3^2", "x3^4"}


def test_non_lex_search():
    J = non_lex_ideal_with_h_vector([1, 3, 6, 9, 1], 3)
    assert J is not None and not is_lex_segment(J)
    assert list(hilbert_series(J).h_vector) == [1, 3, 6, 9, 1]
    # only one order ideal realises a generic h-vector
    assert non_lex_ideal_with_h_vector([1, 2, 3]) is None


def test_invalid_h_vector_rejected():
    with pytest.raises(PreconditionError):
        lex_ideal_from_h_vector([1, 2, 4])


@pytest.mark.parametrize("h,t", [((1, 2, 1), 1), ((1, 3, 6, 9, 1), 3), ((1, 3, 2), 2)])
def test_pipeline(h, t):
    res = stick_figure_from_h_vector(h, t)
    assert res.passed
    assert len(res.configuration) == sum(h)


def test_pipeline_from_hilbert_function():
    s = integrate([1, 2, 1], 1, 6)
    assert stick_figure_from_o_sequence(s, 1).passed
    with pytest.raises(PreconditionError):
        stick_figure_from_o_sequence([1, 5, 3, 6], 1)
