from hypothesis import given, settings
from hypothesis import strategies as st

from monolift.catalog import named_ideal
from monolift.field import GF
from monolift.ideals import (
    BettiTable,
    codimension,
    depth_and_cm,
    graded_betti,
    hilbert_numerator,
    hilbert_series,
    intersect,
    irreducible_decomposition,
    quotient,
)
from monolift.monomial import Monomial, MonomialIdeal, contains, hilbert_function_by_count, monomials_of_degree

N = 3


def exps(top=3):
    return st.tuples(*[st.integers(0, top)] * N).map(Monomial)


def ideals(top=3, max_size=5):
    return st.lists(exps(top).filter(lambda m: m.degree > 0), min_size=1, max_size=max_size).map(
        lambda gs: MonomialIdeal(N, gs))


def _all_monomials(top):
    return [m for d in range(top + 1) for m in monomials_of_degree(N, d)]


@settings(max_examples=50, deadline=None)
@given(ideals(), ideals())
def test_intersection_is_common_membership(I, K):
    both = intersect(I, K)
    for m in _all_monomials(7):
        assert contains(both, m) == (contains(I, m) and contains(K, m))


@settings(max_examples=50, deadline=None)
@given(ideals(), ideals())
def test_quotient_membership(I, K):
    Q = quotient(I, K)
    for m in _all_monomials(5):
        assert contains(Q, m) == all(contains(I, Monomial(a + b for a, b in zip(m, g))) for g in K.gens)


@settings(max_examples=50, deadline=None)
@given(ideals())
def test_decomposition_intersects_back(J):
    comps = irreducible_decomposition(J)
    assert intersect(*[c.ideal(N) for c in comps]) == J
    # irredundant: no component contains another
    assert not any(a is not b and a.contains_component(b) for a in comps for b in comps)
    assert codimension(J) == min(c.codim for c in comps)


@settings(max_examples=50, deadline=None)
@given(ideals(top=2))
def test_hilbert_numerator_methods_agree(J):
    assert hilbert_numerator(J, "subsets") == hilbert_numerator(J, "recursive")
    data = hilbert_series(J)
    assert data.hilbert_values(6) == hilbert_function_by_count(J, 6)


@settings(max_examples=30, deadline=None)
@given(ideals(top=2, max_size=4))
def test_betti_euler_identity(J):
    table = graded_betti(J)
    assert table.euler_numerator() == list(hilbert_numerator(J))


def test_triangle_invariants(triangle):
    assert graded_betti(triangle) == BettiTable({(1, 3): 3, (2, 5): 3, (3, 6): 1})
    assert graded_betti(triangle, GF(2)) == graded_betti(triangle)
    d = depth_and_cm(triangle)
    assert (d.pd, d.depth, d.dim, d.is_cm) == (3, 0, 1, False)


def test_known_decomposition():
    J = named_ideal("lines-through-point")
    got = sorted(str(c) for c in irreducible_decomposition(J))
    assert got == ["(x1, x2^2)", "(x1, x2^3, x3)", "(x1^2, x2)", "(x1^2, x2^2, x3)", "(x1^3, x2, x3)"]


def test_h_vectors_of_named_ideals():
    assert list(hilbert_series(named_ideal("almost-lex")).h_vector) == [1, 3, 6, 9, 1]
    assert list(hilbert_series(named_ideal("degree-three-gap")).h_vector) == [1, 3, 6, 4]


def test_cohen_macaulay_flags():
    assert depth_and_cm(named_ideal("almost-lex")).is_cm
    assert not depth_and_cm(named_ideal("two-skew-lines")).is_cm
    assert not depth_and_cm(named_ideal("line-and-two-points")).is_cm


def test_betti_json_round_trip(triangle):
    table = graded_betti(triangle)
    assert BettiTable.from_json(table.to_json()) == table
