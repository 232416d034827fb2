import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monolift.corpus import random_monomial_ideal
from monolift.field import GF
from monolift.groebner import GroebnerLimits, buchberger, verify_initial_ideal
from monolift.lifting import cone_matrix, vandermonde_lifting_matrix
from monolift.linalg import rank_exact
from monolift.monomial import DEGLEX, MonomialIdeal, max_exponents, monomials_of_degree
from monolift.poly import Ring

R = Ring(2, 1)


def test_linear_system():
    gb = buchberger([R.parse("x1 + u1"), R.parse("x1 - u1")])
    assert gb.polys == [R.parse("x1"), R.parse("u1")]


def test_reduced_basis_of_twisted_cubic_style_ideal():
    S = Ring(3, 0)
    gb = buchberger([S.parse("x1^2 - x2*x3"), S.parse("x1*x2 - x3^2")])
    assert all(g.leading_term()[1] == 1 for g in gb.polys)
    for g in [S.parse("x1^2 - x2*x3"), S.parse("x1*x2 - x3^2")]:
        assert gb.contains(g)


def test_limits_raise_rather_than_fail(triangle):
    A = vandermonde_lifting_matrix(3, 1, (2, 2, 2))
    rep = verify_initial_ideal(triangle, A, limits=GroebnerLimits(max_reductions=3))
    assert rep.status.startswith("limit") and not rep.passed


def test_cone_matrix_changes_nothing(triangle):
    A = cone_matrix(3, (2, 2, 2), t=1)
    assert verify_initial_ideal(triangle, A).passed


def _membership_by_linear_algebra(gens, f, degree):
    """Is the homogeneous ``f`` in the degree-``degree`` span of monomial multiples of ``gens``?"""
    ring = f.ring
    rows = []
    for g in gens:
        for m in monomials_of_degree(ring.nvars, degree - g.degree):
            rows.append(g * ring.monomial(m))
    basis = monomials_of_degree(ring.nvars, degree)
    mat = [[p.coefficient(b) for b in basis] for p in rows]
    with_f = mat + [[f.coefficient(b) for b in basis]]
    return rank_exact(mat) == rank_exact(with_f)


forms = st.lists(st.tuples(st.integers(-2, 2), st.sampled_from(monomials_of_degree(3, 2))), min_size=1, max_size=3)


@settings(max_examples=30, deadline=None)
@given(st.lists(forms, min_size=1, max_size=2), forms)
def test_normal_form_agrees_with_linear_algebra(gen_terms, f_terms):
    def build(terms):
        p = R.zero()
        for c, m in terms:
            p = p + R.monomial(m, c)
        return p

    gens = [g for g in map(build, gen_terms) if not g.is_zero()]
    f = build(f_terms)
    if not gens or f.is_zero():
        return
    gb = buchberger(gens)
    assert gb.contains(f) == _membership_by_linear_algebra(gens, f, 2)


def test_initial_ideals_over_finite_field():
    rng = random.Random(1)
    for _ in range(5):
        J = random_monomial_ideal(rng, 3, 3, 3)
        A = vandermonde_lifting_matrix(3, 1, max_exponents(J)[0], field=GF(32003))
        assert verify_initial_ideal(J, A).passed


def test_empty_input_rejected():
    with pytest.raises(ValueError):
        buchberger([R.zero()])


def test_initial_ideal_of_gb_is_monomial_ideal():
    gb = buchberger([R.parse("x1*x2 - u1^2"), R.parse("x2^2 - x1*u1")], DEGLEX)
    assert isinstance(gb.initial_ideal(), MonomialIdeal)
