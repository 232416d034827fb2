import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monolift.catalog import named_ideal
from monolift.configuration import (
    Configuration,
    check_condition2,
    check_condition3,
    components_artinian,
    components_general,
    is_generalized_stick_figure,
    monomial_ideal_from_configuration,
    residual_check,
)
from monolift.errors import PreconditionError
from monolift.ideals import hilbert_series, is_equidimensional
from monolift.monomial import Monomial, MonomialIdeal, is_lex_segment, max_exponents
from monolift.osequence import lex_ideal_from_h_vector

N = 3


def artinian(top=3):
    powers = st.tuples(*[st.integers(1, top)] * N)
    extra = st.lists(st.tuples(*[st.integers(0, top - 1)] * N), max_size=4)

    def build(p, es):
        gens = [Monomial(a if k == j else 0 for k in range(N)) for j, a in enumerate(p)]
        gens += [Monomial(e) for e in es if sum(e) > 0]
        return MonomialIdeal(N, gens)

    return st.builds(build, powers, extra)


def general_ideals():
    m = st.tuples(*[st.integers(0, 2)] * N).map(Monomial).filter(lambda g: g.degree > 0)
    return st.lists(m, min_size=1, max_size=4).map(lambda gs: MonomialIdeal(N, gs))


def test_rendering_of_first_panel(almost_lex_configuration):
    first = almost_lex_configuration.render().split("\n\n")[0].splitlines()
    assert first[0] == "L1,1-plane"
    assert first[2].split()[1:] == ["*", "*", "*", "*"]
    assert first[5].split()[1:] == ["*", ".", ".", "."]


def test_json_round_trip(almost_lex_configuration):
    V = almost_lex_configuration
    assert Configuration.from_json(V.to_json()) == V
    W = components_general(named_ideal("lines-through-point"))
    assert Configuration.from_json(W.to_json()) == W


def test_grid_validation():
    with pytest.raises(ValueError):
        Configuration.from_indices([(3, 1)], (2, 2))
    with pytest.raises(ValueError):
        Configuration(2, 1, (((1, 1), (1, 2)),))


def test_condition2_failure_blocks_inversion():
    V = Configuration.from_indices([(1, 1), (2, 2)], (2, 2))
    assert not check_condition2(V)
    with pytest.raises(PreconditionError):
        monomial_ideal_from_configuration(V)


def test_empty_and_full_grids():
    empty = Configuration.from_indices([], (2, 2))
    assert monomial_ideal_from_configuration(empty).is_unit()
    full = Configuration.from_indices([(a, b) for a in (1, 2) for b in (1, 2)], (2, 2))
    assert monomial_ideal_from_configuration(full) == MonomialIdeal(2, [(2, 0), (0, 2)])
    # the full grid is not a lex-segment configuration: (x1^2, x2^2) is not lex
    assert not check_condition3(full)[0]


def test_non_artinian_rejected(triangle):
    with pytest.raises(PreconditionError):
        components_artinian(triangle)


@settings(max_examples=60, deadline=None)
@given(artinian())
def test_components_count_and_inversion(J):
    V = components_artinian(J)
    assert len(V) == sum(hilbert_series(J).h_vector)
    assert check_condition2(V)
    assert monomial_ideal_from_configuration(V) == J


@settings(max_examples=60, deadline=None)
@given(artinian())
def test_condition3_detects_lex_segments(J):
    V = components_artinian(J)
    assert check_condition3(V)[0] == is_lex_segment(J)


@settings(max_examples=30, deadline=None)
@given(artinian(), st.integers(1, 3))
def test_artinian_lifts_are_stick_figures(J, t):
    assert is_generalized_stick_figure(components_artinian(J, t=t)).passed


@settings(max_examples=40, deadline=None)
@given(general_ideals())
def test_equidimensionality_transfers(J):
    V = components_general(J)
    if is_equidimensional(J):
        assert V.is_equidimensional()


@settings(max_examples=40, deadline=None)
@given(artinian())
def test_residual_is_the_reversed_complement(J):
    assert residual_check(J).passed


def test_lex_configurations_satisfy_condition3():
    for h in [(1, 2, 1), (1, 3, 6, 9, 1), (1, 3, 4, 2)]:
        J = lex_ideal_from_h_vector(h)
        assert check_condition3(components_artinian(J, max_exponents(J)[0]))[0]
