from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from monolift.field import GF, QQ, field_from_name
from monolift.linalg import rank_bareiss, rank_exact, rank_gfp, rank_mod_p


def fraction_rank(rows):
    """Textbook Gaussian elimination over the rationals."""
    M = [[Fraction(x) for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(M[0]) if M else 0
    while rank < len(M) and col < ncols:
        piv = next((r for r in range(rank, len(M)) if M[r][col]), None)
        if piv is None:
            col += 1
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][col]:
                f = M[r][col] / M[rank][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        rank += 1
        col += 1
    return rank


matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=6))


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_ranks_agree_with_oracle(rows):
    r = fraction_rank(rows)
    assert rank_bareiss(rows) == r
    assert rank_exact(rows, QQ) == r
    assert rank_mod_p(rows) <= r
    assert rank_mod_p(rows) == r  # tiny integer entries never vanish mod a 31-bit prime


def test_rank_depends_on_characteristic():
    rows = [[1, 1], [1, -1]]
    assert rank_exact(rows, QQ) == 2
    assert rank_gfp(rows, 2) == 1
    assert rank_exact(rows, GF(2)) == 1


def test_rational_entries():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]]
    assert rank_bareiss(rows) == 1


def test_field_names():
    assert field_from_name("QQ") == QQ
    assert field_from_name("GF(7)") == GF(7)
    assert GF(7)(10) == 3
    assert GF(7).div(1, 3) == 5
