"""Exact ranks of scalar matrices.

``rank_exact`` is fraction-free Bareiss elimination over the integers (for
rational input) or plain elimination in GF(p).  ``rank_mod_p`` reduces
modulo a large prime with numpy; since reduction mod p cannot increase the
rank of a rational matrix, its value is a certified *lower bound* on the
rational rank.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm as _ilcm

import numpy as np

from .field import LARGE_PRIME, QQ


def _integral_row(row):
    dens = [x.denominator for x in row if isinstance(x, Fraction) and x.denominator != 1]
    if not dens:
        return [int(x) for x in row]
    scale = _ilcm(*dens)
    return [int(x * scale) for x in row]


def rank_bareiss(matrix):
    """Rank over the rationals by fraction-free elimination."""
    A = [_integral_row(r) for r in matrix if any(r)]
    if not A:
        return 0
    m, ncols = len(A), len(A[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for i in range(rank, m):
            if A[i][c]:
                piv = i
                break
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        prow = A[rank]
        p = prow[c]
        for i in range(rank + 1, m):
            row = A[i]
            a = row[c]
            if a:
                A[i] = [0] * (c + 1) + [(p * row[k] - a * prow[k]) // prev for k in range(c + 1, ncols)]
            elif p != prev:
                A[i] = [0] * (c + 1) + [(p * row[k]) // prev for k in range(c + 1, ncols)]
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def rank_gfp(matrix, p):
    """Exact rank over GF(p) in pure Python."""
    A = [[x % p for x in row] for row in matrix]
    A = [r for r in A if any(r)]
    if not A:
        return 0
    m, ncols = len(A), len(A[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, m) if A[i][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = pow(A[rank][c], -1, p)
        prow = [(x * inv) % p for x in A[rank]]
        A[rank] = prow
        for i in range(rank + 1, m):
            a = A[i][c]
            if a:
                row = A[i]
                A[i] = [(row[k] - a * prow[k]) % p for k in range(ncols)]
        rank += 1
        if rank == m:
            break
    return rank


def rank_exact(matrix, field=QQ):
    if field.is_rational:
        return rank_bareiss(matrix)
    return rank_gfp([[field(x) for x in row] for row in matrix], field.characteristic)


def to_residues(matrix, p=LARGE_PRIME):
    """Reduce a rational matrix mod ``p`` into an int64 array."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    out = np.zeros((rows, cols), dtype=np.int64)
    for i, row in enumerate(matrix):
        for j, x in enumerate(row):
            if x:
                if isinstance(x, Fraction):
                    if x.denominator % p == 0:
                        raise ZeroDivisionError(f"denominator of {x} vanishes mod {p}")
                    out[i, j] = x.numerator * pow(x.denominator, -1, p) % p
                else:
                    out[i, j] = int(x) % p
    return out


def rank_mod_p(A, p=LARGE_PRIME):
    """Rank of an integer array over GF(p), ``p < 2**31``; vectorised elimination."""
    A = np.array(A, dtype=np.int64, copy=True) % p
    if A.size == 0:
        return 0
    if p >= 2**31:
        raise ValueError("p must be below 2**31 so products fit in int64")
    m, ncols = A.shape
    rank = 0
    for c in range(ncols):
        if rank == m:
            break
        col = A[rank:, c]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            A[[rank, piv], c:] = A[[piv, rank], c:]
        inv = pow(int(A[rank, c]), -1, p)
        A[rank, c:] = (A[rank, c:] * inv) % p
        below = rank + 1 + np.flatnonzero(A[rank + 1:, c])
        if below.size:
            factors = A[below, c][:, None]
            A[below, c:] = (A[below, c:] - (factors * A[rank, c:]) % p) % p
        rank += 1
    return rank
