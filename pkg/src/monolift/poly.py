"""Sparse polynomials over an exact field, linear forms and graded polynomial matrices.

Variables are ``x1..xn`` followed by ``u1..ut``; a term is keyed by its plain
exponent tuple.  Coefficients are Python ints / Fractions for the rationals and
reduced ints for GF(p).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import grammar
from .field import LARGE_PRIME, QQ
from .linalg import rank_exact, rank_mod_p
from .monomial import DEGLEX, Monomial, monomials_of_degree


@dataclass(frozen=True)
class Ring:
    """``k[x1..xn, u1..ut]``."""

    n: int
    t: int = 0
    field: object = QQ

    @property
    def nvars(self):
        return self.n + self.t

    def var_name(self, k):
        """Name of the variable at 0-based position ``k``."""
        return f"x{k + 1}" if k < self.n else f"u{k - self.n + 1}"

    def var_index(self, name):
        kind, num = name[0], int(name[1:])
        if kind == "x" and 1 <= num <= self.n:
            return num - 1
        if kind == "u" and 1 <= num <= self.t:
            return self.n + num - 1
        raise ValueError(f"{name} is not a variable of {self}")

    def zero(self):
        return SparsePoly(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.field(c)
        return SparsePoly(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name):
        e = [0] * self.nvars
        e[self.var_index(name)] = 1
        return SparsePoly(self, {tuple(e): 1})

    def x(self, j):
        return self.var(f"x{j}")

    def u(self, i):
        return self.var(f"u{i}")

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError(f"exponent vector of length {len(exps)} in a ring with {self.nvars} variables")
        c = self.field(coeff)
        return SparsePoly(self, {exps: c} if c else {})

    def parse(self, text):
        terms = grammar.parse_terms(text)
        nx, nu = grammar.ambient_size([terms])
        if nx > self.n or nu > self.t:
            raise ValueError(f"{text!r} uses variables outside {self}")
        out = {}
        for c, powers in terms:
            e = grammar.exponent_vector(powers, self.n, self.t)
            out[e] = out.get(e, 0) + c
        return SparsePoly(self, out)

    def with_field(self, field):
        return Ring(self.n, self.t, field)

    def __str__(self):
        return f"{self.field.name}[x1..x{self.n}" + (f", u1..u{self.t}]" if self.t else "]")


class SparsePoly:
    """Immutable sparse polynomial ``{exponent tuple: nonzero coefficient}``."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        F = ring.field
        clean = {}
        for e, c in terms.items():
            c = F(c)
            if c:
                clean[tuple(e)] = c
        self.ring = ring
        self.terms = clean

    @classmethod
    def _raw(cls, ring, terms):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        return obj

    def _coerce(self, other):
        if isinstance(other, SparsePoly):
            if other.ring.nvars != self.ring.nvars or other.ring.field != self.ring.field:
                raise ValueError(f"ambient mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        F = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = F(out.get(e, 0) + c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return SparsePoly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return SparsePoly._raw(self.ring, {e: F(-c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c):
        return self * self.ring.constant(c)

    @property
    def degree(self):
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, 0)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def sorted_terms(self, order=DEGLEX):
        return sorted(self.terms.items(), key=lambda kv: order.key(kv[0]), reverse=True)

    def leading_term(self, order=DEGLEX):
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return Monomial(e), self.terms[e]

    def homogeneous_part(self, d):
        return SparsePoly._raw(self.ring, {e: c for e, c in self.terms.items() if sum(e) == d})

    def substitute(self, assignments):
        """Replace variables (by name or 0-based index) with scalars or polynomials."""
        ring = self.ring
        subs = {}
        for key, val in assignments.items():
            k = ring.var_index(key) if isinstance(key, str) else key
            subs[k] = val if isinstance(val, SparsePoly) else ring.constant(val)
        for v in subs.values():
            if v.ring.nvars != ring.nvars:
                raise ValueError("substituted polynomial lives in a different ring")
        cache = {}
        out = ring.zero()
        for e, c in self.terms.items():
            kept = [0 if k in subs else a for k, a in enumerate(e)]
            term = ring.monomial(kept, c)
            for k, a in enumerate(e):
                if a and k in subs:
                    if (k, a) not in cache:
                        cache[(k, a)] = subs[k] ** a
                    term = term * cache[(k, a)]
            out = out + term
        return out

    def evaluate(self, point, p=None):
        """Value at a full point; reduced mod ``p`` when given."""
        if len(point) != self.ring.nvars:
            raise ValueError("point has the wrong number of coordinates")
        total = 0
        for e, c in self.terms.items():
            v = c if p is None else _residue(c, p)
            for x, a in zip(point, e):
                if a:
                    v = v * pow(x, a, p) if p else v * x**a
            total += v
        return total % p if p else self.ring.field(total)

    def to_text(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = grammar.format_exponents(e, self.ring.n)
            neg = c < 0 if not self.ring.field.characteristic else False
            mag = -c if neg else c
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"SparsePoly({self.to_text()!r})"


def _residue(c, p):
    if isinstance(c, Fraction):
        return c.numerator * pow(c.denominator, -1, p) % p
    return c % p


def poly_add(a, b):
    return a + b


def poly_mul(a, b):
    return a * b


def substitute(p, assignments):
    return p.substitute(assignments)


@dataclass(frozen=True)
class LinearForm:
    """A nonzero degree-one form, stored as its coefficient vector."""

    ring: Ring
    coeffs: tuple

    def __post_init__(self):
        F = self.ring.field
        coeffs = tuple(F(c) for c in self.coeffs)
        if len(coeffs) != self.ring.nvars:
            raise ValueError("coefficient vector has the wrong length")
        if not any(coeffs):
            raise ValueError("a linear form must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_poly(cls, p):
        if p.is_zero() or any(sum(e) != 1 for e in p.terms):
            raise ValueError(f"{p} is not a nonzero linear form")
        coeffs = [0] * p.ring.nvars
        for e, c in p.terms.items():
            coeffs[e.index(1)] = c
        return cls(p.ring, tuple(coeffs))

    @classmethod
    def parse(cls, ring, text):
        return cls.from_poly(ring.parse(text))

    def to_poly(self):
        terms = {}
        for k, c in enumerate(self.coeffs):
            if c:
                e = [0] * self.ring.nvars
                e[k] = 1
                terms[tuple(e)] = c
        return SparsePoly._raw(self.ring, terms)

    def coefficient(self, name):
        return self.coeffs[self.ring.var_index(name)]

    def support(self):
        return tuple(k for k, c in enumerate(self.coeffs) if c)

    def is_proportional(self, other):
        a, b = self.coeffs, other.coeffs
        return all(a[i] * b[j] == a[j] * b[i] for i in range(len(a)) for j in range(i + 1, len(a)))

    def value(self, point, p=None):
        if p:
            return sum(_residue(c, p) * x for c, x in zip(self.coeffs, point)) % p
        return sum(c * x for c, x in zip(self.coeffs, point))

    def __str__(self):
        return self.to_poly().to_text()


class PolyMatrix:
    """A graded map ``F_cols -> F_rows`` of free modules.

    ``entries`` maps ``(row, col)`` to nonzero polynomials; entry ``(a, b)`` is
    homogeneous of degree ``col_shifts[b] - row_shifts[a]``.
    """

    __slots__ = ("ring", "nrows", "ncols", "entries", "row_shifts", "col_shifts")

    def __init__(self, ring, nrows, ncols, entries=None, row_shifts=None, col_shifts=None):
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {k: v for k, v in (entries or {}).items() if not v.is_zero()}
        self.row_shifts = tuple(row_shifts) if row_shifts is not None else (0,) * nrows
        self.col_shifts = tuple(col_shifts) if col_shifts is not None else (0,) * ncols
        if len(self.row_shifts) != nrows or len(self.col_shifts) != ncols:
            raise ValueError("shift vectors do not match the shape")

    @classmethod
    def from_rows(cls, ring, rows, row_shifts=None, col_shifts=None):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        entries = {}
        for a, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            for b, x in enumerate(row):
                p = ring.parse(x) if isinstance(x, str) else x if isinstance(x, SparsePoly) else ring.constant(x)
                if not p.is_zero():
                    entries[(a, b)] = p
        return cls(ring, nrows, ncols, entries, row_shifts, col_shifts)

    @classmethod
    def identity(cls, ring, size, shifts=None):
        one = ring.one()
        return cls(ring, size, size, {(a, a): one for a in range(size)}, shifts, shifts)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, key):
        return self.entries.get(key, self.ring.zero())

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.shape == other.shape and self.entries == other.entries

    def is_homogeneous(self):
        for (a, b), p in self.entries.items():
            d = self.col_shifts[b] - self.row_shifts[a]
            if any(sum(e) != d for e in p.terms):
                return False
        return True

    def to_rows(self):
        return [[self[(a, b)] for b in range(self.ncols)] for a in range(self.nrows)]

    def map_entries(self, fn):
        return PolyMatrix(self.ring, self.nrows, self.ncols, {k: fn(v) for k, v in self.entries.items()},
                          self.row_shifts, self.col_shifts)

    def to_json(self):
        return {
            "rows": [[str(p) for p in row] for row in self.to_rows()],
            "row_shifts": list(self.row_shifts),
            "col_shifts": list(self.col_shifts),
        }

    @classmethod
    def from_json(cls, ring, data):
        return cls.from_rows(ring, data["rows"], data["row_shifts"], data["col_shifts"])

    def __str__(self):
        return "\n".join("[" + ", ".join(str(p) for p in row) + "]" for row in self.to_rows())


def matrix_product(M1, M2):
    if M1.ncols != M2.nrows:
        raise ValueError(f"cannot multiply {M1.shape} by {M2.shape}")
    if M1.col_shifts != M2.row_shifts:
        raise ValueError("inner degree shifts do not agree")
    by_row = {}
    for (a, b), p in M2.entries.items():
        by_row.setdefault(a, []).append((b, p))
    out = {}
    for (a, k), p in M1.entries.items():
        for b, q in by_row.get(k, ()):
            prod = p * q
            out[(a, b)] = out[(a, b)] + prod if (a, b) in out else prod
    return PolyMatrix(M1.ring, M1.nrows, M2.ncols, out, M1.row_shifts, M2.col_shifts)


# -- graded slices -------------------------------------------------------------


def slice_basis(ring, shifts, d):
    """Basis of the degree-``d`` piece of ``sum_b R(-shifts[b])`` as ``(b, exponents)``."""
    return [(b, m) for b, s in enumerate(shifts) for m in monomials_of_degree(ring.nvars, d - s)]


def _slice_triplets(M, d):
    rows = slice_basis(M.ring, M.row_shifts, d)
    cols = slice_basis(M.ring, M.col_shifts, d)
    row_index = {key: i for i, key in enumerate(rows)}
    by_col = {}
    for (a, b), p in M.entries.items():
        by_col.setdefault(b, []).append((a, p))
    triplets = []
    for j, (b, mu) in enumerate(cols):
        for a, p in by_col.get(b, ()):
            for e, c in p.terms.items():
                target = (a, tuple(x + y for x, y in zip(e, mu)))
                triplets.append((row_index[target], j, c))
    return len(rows), len(cols), triplets


def graded_slice(M, d):
    """Scalar matrix of ``M`` restricted to degree ``d`` (rows: target basis, columns: source basis).

    Bases are ordered by free-module index, then descending degree-lex.
    """
    nr, nc, triplets = _slice_triplets(M, d)
    out = [[0] * nc for _ in range(nr)]
    for i, j, c in triplets:
        out[i][j] += c
    return out


def graded_slice_mod_p(M, d, p=LARGE_PRIME):
    nr, nc, triplets = _slice_triplets(M, d)
    out = np.zeros((nr, nc), dtype=np.int64)
    for i, j, c in triplets:
        out[i, j] = (out[i, j] + _residue(c, p)) % p
    return out


def slice_rank(M, d, exact=True, p=LARGE_PRIME):
    """Rank of the degree-``d`` slice; the modular value is a lower bound over the rationals."""
    if exact:
        return rank_exact(graded_slice(M, d), M.ring.field)
    if M.ring.field.characteristic:
        p = M.ring.field.characteristic
    return rank_mod_p(graded_slice_mod_p(M, d, p), p)


def scalar_product(A, B):
    """Plain product of two scalar matrices given as lists of rows."""
    if not A or not B:
        return [[0] * (len(B[0]) if B else 0) for _ in A]
    cols = list(zip(*B))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in A]


def randomized_rank(M, seed=0, trials=3, p=LARGE_PRIME):
    """Max rank over ``trials`` random evaluations mod ``p``: a lower bound on the generic rank."""
    if M.ring.field.characteristic:
        p = M.ring.field.characteristic
    rng = random.Random(seed)
    best = 0
    for _ in range(trials):
        point = [rng.randrange(p) for _ in range(M.ring.nvars)]
        A = np.zeros((M.nrows, M.ncols), dtype=np.int64)
        for (a, b), poly in M.entries.items():
            A[a, b] = poly.evaluate(point, p)
        best = max(best, rank_mod_p(A, p))
    return best
