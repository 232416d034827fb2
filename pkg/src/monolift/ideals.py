"""Intersection, quotient, decomposition and homological invariants of monomial ideals."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from math import comb

from .errors import PreconditionError, ResourceLimitError
from .field import QQ
from .linalg import rank_exact
from .monomial import Monomial, MonomialIdeal, gcd, standard_monomials

BETTI_GENERATOR_LIMIT = 14
SUBSET_GENERATOR_LIMIT = 20


def _check_rings(ideals):
    ns = {J.n for J in ideals}
    if len(ns) != 1:
        raise ValueError(f"ideals live in different rings: {sorted(ns)}")


def _lcm2(a, b):
    return Monomial(max(x, y) for x, y in zip(a, b))


def intersect(*ideals):
    """Intersection, generated by lcm's of generator tuples (done pairwise)."""
    if not ideals:
        raise ValueError("intersect needs at least one ideal")
    _check_rings(ideals)

    def pair(I, K):
        return MonomialIdeal(I.n, [_lcm2(a, b) for a in I.gens for b in K.gens])

    return reduce(pair, ideals)


def quotient(J, K):
    """``(J : K)``; the quotient by the zero ideal is the unit ideal."""
    _check_rings([J, K])
    if K.is_zero():
        return MonomialIdeal.unit(J.n)
    parts = [MonomialIdeal(J.n, [m / gcd(m, g) for m in J.gens]) for g in K.gens]
    return intersect(*parts)


# -- irreducible decomposition ------------------------------------------------


@dataclass(frozen=True, order=True)
class IrreducibleComponent:
    """``(X_{j1}^{a1}, ..., X_{jp}^{ap})``, stored as sorted ``(j, a)`` pairs with 1-based ``j``."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(sorted((int(j), int(a)) for j, a in self.entries))
        if not entries:
            raise ValueError("an irreducible component needs at least one variable")
        if any(a < 1 for _, a in entries):
            raise ValueError("component exponents must be positive")
        if len({j for j, _ in entries}) != len(entries):
            raise ValueError("repeated variable in component")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_mapping(cls, mapping):
        return cls(tuple(mapping.items()))

    @property
    def variables(self):
        return tuple(j for j, _ in self.entries)

    @property
    def codim(self):
        return len(self.entries)

    def exponent(self, j):
        return dict(self.entries).get(j, 0)

    def ideal(self, n):
        gens = []
        for j, a in self.entries:
            e = [0] * n
            e[j - 1] = a
            gens.append(Monomial(e))
        return MonomialIdeal(n, gens)

    def contains_component(self, other):
        """True iff ``other`` (as an ideal) is contained in ``self``."""
        mine = dict(self.entries)
        return all(j in mine and mine[j] <= a for j, a in other.entries)

    def __str__(self):
        parts = [f"x{j}" if a == 1 else f"x{j}^{a}" for j, a in self.entries]
        return "(" + ", ".join(parts) + ")"


def _split(gens, n, memo):
    key = frozenset(gens)
    if key in memo:
        return memo[key]
    for m in gens:
        supp = m.support()
        if len(supp) > 1:
            j = supp[0]
            left = [0] * n
            left[j] = m[j]
            left = Monomial(left)
            right = m / left
            out = _split(MonomialIdeal(n, list(gens) + [left]).gens, n, memo)
            out = out | _split(MonomialIdeal(n, list(gens) + [right]).gens, n, memo)
            break
    else:
        out = frozenset([IrreducibleComponent(tuple((g.support()[0] + 1, g[g.support()[0]]) for g in gens))])
    memo[key] = out
    return out


def irredundant(components):
    comps = sorted(set(components))
    # Q_i is redundant when it contains some other Q_k
    return [Q for Q in comps if not any(P != Q and Q.contains_component(P) for P in comps)]


def irreducible_decomposition(J):
    """Irredundant irreducible components of ``J``, sorted."""
    if J.is_zero() or J.is_unit():
        raise PreconditionError("irreducible decomposition needs a proper nonzero ideal")
    return irredundant(_split(J.gens, J.n, {}))


def primary_components(J):
    """Group the irreducible components by their variable sets.

    Returns ``[(variables, primary ideal)]``; each primary ideal is the
    intersection of the irreducible components on those variables.
    """
    groups = defaultdict(list)
    for Q in irreducible_decomposition(J):
        groups[Q.variables].append(Q.ideal(J.n))
    return [(v, intersect(*qs)) for v, qs in sorted(groups.items())]


def codimension(J):
    """Smallest number of variables meeting the support of every generator."""
    if J.is_unit():
        raise PreconditionError("the unit ideal has no codimension")
    if J.is_zero():
        return 0
    supports = [frozenset(g.support()) for g in J.gens]
    for k in range(1, J.n + 1):
        for S in combinations(range(J.n), k):
            S = frozenset(S)
            if all(s & S for s in supports):
                return k
    return J.n


def is_equidimensional(J):
    if J.is_zero():
        return True
    return len({Q.codim for Q in irreducible_decomposition(J)}) == 1


# -- Hilbert series -----------------------------------------------------------


def _poly_sub(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _shift(p, k):
    return [0] * k + list(p)


def _numerator_subsets(gens, n):
    coeffs = defaultdict(int)
    r = len(gens)

    def walk(start, current, size):
        coeffs[sum(current)] += -1 if size % 2 else 1
        for i in range(start, r):
            walk(i + 1, _lcm2(current, gens[i]), size + 1)

    walk(0, Monomial.one(n), 0)
    top = max(coeffs)
    return _trim([coeffs.get(d, 0) for d in range(top + 1)])


def _numerator_recursive(gens, n, memo):
    key = frozenset(gens)
    if key in memo:
        return memo[key]
    if not gens:
        out = [1]
    elif _pairwise_coprime(gens):
        out = [1]
        for g in gens:
            out = _poly_sub(out, _shift(out, g.degree))
    else:
        gens = sorted(gens, key=lambda g: (g.degree, tuple(g)))
        m, rest = gens[-1], gens[:-1]
        colon = MonomialIdeal(n, [g / gcd(g, m) for g in rest]).gens
        out = _poly_sub(_numerator_recursive(rest, n, memo), _shift(_numerator_recursive(list(colon), n, memo), m.degree))
    memo[key] = out
    return out


def _pairwise_coprime(gens):
    seen = set()
    for g in gens:
        s = set(g.support())
        if s & seen:
            return False
        seen |= s
    return True


def _divide_one_minus_t(p):
    """Quotient of ``p`` by ``1 - t`` if exact, else ``None``."""
    if sum(p) != 0:
        return None
    q, acc = [], 0
    for c in p[:-1]:
        acc += c
        q.append(acc)
    return _trim(q) if q else [0]


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series ``numerator / (1 - t)^n`` of ``S/J``.

    ``h_vector`` is the numerator after cancelling every factor ``1 - t``,
    so the series is ``h(t) / (1 - t)^dim``.
    """

    n: int
    numerator: tuple
    dim: int
    h_vector: tuple

    @property
    def degree(self):
        return sum(self.h_vector)

    def hilbert_function(self, d):
        if d < 0:
            return 0
        if self.dim == 0:
            return self.h_vector[d] if d < len(self.h_vector) else 0
        return sum(c * comb(d - i + self.dim - 1, self.dim - 1) for i, c in enumerate(self.h_vector) if i <= d)

    def hilbert_values(self, top):
        return [self.hilbert_function(d) for d in range(top + 1)]

    def to_json(self):
        return {"hilbert_numerator": list(self.numerator), "h_vector": list(self.h_vector), "n": self.n, "dim": self.dim}


def hilbert_numerator(J, method="auto", subset_limit=SUBSET_GENERATOR_LIMIT):
    """Coefficients of ``K(t)`` with ``HS(S/J) = K(t) / (1 - t)^n``."""
    if J.is_zero():
        return [1]
    gens = list(J.gens)
    if method == "auto":
        method = "subsets" if len(gens) <= 10 else "recursive"
    if method == "subsets":
        if len(gens) > subset_limit:
            raise ResourceLimitError(f"{len(gens)} generators exceed the subset limit {subset_limit}")
        return _numerator_subsets(gens, J.n)
    if method == "recursive":
        return _numerator_recursive(gens, J.n, {})
    raise ValueError(f"unknown method {method!r}")


def hilbert_series(J, method="auto", subset_limit=SUBSET_GENERATOR_LIMIT):
    K = hilbert_numerator(J, method, subset_limit)
    if J.is_unit():
        return HilbertData(J.n, tuple(K), 0, (0,))
    h, cancelled = list(K), 0
    while cancelled < J.n:
        q = _divide_one_minus_t(h)
        if q is None:
            break
        h, cancelled = q, cancelled + 1
    return HilbertData(J.n, tuple(K), J.n - cancelled, tuple(h))


def h_vector_by_count(J):
    """Degree histogram of the standard monomials of an Artinian ``J``."""
    hist = []
    for m in standard_monomials(J):
        while len(hist) <= m.degree:
            hist.append(0)
        hist[m.degree] += 1
    return tuple(hist)


# -- graded Betti numbers -----------------------------------------------------


@dataclass
class BettiTable:
    """Graded Betti numbers ``beta[i, j]`` of ``S/J`` for ``i >= 1``.

    ``beta[0, 0] = 1`` for every proper ideal and is not stored.
    """

    entries: dict = field(default_factory=dict)

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.nonzero() == other.nonzero()

    def nonzero(self):
        return {k: v for k, v in self.entries.items() if v}

    @property
    def projective_dimension(self):
        return max((i for (i, _), b in self.entries.items() if b), default=0)

    def totals(self):
        out = defaultdict(int)
        for (i, _), b in self.entries.items():
            out[i] += b
        return dict(sorted(out.items()))

    def shifts(self, i):
        return sorted(j for (k, j), b in self.entries.items() if k == i and b)

    def euler_numerator(self):
        """``1 + sum (-1)^i beta_{i,j} t^j``."""
        top = max((j for (_, j) in self.entries), default=0)
        out = [0] * (top + 1)
        out[0] = 1
        for (i, j), b in self.entries.items():
            out[j] += (-1) ** i * b
        return _trim(out)

    def to_json(self):
        return {"betti": [[i, j, b] for (i, j), b in sorted(self.nonzero().items())]}

    @classmethod
    def from_json(cls, data):
        return cls({(i, j): b for i, j, b in data["betti"]})

    def __str__(self):
        return " ".join(f"b{i},{j}={b}" for (i, j), b in sorted(self.nonzero().items()))


def taylor_subsets_by_lcm(gens):
    """Map each lcm monomial to the bitmasks of generator subsets having it."""
    n = len(gens[0])
    groups = defaultdict(list)
    r = len(gens)

    def walk(start, mask, current):
        groups[current].append(mask)
        for i in range(start, r):
            walk(i + 1, mask | (1 << i), _lcm2(current, gens[i]))

    walk(0, 0, Monomial.one(n))
    return groups


def _face_boundary(masks_hi, masks_lo):
    """Signed incidence between subsets ``A`` (rows) and ``A`` minus one element (columns)."""
    index = {m: k for k, m in enumerate(masks_lo)}
    rows = []
    for A in masks_hi:
        row = [0] * len(masks_lo)
        pos, bit, b = 0, 0, A
        while b:
            if b & 1:
                pos += 1
                B = A & ~(1 << bit)
                if B in index:
                    row[index[B]] = -1 if pos % 2 else 1
            b >>= 1
            bit += 1
        rows.append(row)
    return rows


def graded_betti(J, field=QQ, limit=BETTI_GENERATOR_LIMIT):
    """Betti numbers of ``S/J`` as Tor ranks of the Taylor complex tensored with ``k``.

    Tensoring with ``k`` kills every entry with a nonconstant ratio, so the
    complex splits by the lcm multidegree ``mu``; ``beta[i, deg mu]`` collects
    the homology of the piece spanned by subsets with lcm ``mu``.
    """
    if J.is_unit():
        raise PreconditionError("the unit ideal has no resolution of S/J")
    if J.is_zero():
        return BettiTable({})
    if len(J.gens) > limit:
        raise ResourceLimitError(f"{len(J.gens)} generators exceed the Taylor limit {limit}")
    entries = defaultdict(int)
    for mu, masks in taylor_subsets_by_lcm(list(J.gens)).items():
        by_size = defaultdict(list)
        for A in masks:
            by_size[bin(A).count("1")].append(A)
        ranks = {}
        for s in by_size:
            if s - 1 in by_size:
                ranks[s] = rank_exact(_face_boundary(by_size[s], by_size[s - 1]), field)
            else:
                ranks[s] = 0
        for s, group in by_size.items():
            if s == 0:
                continue
            h = len(group) - ranks[s] - ranks.get(s + 1, 0)
            if h:
                entries[(s, mu.degree)] += h
    return BettiTable(dict(entries))


@dataclass(frozen=True)
class DepthData:
    pd: int
    depth: int
    dim: int
    is_cm: bool


def depth_and_cm(J, field=QQ):
    """Projective dimension, depth and Krull dimension of ``S/J``."""
    if J.is_unit():
        raise PreconditionError("S/J is zero for the unit ideal")
    if J.is_zero():
        return DepthData(0, J.n, J.n, True)
    pd = graded_betti(J, field).projective_dimension
    depth = J.n - pd
    dim = J.n - codimension(J)
    return DepthData(pd, depth, dim, depth == dim)
