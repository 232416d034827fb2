"""Monomials, monomial ideals and the degree-lex order.

A monomial is its exponent vector.  ``Monomial`` subclasses ``tuple`` so it
hashes and compares like one; the positions are ``x1..xn`` followed by any
``u``-variables of a larger ambient ring.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement

from . import grammar
from .errors import ParseError, PreconditionError

MAX_EXPONENT = 2**31 - 1


class Monomial(tuple):
    __slots__ = ()

    def __new__(cls, exponents):
        exps = tuple(int(e) for e in exponents)
        if not exps:
            raise ValueError("a monomial needs at least one variable")
        for e in exps:
            if e < 0:
                raise ValueError(f"negative exponent in {exps}")
            if e > MAX_EXPONENT:
                raise OverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
        return super().__new__(cls, exps)

    def __getnewargs__(self):
        return (tuple(self),)

    @classmethod
    def one(cls, n):
        return cls((0,) * n)

    @classmethod
    def variable(cls, j, n):
        """``X_j`` (1-based) in ``n`` variables."""
        exps = [0] * n
        exps[j - 1] = 1
        return cls(exps)

    @property
    def n(self):
        return len(self)

    @property
    def degree(self):
        return sum(self)

    def __mul__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        _check_lengths(self, other)
        return Monomial(a + b for a, b in zip(self, other))

    def __truediv__(self, other):
        if not divides(other, self):
            raise ValueError(f"{format_monomial(other)} does not divide {format_monomial(self)}")
        return Monomial(a - b for a, b in zip(self, other))

    def __pow__(self, k):
        return Monomial(a * k for a in self)

    def support(self):
        return tuple(j for j, e in enumerate(self) if e)

    def pure_power_index(self):
        """Index ``j`` (0-based) if this is ``X_j^a`` with ``a >= 1``, else ``None``."""
        supp = self.support()
        return supp[0] if len(supp) == 1 else None

    def __repr__(self):
        return f"Monomial({format_monomial(self)!r})"

    def __str__(self):
        return format_monomial(self)


def _check_lengths(a, b):
    if len(a) != len(b):
        raise ValueError(f"monomials live in different rings ({len(a)} vs {len(b)} variables)")


def divides(m1, m2):
    _check_lengths(m1, m2)
    return all(a <= b for a, b in zip(m1, m2))


def lcm(ms):
    ms = list(ms)
    if not ms:
        raise ValueError("lcm of an empty set")
    n = len(ms[0])
    for m in ms:
        _check_lengths(ms[0], m)
    return Monomial(max(m[j] for m in ms) for j in range(n))


def gcd(m1, m2):
    _check_lengths(m1, m2)
    return Monomial(min(a, b) for a, b in zip(m1, m2))


def monomials_of_degree(nvars, d):
    """All exponent vectors of total degree ``d``, in descending degree-lex order."""
    return list(_monomials_of_degree(nvars, d))


@lru_cache(maxsize=512)
def _monomials_of_degree(nvars, d):
    if d < 0:
        return ()
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        exps = [0] * nvars
        for k in combo:
            exps[k] += 1
        out.append(Monomial(exps))
    # combinations_with_replacement is lex-ascending in the variable *indices*,
    # which is lex-descending in the exponent vectors
    return tuple(out)


def count_monomials(nvars, d):
    from math import comb

    if d < 0:
        return 0
    if nvars == 0:
        return 1 if d == 0 else 0
    return comb(d + nvars - 1, nvars - 1)


class DegLexOrder:
    """Degree-lex order.

    ``a > b`` iff the first nonzero entry of
    ``(sum(a - b), a_p1 - b_p1, ..., a_pk - b_pk)`` is positive, where
    ``p`` is the variable priority (default: the natural order, so that
    ``x1 > ... > xn > u1 > ... > ut``).
    """

    name = "deglex"

    def __init__(self, priority=None):
        self.priority = tuple(priority) if priority is not None else None

    def _permuted(self, m):
        return tuple(m) if self.priority is None else tuple(m[k] for k in self.priority)

    def key(self, m):
        return (sum(m), self._permuted(m))

    def compare(self, a, b):
        _check_lengths(a, b)
        pa, pb = self._permuted(a), self._permuted(b)
        vector = (sum(a) - sum(b),) + tuple(x - y for x, y in zip(pa, pb))
        for v in vector:
            if v:
                return 1 if v > 0 else -1
        return 0

    def greater(self, a, b):
        return self.compare(a, b) > 0

    def sorted(self, ms, descending=True):
        return sorted(ms, key=self.key, reverse=descending)

    def __eq__(self, other):
        return type(other) is type(self) and other.priority == self.priority

    def __hash__(self):
        return hash((self.name, self.priority))

    def __repr__(self):
        return f"{type(self).__name__}({self.priority!r})"


class DegRevLexOrder(DegLexOrder):
    """Degree-reverse-lex order: ties broken by the *smaller* last exponent."""

    name = "degrevlex"

    def key(self, m):
        p = self._permuted(m)
        return (sum(m), tuple(-e for e in reversed(p)))

    def compare(self, a, b):
        _check_lengths(a, b)
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


DEGLEX = DegLexOrder()


class MonomialIdeal:
    """A monomial ideal in ``n`` variables, stored by its minimal generators.

    The zero ideal has no generators; the unit ideal is generated by ``1``.
    Generators are kept in descending degree-lex order.
    """

    __slots__ = ("n", "gens", "_genset")

    def __init__(self, n, gens=()):
        if n < 1:
            raise ValueError("a monomial ideal needs n >= 1 variables")
        ms = []
        for g in gens:
            g = g if isinstance(g, Monomial) else Monomial(g)
            if len(g) != n:
                raise ValueError(f"generator {g} does not have {n} exponents")
            ms.append(g)
        minimal = _minimal_elements(ms)
        self.n = n
        self.gens = tuple(DEGLEX.sorted(minimal))
        self._genset = frozenset(self.gens)

    @classmethod
    def parse(cls, text, n=None):
        return parse_ideal(text, n)

    @classmethod
    def maximal(cls, n, power=1):
        """``(X_1, ..., X_n)^power``."""
        return cls(n, monomials_of_degree(n, power))

    @classmethod
    def unit(cls, n):
        return cls(n, [Monomial.one(n)])

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.n == other.n and self._genset == other._genset

    def __hash__(self):
        return hash((self.n, self._genset))

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, m):
        return contains(self, m)

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        return any(g.degree == 0 for g in self.gens)

    def max_degree(self):
        return max((g.degree for g in self.gens), default=0)

    def __add__(self, other):
        if isinstance(other, tuple):
            other = MonomialIdeal(self.n, [other])
        _check_same_ring(self, other)
        return MonomialIdeal(self.n, self.gens + other.gens)

    def __mul__(self, other):
        _check_same_ring(self, other)
        return MonomialIdeal(self.n, [a * b for a in self.gens for b in other.gens])

    def degree_part(self, d):
        """Monomials of degree ``d`` in the ideal, descending degree-lex."""
        return [m for m in monomials_of_degree(self.n, d) if contains(self, m)]

    def embed(self, nvars):
        """The extension ideal in a ring with extra trailing variables."""
        pad = (0,) * (nvars - self.n)
        return MonomialIdeal(nvars, [Monomial(tuple(g) + pad) for g in self.gens])

    def __repr__(self):
        return f"MonomialIdeal({self.n}, {format_ideal(self)!r})"

    def __str__(self):
        return format_ideal(self)


def _check_same_ring(a, b):
    if a.n != b.n:
        raise ValueError(f"ideals live in different rings ({a.n} vs {b.n} variables)")


def _minimal_elements(ms):
    kept = []
    for m in sorted(set(ms), key=sum):
        if not any(all(a <= b for a, b in zip(g, m)) for g in kept):
            kept.append(m)
    return kept


def minimalize(gens, n=None):
    gens = [g if isinstance(g, Monomial) else Monomial(g) for g in gens]
    if n is None:
        if not gens:
            raise ValueError("cannot infer the number of variables from no generators")
        n = len(gens[0])
    return MonomialIdeal(n, gens)


def contains(J, m):
    if len(m) != J.n:
        raise ValueError(f"monomial has {len(m)} exponents, ideal lives in {J.n} variables")
    return any(all(a <= b for a, b in zip(g, m)) for g in J.gens)


def is_artinian(J):
    powered = {g.pure_power_index() for g in J.gens if g.degree > 0}
    return J.is_unit() or all(j in powered for j in range(J.n))


def max_exponents(J):
    """``((N_1, ..., N_n), N)`` with ``N_j`` the top power of ``X_j`` among minimal generators."""
    per_var = tuple(max((g[j] for g in J.gens), default=0) for j in range(J.n))
    return per_var, max(per_var, default=0)


def pure_power_bounds(J):
    """Smallest ``a_j`` with ``X_j^{a_j}`` in ``J`` (requires Artinian)."""
    if not is_artinian(J):
        raise PreconditionError(f"{J} is not Artinian")
    if J.is_unit():
        return (0,) * J.n
    bounds = [None] * J.n
    for g in J.gens:
        j = g.pure_power_index()
        if j is not None:
            bounds[j] = g[j] if bounds[j] is None else min(bounds[j], g[j])
    return tuple(bounds)


def is_lex_segment(J, order=DEGLEX):
    """Every graded piece up to the top generator degree is an initial lex segment."""
    for d in range(J.max_degree() + 1):
        seen_gap = False
        for m in order.sorted(monomials_of_degree(J.n, d)):
            if contains(J, m):
                if seen_gap:
                    return False
            else:
                seen_gap = True
    return True


def standard_monomials(J, degree_bound=None):
    """Monomials outside ``J``, sorted by degree then descending lex.

    Without a bound the ideal must be Artinian (finitely many standard monomials).
    """
    if degree_bound is None:
        bounds = pure_power_bounds(J)
        out = []
        _box(J.n, bounds, [], out)
        out = [m for m in out if not contains(J, m)]
    else:
        out = [m for d in range(degree_bound + 1) for m in monomials_of_degree(J.n, d) if not contains(J, m)]
    return sorted(out, key=lambda m: (m.degree, tuple(-e for e in m)))


def _box(n, bounds, prefix, out):
    if len(prefix) == n:
        out.append(Monomial(prefix))
        return
    for e in range(bounds[len(prefix)]):
        _box(n, bounds, prefix + [e], out)


def hilbert_function_by_count(J, degree_bound):
    """``dim (S/J)_d`` for ``d = 0..degree_bound`` by direct enumeration."""
    counts = [0] * (degree_bound + 1)
    for m in standard_monomials(J, degree_bound):
        counts[m.degree] += 1
    return counts


# -- text form ---------------------------------------------------------------


def parse_monomial(text, n=None, t=0):
    terms = grammar.parse_terms(text)
    if len(terms) != 1 or terms[0][0] != 1:
        raise ParseError(f"{text!r} is not a monomial", 1, 1, text)
    nx, nu = grammar.ambient_size([terms])
    n = max(nx, 1) if n is None else n
    t = t or nu
    return Monomial(grammar.exponent_vector(terms[0][1], n, t))


def format_monomial(m, n=None):
    return grammar.format_exponents(m, len(m) if n is None else n)


def parse_ideal(text, n=None):
    """Parse ``"x1^2*x2, x2^2*x3"``; ``n`` defaults to the largest x-index used."""
    if text.strip() == "0":
        return MonomialIdeal(1 if n is None else n)
    lists = grammar.parse_term_lists(text)
    nx, nu = grammar.ambient_size(lists)
    if nu:
        raise ParseError("monomial ideals live in the x-variables only", 1, 1, text)
    n = max(nx, 1) if n is None else n
    gens = []
    for terms in lists:
        if len(terms) != 1 or terms[0][0] != 1:
            raise ParseError("ideal generators must be monomials", 1, 1, text)
        gens.append(Monomial(grammar.exponent_vector(terms[0][1], n, 0)))
    return MonomialIdeal(n, gens)


def format_ideal(J):
    return ", ".join(format_monomial(g) for g in J.gens) if J.gens else "0"
