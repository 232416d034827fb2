"""A small Buchberger engine over the rationals or GF(p).

Meant as an oracle at desk scale, not a computer algebra system: inputs are
capped by generator count and degree, and the number of reductions is bounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ResourceLimitError
from .monomial import DEGLEX, Monomial, MonomialIdeal
from .poly import SparsePoly


@dataclass(frozen=True)
class GroebnerLimits:
    max_generators: int = 8
    max_degree: int = 8
    max_reductions: int = 50_000


def _lead(terms, key):
    return max(terms, key=key)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _monic(terms, F, key):
    lm = _lead(terms, key)
    inv = F.div(1, terms[lm])
    return {e: F(c * inv) for e, c in terms.items()}


class _Reducer:
    def __init__(self, F, key, limits):
        self.F = F
        self.key = key
        self.limits = limits
        self.count = 0

    def tick(self):
        self.count += 1
        if self.count > self.limits.max_reductions:
            raise ResourceLimitError(f"more than {self.limits.max_reductions} reduction steps")

    def normal_form(self, terms, basis, full=True):
        """Remainder of ``terms`` modulo ``basis`` (monic dicts with cached leading monomials)."""
        F, key = self.F, self.key
        p = dict(terms)
        rem = {}
        while p:
            lm = _lead(p, key)
            c = p[lm]
            for g, glm in basis:
                if _divides(glm, lm):
                    self.tick()
                    shift = tuple(a - b for a, b in zip(lm, glm))
                    for e, gc in g.items():
                        e2 = tuple(a + b for a, b in zip(e, shift))
                        v = F(p.get(e2, 0) - c * gc)
                        if v:
                            p[e2] = v
                        else:
                            p.pop(e2, None)
                    break
            else:
                if not full:
                    rem.update(p)
                    return rem
                rem[lm] = c
                del p[lm]
        return rem


@dataclass
class GroebnerBasis:
    polys: list
    order: object = DEGLEX
    reduced: bool = True
    reductions: int = 0
    pairs_considered: int = 0
    notes: list = field(default_factory=list)

    def leading_monomials(self):
        return [p.leading_term(self.order)[0] for p in self.polys]

    def initial_ideal(self):
        lms = self.leading_monomials()
        return MonomialIdeal(len(lms[0]), lms) if lms else None

    def normal_form(self, p):
        key = self.order.key
        basis = [(g.terms, _lead(g.terms, key)) for g in self.polys]
        red = _Reducer(p.ring.field, key, GroebnerLimits(max_reductions=10**9))
        return SparsePoly(p.ring, red.normal_form(p.terms, basis))

    def contains(self, p):
        return self.normal_form(p).is_zero()


def buchberger(gens, order=DEGLEX, limits=None):
    """Reduced Groebner basis of the ideal generated by ``gens`` (sparse polynomials in one ring)."""
    limits = limits or GroebnerLimits()
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    ring = gens[0].ring
    if len(gens) > limits.max_generators:
        raise ResourceLimitError(f"{len(gens)} generators exceed the limit {limits.max_generators}")
    if max(g.degree for g in gens) > limits.max_degree:
        raise ResourceLimitError(f"generator degree exceeds the limit {limits.max_degree}")
    F, key = ring.field, order.key
    red = _Reducer(F, key, limits)
    basis = []

    def add(terms):
        terms = _monic(terms, F, key)
        basis.append((terms, _lead(terms, key)))

    for g in gens:
        rem = red.normal_form(g.terms, basis)
        if rem:
            add(rem)
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    considered = 0

    def pair_key(pr):
        a, b = basis[pr[0]][1], basis[pr[1]][1]
        lcm = tuple(max(x, y) for x, y in zip(a, b))
        return (sum(lcm), key(lcm), pr)

    while pairs:
        # normal strategy: smallest lcm first
        pairs.sort(key=pair_key, reverse=True)
        i, j = pairs.pop()
        considered += 1
        (f, flm), (g, glm) = basis[i], basis[j]
        if all(not (x and y) for x, y in zip(flm, glm)):
            continue  # coprime leading monomials
        lcm = tuple(max(x, y) for x, y in zip(flm, glm))
        if _chain_criterion(i, j, lcm, basis, pairs):
            continue
        s = {}
        for poly, lm, sign in ((f, flm, 1), (g, glm, -1)):
            shift = tuple(a - b for a, b in zip(lcm, lm))
            for e, c in poly.items():
                e2 = tuple(a + b for a, b in zip(e, shift))
                v = F(s.get(e2, 0) + sign * c)
                if v:
                    s[e2] = v
                else:
                    s.pop(e2, None)
        rem = red.normal_form(s, basis)
        if rem:
            add(rem)
            new = len(basis) - 1
            pairs.extend((k, new) for k in range(new))
    polys = _reduce_basis(basis, F, key, red)
    gb = GroebnerBasis([SparsePoly(ring, t) for t in polys], order, True, red.count, considered)
    return gb


def _chain_criterion(i, j, lcm, basis, pending):
    """Skip ``(i, j)`` if some ``k`` has LM dividing the lcm and both ``(i, k)``, ``(j, k)`` are already done."""
    open_pairs = set(pending)
    for k, (_, klm) in enumerate(basis):
        if k in (i, j) or not _divides(klm, lcm):
            continue
        ik = (min(i, k), max(i, k))
        jk = (min(j, k), max(j, k))
        if ik not in open_pairs and jk not in open_pairs:
            return True
    return False


def _reduce_basis(basis, F, key, red):
    # keep elements whose leading monomial is not divisible by another's
    items = sorted(basis, key=lambda b: key(b[1]))
    minimal = []
    for terms, lm in items:
        if not any(_divides(olm, lm) for _, olm in minimal):
            minimal.append((terms, lm))
    out = []
    for k, (terms, lm) in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        tail = {e: c for e, c in terms.items() if e != lm}
        reduced_tail = red.normal_form(tail, others)
        poly = dict(reduced_tail)
        poly[lm] = F(1)
        out.append(poly)
    out.sort(key=lambda p: key(_lead(p, key)), reverse=True)
    return out


@dataclass
class InitialIdealReport:
    passed: bool
    status: str
    basis_size: int = 0
    initial_ideal: object = None
    expected: object = None
    inclusion_ok: bool = False

    def to_json(self):
        return {
            "passed": self.passed,
            "status": self.status,
            "basis_size": self.basis_size,
            "initial_ideal": str(self.initial_ideal) if self.initial_ideal is not None else None,
            "expected": str(self.expected) if self.expected is not None else None,
            "inclusion_ok": self.inclusion_ok,
        }


def verify_initial_ideal(J, A, order=DEGLEX, limits=None):
    """Compare the degree-lex initial ideal of the lifted ideal with ``J`` extended to ``n + t`` variables.

    A resource limit yields ``status == "limit"`` (claim unverified), not a failure.
    """
    from .lifting import lifted_ideal

    gens = lifted_ideal(J, A)
    expected = J.embed(A.ring.nvars)
    lts = [Monomial(g.leading_term(order)[0]) for g in gens]
    inclusion = all(any(_divides(e, m) for m in lts) for e in expected.gens)
    try:
        gb = buchberger(gens, order, limits)
    except ResourceLimitError as exc:
        return InitialIdealReport(False, f"limit: {exc}", expected=expected, inclusion_ok=inclusion)
    ini = gb.initial_ideal()
    ok = ini == expected
    return InitialIdealReport(ok, "verified" if ok else "mismatch", len(gb.polys), ini, expected, inclusion)
