"""Lifting matrices, lifted generators and lifted Taylor complexes.

A lifting matrix holds linear forms ``L[j][i]`` (row ``j`` replaces powers of
``x_j``).  A monomial ``x^a`` lifts to the product of the first ``a_j`` forms
of each row.  The Taylor complex of ``m_1..m_r`` has basis ``e_A`` for subsets
``A`` and differential ``e_A -> sum_k (-1)^k (m_A / m_{A - i_k}) e_{A - i_k}``;
in the lifted complex each ratio ``x_j^{b} / x_j^{a}`` becomes
``L[j][a+1] ... L[j][b]``.  Entries are kept as ``(sign, factors)`` and turned
into polynomials only on demand.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import PreconditionError, ResourceLimitError
from .field import LARGE_PRIME, QQ
from .ideals import BETTI_GENERATOR_LIMIT, BettiTable, graded_betti
from .linalg import rank_exact, rank_mod_p
from .monomial import Monomial, MonomialIdeal, count_monomials, max_exponents, standard_monomials
from .poly import LinearForm, PolyMatrix, Ring, graded_slice_mod_p, matrix_product

RESTRICTED = "restricted"
GENERAL = "general"


@dataclass(frozen=True)
class LiftingMatrix:
    """Rows of linear forms in ``k[x1..xn, u1..ut]``.

    ``restricted`` mode requires row ``j`` to live in ``span(x_j, u)`` with a
    nonzero ``x_j`` coefficient; ``general`` mode allows any nonzero forms.
    """

    ring: Ring
    rows: tuple
    mode: str = RESTRICTED
    provenance: tuple = ("explicit",)

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.ring.n:
            raise ValueError(f"expected {self.ring.n} rows, got {len(rows)}")
        if self.mode not in (RESTRICTED, GENERAL):
            raise ValueError(f"unknown mode {self.mode!r}")
        for j, row in enumerate(rows, 1):
            for i, L in enumerate(row, 1):
                if L.ring != self.ring:
                    raise ValueError(f"L[{j},{i}] lives in another ring")
                if self.mode == RESTRICTED:
                    bad = [k for k in L.support() if k < self.ring.n and k != j - 1]
                    if bad or not L.coeffs[j - 1]:
                        raise PreconditionError(
                            f"L[{j},{i}] = {L} must involve x{j} (nonzero) and u-variables only")

    @property
    def n(self):
        return self.ring.n

    @property
    def t(self):
        return self.ring.t

    @property
    def lengths(self):
        return tuple(len(r) for r in self.rows)

    def entry(self, j, i):
        """``L_{j,i}`` with 1-based indices."""
        try:
            return self.rows[j - 1][i - 1]
        except IndexError:
            raise PreconditionError(f"the lifting matrix has no entry ({j}, {i})") from None

    def entries(self):
        return [(j, i) for j, row in enumerate(self.rows, 1) for i in range(1, len(row) + 1)]

    def covers(self, J):
        per_var, _ = max_exponents(J)
        return all(a <= N for a, N in zip(per_var, self.lengths))

    def used_entries(self, J):
        per_var, _ = max_exponents(J)
        if not self.covers(J):
            raise PreconditionError(f"rows of lengths {self.lengths} are too short for exponents {per_var}")
        return [(j, i) for j in range(1, self.n + 1) for i in range(1, per_var[j - 1] + 1)]

    def values(self, point, p=LARGE_PRIME):
        """``{(j, i): L_{j,i}(point) mod p}``."""
        return {(j, i): self.entry(j, i).value(point, p) for (j, i) in self.entries()}

    def to_json(self):
        kind = self.provenance[0]
        if kind == "vandermonde":
            prov = {"vandermonde": {"b": [str(b) for b in self.provenance[1]]}}
        elif kind == "random":
            prov = {"random": {"seed": self.provenance[1]}}
        else:
            prov = {"explicit": [[str(L) for L in row] for row in self.rows]}
        return {"mode": self.mode, "provenance": prov, "t": self.t,
                "lengths": list(self.lengths), "rows": [[str(L) for L in row] for row in self.rows]}

    def __str__(self):
        width = max((len(str(L)) for row in self.rows for L in row), default=1)
        return "\n".join("  ".join(str(L).ljust(width) for L in row) for row in self.rows)


def _as_field_scalar(field, b):
    from fractions import Fraction
    return field(Fraction(b) if isinstance(b, str) else b)


def vandermonde_lifting_matrix(n, t, lengths, b=None, field=QQ):
    """Row ``k`` gets ``(x_k, u_1, ..., u_t) . B_k`` for consecutive Vandermonde blocks ``B_k``.

    The column with node ``b`` is ``x_k + b u_1 + b^2 u_2 + ... + b^t u_t``.
    Nodes default to ``0, 1, ..., p - 1`` with ``p = sum(lengths)``.
    """
    lengths = tuple(lengths)
    if len(lengths) != n:
        raise ValueError("need one row length per variable")
    p = sum(lengths)
    if b is None:
        b = list(range(p))
    b = [_as_field_scalar(field, x) for x in b]
    if len(b) != p:
        raise ValueError(f"need {p} nodes, got {len(b)}")
    if len(set(b)) != len(b):
        raise ValueError("Vandermonde nodes must be distinct")
    ring = Ring(n, t, field)
    rows, pos = [], 0
    for k in range(n):
        row = []
        for _ in range(lengths[k]):
            coeffs = [0] * (n + t)
            coeffs[k] = 1
            for s in range(1, t + 1):
                coeffs[n + s - 1] = b[pos] ** s if not field.characteristic else pow(b[pos], s, field.characteristic)
            row.append(LinearForm(ring, tuple(coeffs)))
            pos += 1
        rows.append(tuple(row))
    return LiftingMatrix(ring, tuple(rows), RESTRICTED, ("vandermonde", tuple(b)))


def random_lifting_matrix(n, t, lengths, seed=0, mode=RESTRICTED, field=QQ, bound=2**20):
    """Seeded random integer coefficients in ``[-bound, bound]`` (``x_j`` coefficient nonzero)."""
    rng = random.Random(seed)
    ring = Ring(n, t, field)

    def draw(nonzero=False):
        while True:
            c = rng.randint(-bound, bound)
            if field(c) or not nonzero:
                return c

    rows = []
    for j in range(n):
        row = []
        for _ in range(lengths[j]):
            coeffs = [0] * (n + t)
            if mode == RESTRICTED:
                coeffs[j] = draw(nonzero=True)
                for s in range(t):
                    coeffs[n + s] = draw()
            else:
                while not any(field(c) for c in coeffs):
                    coeffs = [draw() for _ in range(n + t)]
            row.append(LinearForm(ring, tuple(coeffs)))
        rows.append(tuple(row))
    return LiftingMatrix(ring, tuple(rows), mode, ("random", seed))


def explicit_lifting_matrix(n, t, rows, mode=RESTRICTED, field=QQ):
    """Rows given as lists of form strings such as ``"x1 + 2*u1"``."""
    ring = Ring(n, t, field)
    forms = tuple(tuple(LinearForm.parse(ring, s) if isinstance(s, str) else s for s in row) for row in rows)
    return LiftingMatrix(ring, forms, mode, ("explicit",))


def cone_matrix(n, lengths, t=0, field=QQ):
    """Every ``L_{j,i} = x_j``: lifting along it is just extension of scalars."""
    ring = Ring(n, t, field)
    rows = []
    for j in range(n):
        coeffs = [0] * (n + t)
        coeffs[j] = 1
        rows.append(tuple(LinearForm(ring, tuple(coeffs)) for _ in range(lengths[j])))
    return LiftingMatrix(ring, tuple(rows), RESTRICTED, ("cone",))


def lifting_matrix_from_config(config, J, field=QQ):
    """Build a matrix from the JSON config ``{"mode", "provenance", "t"}`` sized for ``J``."""
    mode = config.get("mode", RESTRICTED)
    t = int(config.get("t", 1))
    per_var, _ = max_exponents(J)
    lengths = tuple(config.get("lengths", per_var))
    prov = config.get("provenance", {"vandermonde": {}})
    if "vandermonde" in prov:
        if mode != RESTRICTED:
            raise ValueError("the Vandermonde construction is a restricted-mode matrix")
        return vandermonde_lifting_matrix(J.n, t, lengths, prov["vandermonde"].get("b"), field)
    if "random" in prov:
        return random_lifting_matrix(J.n, t, lengths, int(prov["random"].get("seed", 0)), mode, field)
    if "explicit" in prov:
        return explicit_lifting_matrix(J.n, t, prov["explicit"], mode, field)
    raise ValueError(f"unknown provenance {prov!r}")


# -- genericity ----------------------------------------------------------------


@dataclass
class GenericityReport:
    passed: bool
    mode: str
    subsets_checked: int
    violations: list = field(default_factory=list)
    complete_intersection: bool | None = None
    notes: list = field(default_factory=list)

    def to_json(self):
        return {
            "passed": self.passed,
            "mode": self.mode,
            "subsets_checked": self.subsets_checked,
            "violations": [{"entries": [list(e) for e in E], "rank": r, "expected": x} for E, r, x in self.violations],
            "complete_intersection": self.complete_intersection,
            "notes": self.notes,
        }


def expected_rank(entries, n, t, mode):
    """Rank of a set of generic entries of a lifting matrix.

    Restricted rows live in ``span(x_j, u)``, so entries drawn from ``rho``
    rows span at most ``t + |rho|`` dimensions; general entries reach
    ``min(n + t, k)``.
    """
    k = len(entries)
    if mode == RESTRICTED:
        return min(k, t + len({j for j, _ in entries}))
    return min(k, n + t)


def check_genericity(A, J=None, max_size=None, max_violations=20):
    """Rank test for every set of distinct entries (used by ``J`` if given) of size up to ``n + t``."""
    entries = A.used_entries(J) if J is not None else A.entries()
    top = A.n + A.t if max_size is None else min(max_size, A.n + A.t)
    F = A.ring.field
    vectors = {e: A.entry(*e).coeffs for e in entries}
    violations = []
    checked = 0
    for k in range(1, top + 1):
        for E in combinations(entries, k):
            checked += 1
            r = rank_exact([vectors[e] for e in E], F)
            x = expected_rank(E, A.n, A.t, A.mode)
            if r != x:
                violations.append((E, r, x))
                if len(violations) >= max_violations:
                    break
        if len(violations) >= max_violations:
            break
    report = GenericityReport(not violations, A.mode, checked, violations)
    if A.mode == GENERAL:
        ci = _transversals_independent(A, J)
        report.complete_intersection = ci
        report.passed = report.passed and ci
        report.notes.append("row products form a complete intersection iff every one-entry-per-row choice is independent")
    return report


def _transversals_independent(A, J=None):
    per_row = [range(1, N + 1) for N in (max_exponents(J)[0] if J is not None else A.lengths)]
    from itertools import product
    for choice in product(*per_row):
        vecs = [A.entry(j, i).coeffs for j, i in enumerate(choice, 1)]
        if rank_exact(vecs, A.ring.field) < A.n:
            return False
    return True


# -- lifting ------------------------------------------------------------------


def lift_factors(m, A):
    """Factors ``(j, i)`` of the lifted monomial: the first ``a_j`` entries of row ``j``."""
    if len(m) != A.n:
        raise ValueError(f"monomial in {len(m)} variables, matrix has {A.n} rows")
    out = []
    for j, a in enumerate(m, 1):
        if a > len(A.rows[j - 1]):
            raise PreconditionError(f"exponent {a} of x{j} exceeds row length {len(A.rows[j - 1])}")
        out.extend((j, i) for i in range(1, a + 1))
    return tuple(out)


def product_of_entries(A, factors, sign=1):
    out = A.ring.constant(sign)
    for j, i in factors:
        out = out * A.entry(j, i).to_poly()
    return out


def lift_monomial(m, A):
    return product_of_entries(A, lift_factors(m, A))


def lifted_ideal(J, A):
    gens = J.gens if isinstance(J, MonomialIdeal) else J
    return [lift_monomial(m, A) for m in gens]


def _generators(J):
    gens = tuple(J.gens) if isinstance(J, MonomialIdeal) else tuple(Monomial(g) for g in J)
    if not gens:
        raise PreconditionError("the Taylor complex needs at least one generator")
    return gens


@dataclass
class FreeComplex:
    """``0 -> F_r -> ... -> F_1 -> F_0 = R`` on subsets of the generators.

    ``levels[s]`` lists the bitmasks of size ``s`` in increasing order;
    ``shifts[s]`` their degrees ``deg m_A``; ``maps[s]`` (``s >= 1``) holds
    the nonzero entries of ``d_s`` as ``(row, col) -> (sign, factors)``.
    """

    ring: Ring
    generators: tuple
    matrix: LiftingMatrix
    levels: list
    shifts: list
    maps: list
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def length(self):
        return len(self.levels) - 1

    def rank(self, s):
        return len(self.levels[s]) if 0 <= s < len(self.levels) else 0

    def lcm_exponents(self, mask):
        return _mask_lcm(self.generators, mask)

    def entry_poly(self, sign, factors):
        key = (sign, factors)
        if key not in self._cache:
            self._cache[key] = product_of_entries(self.matrix, factors, sign)
        return self._cache[key]

    def differential(self, s):
        """``d_s`` as a polynomial matrix (rows: ``F_{s-1}``, columns: ``F_s``)."""
        if not 1 <= s <= self.length:
            raise IndexError(f"no differential d_{s}")
        entries = {k: self.entry_poly(*v) for k, v in self.maps[s].items()}
        return PolyMatrix(self.ring, self.rank(s - 1), self.rank(s), entries, self.shifts[s - 1], self.shifts[s])

    def label(self, mask):
        return "e" + "".join(str(i + 1) for i in range(len(self.generators)) if mask >> i & 1)

    def basis_labels(self, s):
        return [self.label(A) for A in self.levels[s]]

    def evaluated(self, s, point, p=LARGE_PRIME):
        """``d_s`` at a point, mod ``p``, via the factor lists."""
        vals = self.matrix.values(point, p)
        M = np.zeros((self.rank(s - 1), self.rank(s)), dtype=np.int64)
        for (a, b), (sign, factors) in self.maps[s].items():
            v = sign % p
            for f in factors:
                v = v * vals[f] % p
            M[a, b] = v
        return M

    def to_json(self):
        return {
            "generators": [str(g) for g in self.generators],
            "shifts": [list(s) for s in self.shifts],
            "differentials": [self.differential(s).to_json() for s in range(1, self.length + 1)],
        }


def _mask_lcm(gens, mask):
    n = len(gens[0])
    out = [0] * n
    i = 0
    while mask:
        if mask & 1:
            g = gens[i]
            for j in range(n):
                if g[j] > out[j]:
                    out[j] = g[j]
        mask >>= 1
        i += 1
    return tuple(out)


def lift_taylor_complex(J, A, limit=BETTI_GENERATOR_LIMIT):
    """Taylor complex of the generators of ``J`` (in the given order) lifted along ``A``."""
    gens = _generators(J)
    r = len(gens)
    if r > limit:
        raise ResourceLimitError(f"{r} generators exceed the Taylor limit {limit}")
    for g in gens:
        lift_factors(g, A)
    levels = [[] for _ in range(r + 1)]
    for mask in sorted(range(1 << r), key=lambda x: (bin(x).count("1"), x)):
        levels[bin(mask).count("1")].append(mask)
    lcms = {mask: _mask_lcm(gens, mask) for mask in range(1 << r)}
    shifts = [tuple(sum(lcms[m]) for m in lvl) for lvl in levels]
    index = [{m: k for k, m in enumerate(lvl)} for lvl in levels]
    maps = [None]
    for s in range(1, r + 1):
        entries = {}
        for col, Amask in enumerate(levels[s]):
            hi = lcms[Amask]
            pos = 0
            for i in range(r):
                if Amask >> i & 1:
                    pos += 1
                    B = Amask & ~(1 << i)
                    lo = lcms[B]
                    factors = tuple((j + 1, c) for j in range(len(hi)) for c in range(lo[j] + 1, hi[j] + 1))
                    entries[(index[s - 1][B], col)] = (-1 if pos % 2 else 1, factors)
        maps.append(entries)
    return FreeComplex(A.ring, gens, A, levels, shifts, maps)


def taylor_complex(J, field=QQ, limit=BETTI_GENERATOR_LIMIT):
    """The ordinary Taylor complex over ``k[x1..xn]``."""
    gens = _generators(J)
    lengths = tuple(max(g[j] for g in gens) for j in range(len(gens[0])))
    return lift_taylor_complex(gens, cone_matrix(len(gens[0]), lengths, 0, field), limit)


# -- verification -----------------------------------------------------------------


def verify_complex(C):
    """Every composite ``d_s d_{s+1}`` vanishes identically (exact polynomial arithmetic)."""
    for s in range(1, C.length):
        if not matrix_product(C.differential(s), C.differential(s + 1)).is_zero():
            return False
    return True


def restriction_matches(lifted, base):
    """Setting ``u = 0`` in the lifted complex gives the base complex up to nonzero entry scalars."""
    n = lifted.ring.n
    t = lifted.ring.t
    if lifted.levels != base.levels or lifted.shifts != base.shifts:
        return False
    zero_u = {n + k: 0 for k in range(t)}
    for s in range(1, lifted.length + 1):
        if lifted.maps[s].keys() != base.maps[s].keys():
            return False
        for key, val in lifted.maps[s].items():
            p = lifted.entry_poly(*val).substitute(zero_u)
            q = base.entry_poly(*base.maps[s][key])
            if len(p.terms) != 1 or len(q.terms) != 1:
                return False
            (ep, _), (eq, _) = next(iter(p.terms.items())), next(iter(q.terms.items()))
            if ep[:n] != eq or any(ep[n:]):
                return False
    return True


@dataclass
class ExactnessReport:
    generic_rank_ok: bool
    generic_ranks: list
    degreewise_ok: bool
    degree_bound: int
    checks: dict
    seed: int
    trials: int
    notes: list = field(default_factory=list)

    @property
    def exact(self):
        return self.generic_rank_ok and self.degreewise_ok

    def to_json(self):
        return {
            "exact": self.exact,
            "generic_rank": {"ok": self.generic_rank_ok, "ranks": self.generic_ranks,
                             "seed": self.seed, "trials": self.trials, "kind": "probabilistic lower bounds"},
            "degreewise": {"ok": self.degreewise_ok, "degree_bound": self.degree_bound,
                           "checks": {f"{s},{d}": v for (s, d), v in sorted(self.checks.items())}},
            "notes": self.notes,
        }


def generic_ranks(C, seed=0, trials=3, p=LARGE_PRIME):
    """Max over random points of ``rank d_s`` mod ``p``, for ``s = 1..r``."""
    rng = random.Random(seed)
    best = [0] * (C.length + 2)
    for _ in range(trials):
        point = [rng.randrange(1, p) for _ in range(C.ring.nvars)]
        for s in range(1, C.length + 1):
            best[s] = max(best[s], rank_mod_p(C.evaluated(s, point, p), p))
    return best


def free_rank_in_degree(ring, shifts, d):
    return sum(count_monomials(ring.nvars, d - s) for s in shifts)


def verify_exactness(C, degree_bound=None, seed=0, trials=3, p=LARGE_PRIME, exact_fallback_size=400):
    """Generic-rank criterion plus degreewise homology ranks up to ``degree_bound``.

    Modular ranks only bound rational ranks from below, while ``d_s d_{s+1} = 0``
    bounds their sum from above by ``dim F_s``; equality therefore certifies
    exactness at ``F_s`` in that degree.
    """
    if C.ring.field.characteristic:
        p = C.ring.field.characteristic
    if degree_bound is None:
        degree_bound = max(sum(g) for g in C.generators) + 4
    ranks = generic_ranks(C, seed, trials, p)
    generic_ok = all(ranks[s + 1] + ranks[s] == C.rank(s) for s in range(1, C.length + 1))
    slice_ranks = {}

    def rank_at(s, d):
        if s < 1 or s > C.length:
            return 0
        if (s, d) not in slice_ranks:
            M = C.differential(s)
            slice_ranks[(s, d)] = rank_mod_p(graded_slice_mod_p(M, d, p), p)
        return slice_ranks[(s, d)]

    checks = {}
    ok = True
    for d in range(degree_bound + 1):
        for s in range(1, C.length + 1):
            dim = free_rank_in_degree(C.ring, C.shifts[s], d)
            if dim == 0:
                continue
            total = rank_at(s, d) + rank_at(s + 1, d)
            good = total == dim
            if not good and dim <= exact_fallback_size and not C.ring.field.characteristic:
                from .poly import graded_slice
                total = sum(rank_exact(graded_slice(C.differential(k), d), C.ring.field)
                            for k in (s, s + 1) if 1 <= k <= C.length)
                good = total == dim
            checks[(s, d)] = good
            ok = ok and good
    report = ExactnessReport(generic_ok, ranks[1:C.length + 1], ok, degree_bound, checks, seed, trials)
    report.notes.append(f"degreewise ranks computed mod {p}; equality with dim F_s is a certificate")
    return report


# -- Tor over the residue field ------------------------------------------------------


def tor_betti(C, degree_bound=None, field=QQ):
    """Homology of ``C`` tensored with ``k``: only constant entries survive, so each degree splits off."""
    entries = defaultdict(int)
    for s in range(1, C.length + 1):
        for j in sorted(set(C.shifts[s])):
            if degree_bound is not None and j > degree_bound:
                continue
            here = [k for k, sh in enumerate(C.shifts[s]) if sh == j]
            dim = len(here)
            r_out = _constant_rank(C, s, j, here, field)
            above = [k for k, sh in enumerate(C.shifts[s + 1]) if sh == j] if s < C.length else []
            r_in = _constant_rank(C, s + 1, j, above, field) if above else 0
            h = dim - r_out - r_in
            if h:
                entries[(s, j)] += h
    return BettiTable(dict(entries))


def _constant_rank(C, s, j, cols, field):
    """Rank of the constant part of ``d_s`` from degree-``j`` columns to degree-``j`` rows."""
    if s < 1 or s > C.length or not cols:
        return 0
    rows = [k for k, sh in enumerate(C.shifts[s - 1]) if sh == j]
    if not rows:
        return 0
    rindex = {k: a for a, k in enumerate(rows)}
    cset = {k: b for b, k in enumerate(cols)}
    M = [[0] * len(cols) for _ in rows]
    for (a, b), (sign, factors) in C.maps[s].items():
        if b in cset and a in rindex:
            const = C.entry_poly(sign, factors).constant_term()
            M[rindex[a]][cset[b]] = const
    return rank_exact(M, field)


def betti_agreement(J, A, degree_bound=None, field=QQ):
    C = lift_taylor_complex(J, A)
    lifted = tor_betti(C, degree_bound, field)
    base = graded_betti(J if isinstance(J, MonomialIdeal) else MonomialIdeal(A.n, J), field)
    if degree_bound is not None:
        base = BettiTable({k: v for k, v in base.entries.items() if k[1] <= degree_bound})
    return lifted == base


# -- Hilbert function of the lifted ideal ----------------------------------------------


def hilbert_function_by_slices(J, A, degree_bound, p=LARGE_PRIME):
    """``dim (R/I)_d`` as ``dim R_d - rank`` of the degree-``d`` slice of ``[m_1 ... m_r]``.

    Ranks are computed mod ``p`` (lower bounds), so values are upper bounds
    that coincide with the truth unless ``p`` divides every maximal minor.
    """
    gens = lifted_ideal(J, A)
    ring = A.ring
    M = PolyMatrix(ring, 1, len(gens), {(0, b): g for b, g in enumerate(gens)}, (0,), tuple(g.degree for g in gens))
    out = []
    for d in range(degree_bound + 1):
        dim = count_monomials(ring.nvars, d)
        out.append(dim - rank_mod_p(graded_slice_mod_p(M, d, p), p) if d >= min(M.col_shifts) else dim)
    return out


@dataclass
class HilbertCertificate:
    """Proof data that ``h_{R/I} = h_{R/JR}`` in every degree, for Artinian ``J`` and restricted ``A``."""

    vanishing_ok: bool
    evaluation_rank: int
    points: int
    leading_terms_ok: bool
    seed: int

    @property
    def certified(self):
        return self.vanishing_ok and self.leading_terms_ok and self.evaluation_rank == self.points


def certify_lifted_hilbert(J, A, seed=0, p=LARGE_PRIME):
    """Certificate for ``h_{R/I}(d) = h_{R/JR}(d)`` for all ``d``.

    Upper bound: the leading term of each lifted generator under degree-lex
    with ``x > u`` is a nonzero multiple of the generator, so ``in(I)``
    contains ``JR``.  Lower bound: each lifted generator has a factor
    ``L_{j,i_j}`` vanishing on the linear space of each index tuple ``i``
    with ``x^{i-1}`` standard; if the standard monomials evaluated at one
    point of each such space give an invertible matrix, then no nonzero
    ``sum x^a g_a(u)`` vanishes on all of them, so ``R/I`` is at least as
    big as ``R/JR`` in every degree.
    """
    from .monomial import is_artinian
    if not is_artinian(J):
        raise PreconditionError("the evaluation certificate needs an Artinian ideal")
    if A.mode != RESTRICTED:
        raise PreconditionError("the evaluation certificate needs a restricted lifting matrix")
    if A.ring.field.characteristic:
        p = A.ring.field.characteristic
    n, t = A.n, A.t
    std = standard_monomials(J)
    tuples = [tuple(e + 1 for e in m) for m in std]
    vanishing = True
    for g in J.gens:
        fac = set(lift_factors(g, A))
        for idx in tuples:
            if not any((j, idx[j - 1]) in fac for j in range(1, n + 1)):
                vanishing = False
    leading = True
    for g in J.gens:
        lm, _ = lift_monomial(g, A).leading_term()
        if tuple(lm[:n]) != tuple(g) or any(lm[n:]):
            leading = False
    rng = random.Random(seed)
    u0 = [rng.randrange(1, p) for _ in range(t)]
    M = np.zeros((len(tuples), len(std)), dtype=np.int64)
    for r, idx in enumerate(tuples):
        xs = []
        for j in range(1, n + 1):
            L = A.entry(j, idx[j - 1])
            cres = _res(L.coeffs[j - 1], p)
            rest = sum(_res(L.coeffs[n + s], p) * u0[s] for s in range(t)) % p
            xs.append((-rest) * pow(cres, -1, p) % p)
        for col, m in enumerate(std):
            v = 1
            for x, a in zip(xs, m):
                v = v * pow(x, a, p) % p
            M[r, col] = v
    return HilbertCertificate(vanishing, rank_mod_p(M, p), len(std), leading, seed)


def _res(c, p):
    if hasattr(c, "denominator") and c.denominator != 1:
        return c.numerator * pow(c.denominator, -1, p) % p
    return int(c) % p


def extension_hilbert_function(J, t, degree_bound):
    """``dim (R/JR)_d``: standard monomials of ``J`` times all monomials in ``t`` new variables."""
    std = standard_monomials(J)
    return [sum(count_monomials(t, d - m.degree) for m in std) for d in range(degree_bound + 1)]


def lifted_hilbert_function(J, A, degree_bound, method="auto", seed=0, slice_cap=2000):
    """``dim (R/I)_d`` for ``d <= degree_bound`` with a note on how it was obtained.

    ``certificate`` (Artinian ``J``, restricted ``A``) proves the values equal
    those of ``R/JR``; ``slices`` ranks the generator map degree by degree.
    """
    from .monomial import is_artinian
    if method == "auto":
        method = "certificate" if is_artinian(J) and A.mode == RESTRICTED else "slices"
    if method == "certificate":
        cert = certify_lifted_hilbert(J, A, seed)
        if not cert.certified:
            raise PreconditionError(f"Hilbert certificate failed: {cert}")
        return extension_hilbert_function(J, A.t, degree_bound), "certificate"
    top = degree_bound
    while top >= 0 and count_monomials(A.ring.nvars, top) * max(1, len(J.gens)) > slice_cap * 50:
        top -= 1
    if top < degree_bound:
        raise ResourceLimitError(f"degree slices above {top} exceed the size cap")
    return hilbert_function_by_slices(J, A, degree_bound), "slices"

