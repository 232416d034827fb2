"""O-sequences, differences, lex-segment ideals with a given h-vector, and the
pipeline from an admissible Hilbert function to a lifted configuration."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import PreconditionError, ResourceLimitError
from .monomial import Monomial, MonomialIdeal, count_monomials, is_lex_segment, minimalize, monomials_of_degree


def binomial_representation(c, d):
    """``c = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_j, j)`` with ``k_d > ... > k_j >= j >= 1``.

    Returns the list of pairs ``(k_i, i)``.
    """
    if c < 0 or d < 1:
        raise ValueError("need c >= 0 and d >= 1")
    out = []
    i = d
    while c > 0 and i >= 1:
        k = i
        while comb(k + 1, i) <= c:
            k += 1
        out.append((k, i))
        c -= comb(k, i)
        i -= 1
    return out


def macaulay_growth(c, d):
    """Largest possible ``h_{d+1}`` when ``h_d = c``."""
    return sum(comb(k + 1, i + 1) for k, i in binomial_representation(c, d))


def is_o_sequence(h):
    """``h_0 = 1`` and ``h_{d+1} <= h_d^<d>`` for every ``d >= 1``; entries non-negative."""
    h = list(h)
    if not h or h[0] != 1 or any(x < 0 for x in h):
        return False
    return all(h[d + 1] <= macaulay_growth(h[d], d) for d in range(1, len(h) - 1))


def difference(seq, times=1):
    """``Delta^times`` with the convention ``c_{-1} = 0``."""
    seq = list(seq)
    for _ in range(times):
        seq = [seq[k] - (seq[k - 1] if k else 0) for k in range(len(seq))]
    return seq


def integrate(h, times, length):
    """Inverse of :func:`difference` on the first ``length`` terms (``h`` padded with zeros)."""
    seq = list(h)[:length] + [0] * max(0, length - len(h))
    for _ in range(times):
        acc, out = 0, []
        for x in seq:
            acc += x
            out.append(acc)
        seq = out
    return seq


def is_t_differentiable(s, t):
    """``Delta^i s`` is an O-sequence for ``i = 0..t`` (on the given finite prefix)."""
    return all(is_o_sequence(difference(s, i)) for i in range(t + 1))


def strip_zeros(h):
    h = list(h)
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return h


def is_generic_h_vector(h, n=None):
    """Full binomial prefix ``1, n, C(n+1, 2), ...`` followed by zeros."""
    h = strip_zeros(h)
    n = h[1] if n is None and len(h) > 1 else (n or 1)
    return all(x == count_monomials(n, d) for d, x in enumerate(h))


def _validate_h(h, n):
    h = strip_zeros(h)
    if not is_o_sequence(h):
        raise PreconditionError(f"{tuple(h)} is not an O-sequence")
    if len(h) > 1 and h[1] > n:
        raise PreconditionError(f"h_1 = {h[1]} exceeds the number of variables {n}")
    return h


def lex_ideal_from_h_vector(h, n=None):
    """The Artinian lex-segment ideal whose standard monomials in degree ``d`` are
    the ``h_d`` lex-smallest monomials of that degree."""
    h = strip_zeros(h)
    if n is None:
        n = max(h[1] if len(h) > 1 else 1, 1)
    h = _validate_h(h, n)
    gens = []
    for d in range(len(h) + 1):
        hd = h[d] if d < len(h) else 0
        mons = monomials_of_degree(n, d)
        gens.extend(mons[: len(mons) - hd])
    return minimalize(gens, n)


def non_lex_ideal_with_h_vector(h, n=None, budget=200_000):
    """An Artinian monomial ideal with h-vector ``h`` that is *not* lex-segment, or ``None`` if none exists.

    Depth-first search over order ideals of standard monomials, degree by
    degree; ``budget`` bounds the number of subsets tried.
    """
    h = strip_zeros(h)
    if n is None:
        n = max(h[1] if len(h) > 1 else 1, 1)
    h = _validate_h(h, n)
    tried = [0]

    def admissible(prev, d):
        out = []
        for m in monomials_of_degree(n, d):
            ok = True
            for j in range(n):
                if m[j]:
                    parent = Monomial(m[k] - (k == j) for k in range(n))
                    if parent not in prev:
                        ok = False
                        break
            if ok:
                out.append(m)
        return out

    def search(d, std_prev, std_all):
        if d == len(h):
            J = _ideal_from_standard(std_all, n, len(h))
            return None if is_lex_segment(J) else J
        cands = admissible(std_prev, d)
        if len(cands) < h[d]:
            return None
        # try the lex choice (smallest monomials) first, then its neighbours
        ordered = list(reversed(cands))
        for chosen in combinations(ordered, h[d]):
            tried[0] += 1
            if tried[0] > budget:
                raise ResourceLimitError("search budget exhausted")
            res = search(d + 1, set(chosen), std_all | set(chosen))
            if res is not None:
                return res
        return None

    return search(1, {Monomial.one(n)}, {Monomial.one(n)}) if len(h) > 1 else None


def _ideal_from_standard(std, n, top):
    gens = [m for d in range(top + 1) for m in monomials_of_degree(n, d) if m not in std]
    return minimalize(gens, n)


@dataclass
class PipelineResult:
    h_vector: tuple
    t: int
    ideal: MonomialIdeal
    matrix: object = None
    configuration: object = None
    stick: object = None
    hilbert_values: list = field(default_factory=list)
    hilbert_ok: bool = False
    hilbert_method: str = ""
    degree_ok: bool = False

    @property
    def passed(self):
        stick_ok = self.stick is None or self.stick.passed
        return stick_ok and self.hilbert_ok and self.degree_ok

    def to_json(self):
        return {
            "h_vector": list(self.h_vector),
            "t": self.t,
            "ideal": str(self.ideal),
            "matrix": self.matrix.to_json() if self.matrix is not None else None,
            "configuration": self.configuration.to_json() if self.configuration is not None else None,
            "stick": self.stick.to_json() if self.stick is not None else None,
            "hilbert": {"ok": self.hilbert_ok, "method": self.hilbert_method, "values": self.hilbert_values},
            "degree_ok": self.degree_ok,
            "passed": self.passed,
        }


def stick_figure_from_h_vector(h, t, n=None, matrix="vandermonde", seed=0, degree_bound=None):
    """Lex ideal with h-vector ``h`` lifted ``t`` times: an ACM configuration of ``(t-1)``-planes."""
    from .configuration import components_artinian, is_generalized_stick_figure
    from .ideals import hilbert_series
    from .lifting import lifted_hilbert_function, random_lifting_matrix, vandermonde_lifting_matrix
    from .monomial import max_exponents

    h = strip_zeros(h)
    J = lex_ideal_from_h_vector(h, n)
    n = J.n
    top = degree_bound if degree_bound is not None else len(h) + 2
    if t == 0:
        got = list(hilbert_series(J).h_vector)
        return PipelineResult(tuple(h), 0, J, hilbert_values=got, hilbert_ok=strip_zeros(got) == h,
                              hilbert_method="standard monomials", degree_ok=sum(got) == sum(h))
    lengths, _ = max_exponents(J)
    if matrix == "vandermonde":
        A = vandermonde_lifting_matrix(n, t, lengths)
    else:
        A = random_lifting_matrix(n, t, lengths, seed)
    V = components_artinian(J, lengths, t)
    stick = is_generalized_stick_figure(V)
    values, method = lifted_hilbert_function(J, A, top, seed=seed)
    target = [h[d] if d < len(h) else 0 for d in range(top + 1)]
    ok = difference(values, t) == target
    return PipelineResult(tuple(h), t, J, A, V, stick, values, ok, method, len(V) == sum(h))


def stick_figure_from_o_sequence(s, t, n=None, matrix="vandermonde", seed=0):
    """Same pipeline starting from a prefix of the Hilbert function ``s`` of dimension ``t``."""
    if not is_t_differentiable(s, t):
        raise PreconditionError(f"{tuple(s)} is not {t}-times differentiable")
    h = strip_zeros(difference(s, t))
    if len(h) >= len(s):
        raise PreconditionError("the prefix is too short to see the h-vector end")
    return stick_figure_from_h_vector(h, t, n, matrix, seed)
