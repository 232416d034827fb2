"""Configurations of linear varieties cut out by entries of a lifting matrix.

A component is a set of matrix entries ``(j, i)``, at most one per row, and
stands for the linear variety ``L_{j,i} = 0``.  For Artinian ideals every
component uses all ``n`` rows and is named by its index tuple
``(i_1, ..., i_n)``.  Dimensions are computed from the generic rank rule in
:func:`monolift.lifting.expected_rank`, never from actual linear forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .errors import PreconditionError
from .ideals import irreducible_decomposition, quotient
from .lifting import RESTRICTED, expected_rank
from .monomial import Monomial, MonomialIdeal, is_artinian, max_exponents, minimalize, standard_monomials


def _component(entries):
    comp = tuple(sorted((int(j), int(i)) for j, i in entries))
    rows = [j for j, _ in comp]
    if len(set(rows)) != len(rows):
        raise ValueError(f"component {comp} uses a row twice")
    if any(i < 1 for _, i in comp):
        raise ValueError(f"component {comp} has a nonpositive column index")
    return comp


@dataclass(frozen=True)
class Configuration:
    """Components over ``n`` rows in ``P^{n+t-1}``; ``grid`` is set for the Artinian (index tuple) case."""

    n: int
    t: int
    components: tuple
    grid: tuple | None = None

    def __post_init__(self):
        comps = tuple(sorted({_component(c) for c in self.components}))
        object.__setattr__(self, "components", comps)
        if self.grid is not None:
            grid = tuple(int(N) for N in self.grid)
            object.__setattr__(self, "grid", grid)
            if len(grid) != self.n:
                raise ValueError("grid needs one bound per row")
            for c in comps:
                if [j for j, _ in c] != list(range(1, self.n + 1)):
                    raise ValueError(f"grid component {c} must use every row once")
                if any(i > grid[j - 1] for j, i in c):
                    raise ValueError(f"component {c} lies outside the grid {grid}")

    @classmethod
    def from_indices(cls, indices, grid, t=1):
        n = len(grid)
        return cls(n, t, tuple(tuple(zip(range(1, n + 1), idx)) for idx in indices), tuple(grid))

    @property
    def is_grid(self):
        return self.grid is not None

    def indices(self):
        """Index tuples ``(i_1, ..., i_n)`` (grid case), sorted lexicographically."""
        if not self.is_grid:
            raise PreconditionError("index tuples exist only for grid configurations")
        return [tuple(i for _, i in c) for c in self.components]

    def index_set(self):
        return frozenset(self.indices())

    def __len__(self):
        return len(self.components)

    def codims(self):
        return [len(c) for c in self.components]

    def component_dimension(self, comp):
        return self.n + self.t - 1 - len(comp)

    def is_equidimensional(self):
        return len(set(self.codims())) <= 1

    def slice_counts(self):
        """Number of grid components with each value of ``i_1``."""
        counts = [0] * self.grid[0]
        for idx in self.indices():
            counts[idx[0] - 1] += 1
        return counts

    def to_json(self):
        if self.is_grid:
            return {"grid": list(self.grid), "t": self.t, "components": [list(i) for i in self.indices()]}
        return {"n": self.n, "t": self.t, "components": [[list(e) for e in c] for c in self.components]}

    @classmethod
    def from_json(cls, data):
        if "grid" in data:
            return cls.from_indices([tuple(c) for c in data["components"]], tuple(data["grid"]), int(data.get("t", 1)))
        return cls(int(data["n"]), int(data.get("t", 1)), tuple(tuple(tuple(e) for e in c) for c in data["components"]))

    def render(self):
        """ASCII picture of a 3-row grid configuration, one panel per value of ``i_1``."""
        if not self.is_grid or self.n != 3:
            return "\n".join(format_component(c) for c in self.components)
        members = self.index_set()
        N1, N2, N3 = self.grid
        panels = []
        for a in range(1, N1 + 1):
            lines = [f"L1,{a}-plane", "      " + " ".join(f"L3,{c}" for c in range(1, N3 + 1))]
            for b in range(1, N2 + 1):
                cells = ["  *  " if (a, b, c) in members else "  .  " for c in range(1, N3 + 1)]
                lines.append(f"L2,{b}  " + "".join(cells).rstrip())
            panels.append("\n".join(lines))
        return "\n\n".join(panels)


def format_component(comp):
    return "(" + ", ".join(f"L{j},{i}" for j, i in comp) + ")"


# -- enumeration ---------------------------------------------------------------


def components_artinian(J, bounds=None, t=1):
    """Index tuples ``i`` with ``x^{i-1}`` outside ``J``, one per standard monomial."""
    if not is_artinian(J):
        raise PreconditionError(f"{J} is not Artinian")
    grid = tuple(bounds) if bounds is not None else max_exponents(J)[0]
    indices = [tuple(e + 1 for e in m) for m in standard_monomials(J)]
    return Configuration.from_indices(indices, grid, t)


def irredundant_components(comps):
    """Drop every component whose entry set contains another's (it is a subvariety)."""
    comps = sorted({_component(c) for c in comps}, key=lambda c: (len(c), c))
    kept = []
    sets = []
    for c in comps:
        s = set(c)
        if not any(k <= s for k in sets):
            kept.append(c)
            sets.append(s)
    return kept


def components_general(J, t=1):
    """Components of the lifted scheme: each irreducible ``(x_{j1}^{a1}, ...)`` gives ``prod a_s`` of them."""
    comps = []
    for Q in irreducible_decomposition(J):
        rows = [j for j, _ in Q.entries]
        for cols in product(*(range(1, a + 1) for _, a in Q.entries)):
            comps.append(tuple(zip(rows, cols)))
    return Configuration(J.n, t, tuple(irredundant_components(comps)))


# -- stick figures --------------------------------------------------------------


def intersection_dimension(comps, n, t, mode=RESTRICTED):
    """Projective dimension of the intersection of components (``-1`` when empty)."""
    entries = set()
    for c in comps:
        entries |= set(c)
    return n + t - 1 - expected_rank(entries, n, t, mode)


def _inside_u_locus(comps, n, t):
    """A restricted intersection lies in ``u = 0`` iff adding ``u`` does not cut it further."""
    entries = set()
    for c in comps:
        entries |= set(c)
    rows = {j for j, _ in entries}
    return expected_rank(entries, n, t, RESTRICTED) == t + len(rows)


@dataclass
class StickReport:
    passed: bool
    strata: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    exempt: int = 0
    restrict_away_from_W: bool = False

    def to_json(self):
        return {
            "passed": self.passed,
            "strata": {str(d): k for d, k in sorted(self.strata.items())},
            "failures": [{"components": [format_component(c) for c in trio], "dimension": dim, "allowed": allowed}
                         for trio, dim, allowed in self.failures],
            "exempt_in_u_locus": self.exempt,
            "restrict_away_from_W": self.restrict_away_from_W,
        }


def is_generalized_stick_figure(V, restrict_away_from_W=False, mode=RESTRICTED, max_failures=20):
    """Any three components of the same dimension ``d`` meet in dimension at most ``d - 2``.

    Each dimension stratum is checked separately.  With
    ``restrict_away_from_W`` an intersection lying inside ``u = 0`` is
    exempt (there the scheme meets the base scheme of the unlifted ideal).
    """
    strata = {}
    for c in V.components:
        strata.setdefault(V.component_dimension(c), []).append(c)
    report = StickReport(True, {d: len(cs) for d, cs in strata.items()}, restrict_away_from_W=restrict_away_from_W)
    for d, comps in sorted(strata.items()):
        for trio in combinations(comps, 3):
            dim = intersection_dimension(trio, V.n, V.t, mode)
            if dim <= max(d - 2, -1):
                continue
            if restrict_away_from_W and mode == RESTRICTED and _inside_u_locus(trio, V.n, V.t):
                report.exempt += 1
                continue
            report.passed = False
            if len(report.failures) < max_failures:
                report.failures.append((trio, dim, d - 2))
    return report


# -- conditions on grid configurations -----------------------------------------------


def _grid_members(V):
    if not V.is_grid:
        raise PreconditionError("the conditions apply to grid configurations")
    return V.index_set()


def check_condition2(V):
    """Lowering any index ``i_j >= 2`` by one stays inside ``V``."""
    return condition2_witness(V) is None


def condition2_witness(V):
    members = _grid_members(V)
    for idx in sorted(members):
        for j in range(V.n):
            if idx[j] >= 2:
                lower = idx[:j] + (idx[j] - 1,) + idx[j + 1:]
                if lower not in members:
                    return idx, lower
    return None


def _compositions(total, parts):
    """Tuples of ``parts`` positive integers summing to ``total``, lexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def condition3_failures(V, limit=None):
    """All ``(member, missing)`` pairs violating the redistribution condition.

    For ``i`` in ``V`` and ``i_j >= 2``, every tuple
    ``(i_1, ..., i_j - 1, i'_{j+1}, ..., i'_n)`` with
    ``sum i' = i_{j+1} + ... + i_n + 1`` must be in ``V``; tuples outside the
    grid count as missing.
    """
    members = _grid_members(V)
    out = []
    for idx in sorted(members):
        for j in range(V.n):
            if idx[j] < 2:
                continue
            tail = idx[j + 1:]
            for new_tail in _compositions(sum(tail) + 1, len(tail)):
                cand = idx[:j] + (idx[j] - 1,) + new_tail
                if cand not in members:
                    out.append((idx, cand))
                    if limit and len(out) >= limit:
                        return out
    return out


def check_condition3(V):
    """``(holds, witness)``: condition 2 plus redistribution; ``witness`` is the first failing pair."""
    w2 = condition2_witness(V)
    if w2 is not None:
        return False, w2
    fails = condition3_failures(V, limit=1)
    return (not fails), (fails[0] if fails else None)


def monomial_ideal_from_configuration(V):
    """``J`` generated by ``x^{i-1}`` for grid tuples ``i`` outside ``V`` together with ``x_j^{N_j}``.

    For ``V`` satisfying condition 2 this inverts :func:`components_artinian`.
    """
    w = condition2_witness(V)
    if w is not None:
        raise PreconditionError(f"condition 2 fails: {w[0]} is present but {w[1]} is not")
    members = V.index_set()
    n = V.n
    gens = []
    for j, N in enumerate(V.grid):
        e = [0] * n
        e[j] = N
        gens.append(Monomial(e))
    for idx in product(*(range(1, N + 1) for N in V.grid)):
        if idx not in members:
            gens.append(Monomial(i - 1 for i in idx))
    return minimalize(gens, n)


invert = monomial_ideal_from_configuration


@dataclass
class ResidualReport:
    passed: bool
    complete_intersection: MonomialIdeal
    residual: MonomialIdeal
    complement_size: int
    notes: list = field(default_factory=list)

    def to_json(self):
        return {
            "passed": self.passed,
            "complete_intersection": str(self.complete_intersection),
            "residual": str(self.residual),
            "complement_size": self.complement_size,
            "notes": self.notes,
        }


def residual_check(J, t=1):
    """The residual ``(x^N : J)`` lifts to the grid complement of ``J``'s components, reversed.

    Reversal ``i_j -> N_j + 1 - i_j`` corresponds to lifting with each row
    of the matrix read backwards.
    """
    if not is_artinian(J):
        raise PreconditionError(f"{J} is not Artinian")
    grid, _ = max_exponents(J)
    ci = MonomialIdeal(J.n, [Monomial(N if k == j else 0 for k in range(J.n)) for j, N in enumerate(grid)])
    residual = quotient(ci, J)
    mine = components_artinian(J, grid, t).index_set()
    allpts = set(product(*(range(1, N + 1) for N in grid)))
    reversed_complement = {tuple(N + 1 - i for i, N in zip(idx, grid)) for idx in allpts - mine}
    theirs = set(components_artinian(residual, grid, t).indices()) if not residual.is_unit() else set()
    ok = theirs == reversed_complement
    notes = ["the residual is read as the monomial quotient (x^N : J) lifted with the reversed matrix"]
    return ResidualReport(ok, ci, residual, len(reversed_complement), notes)


def lifted_primary_degrees(J):
    """``[(variables, degree)]`` for the primary components of ``J`` (degree of the scheme they define)."""
    from .ideals import hilbert_series, primary_components
    return [(v, hilbert_series(Q).degree) for v, Q in primary_components(J)]
