"""Seeded random monomial ideals for property suites and batch runs."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .monomial import Monomial, MonomialIdeal


@dataclass(frozen=True)
class CorpusConfig:
    size: int = 200
    max_vars: int = 4
    max_power: int = 4
    t_values: tuple = (1, 2, 3)
    max_extra: int = 4
    seed: int = 20240611


def random_artinian_ideal(rng, n, max_power, max_extra=4):
    """Pure powers ``x_j^{a_j}`` (``a_j <= max_power``) plus a few random monomials below them."""
    powers = [rng.randint(1, max_power) for _ in range(n)]
    gens = []
    for j, a in enumerate(powers):
        e = [0] * n
        e[j] = a
        gens.append(Monomial(e))
    for _ in range(rng.randint(0, max_extra)):
        gens.append(Monomial(rng.randint(0, a - 1) for a in powers))
    gens = [g for g in gens if g.degree > 0]
    return MonomialIdeal(n, gens)


def random_monomial_ideal(rng, n, max_degree, count):
    """``count`` random nonconstant monomials of degree at most ``max_degree``."""
    gens = []
    while len(gens) < count:
        e = [rng.randint(0, max_degree) for _ in range(n)]
        if 0 < sum(e) <= max_degree:
            gens.append(Monomial(e))
    return MonomialIdeal(n, gens)


def artinian_corpus(config=CorpusConfig()):
    """List of ``(J, t)`` pairs, deterministic in ``config.seed``."""
    rng = random.Random(config.seed)
    out = []
    for k in range(config.size):
        n = rng.randint(1, config.max_vars)
        J = random_artinian_ideal(rng, n, config.max_power, config.max_extra)
        out.append((J, config.t_values[k % len(config.t_values)]))
    return out


def random_h_vector(rng, max_h1=3, max_length=6):
    """A random Artinian O-sequence ``(1, h_1, ..., h_s)`` with positive entries."""
    from .osequence import is_o_sequence, macaulay_growth

    h = [1, rng.randint(1, max_h1)]
    while len(h) < max_length and rng.random() < 0.75:
        top = macaulay_growth(h[-1], len(h) - 1)
        h.append(rng.randint(1, top))
    assert is_o_sequence(h)
    return h
