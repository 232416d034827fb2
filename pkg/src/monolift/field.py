"""Exact scalar fields: the rationals and prime fields GF(p)."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

# Largest prime below 2^31: products of two residues fit in a signed 64-bit int.
LARGE_PRIME = 2_147_483_647
SPEED_PRIME = 32003


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class Field:
    """``characteristic == 0`` means the rationals."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic and not _is_prime(self.characteristic):
            raise ValueError(f"{self.characteristic} is not prime")

    @property
    def is_rational(self):
        return self.characteristic == 0

    @property
    def name(self):
        return "QQ" if self.is_rational else f"GF({self.characteristic})"

    def __call__(self, x):
        p = self.characteristic
        if p:
            if isinstance(x, Fraction):
                if x.denominator % p == 0:
                    raise ZeroDivisionError(f"{x} has no image in {self.name}")
                return x.numerator * pow(x.denominator, -1, p) % p
            return int(x) % p
        if isinstance(x, int):
            return x
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else x

    def div(self, a, b):
        p = self.characteristic
        if p:
            if b % p == 0:
                raise ZeroDivisionError("division by zero")
            return a * pow(b, -1, p) % p
        return self(Fraction(a) / Fraction(b))

    def __str__(self):
        return self.name


QQ = Field(0)


def GF(p):
    return Field(p)


def field_from_name(name):
    """``"QQ"``, ``"GF(32003)"`` or a bare prime like ``"32003"``."""
    s = name.strip().upper()
    if s in ("QQ", "Q", "0"):
        return QQ
    if s.startswith("GF(") and s.endswith(")"):
        s = s[3:-1]
    return GF(int(s))


def default_field():
    """Field selected by ``MONOLIFT_FIELD`` (default: the rationals)."""
    return field_from_name(os.environ.get("MONOLIFT_FIELD", "QQ"))
