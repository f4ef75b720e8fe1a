"""Coefficient fields for the exact kernel.

Two backends: exact rationals (gmpy2.mpq, falling back to Fraction) and a
prime field F_p used to accelerate identity testing.  Golden comparisons
always run over the rationals; the mod-p mode must agree on pass/fail.
"""

from __future__ import annotations

import operator
from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    _HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _mpq = Fraction
    _HAVE_GMPY2 = False

# Smallest prime above 2^61 (62 bits).
DEFAULT_PRIME = 2305843009213693967


class RationalField:
    """Arbitrary-precision rationals; elements are gmpy2.mpq values."""

    name = "rational"

    def __init__(self):
        self.zero = _mpq(0)
        self.one = _mpq(1)
        self.add = operator.add
        self.sub = operator.sub
        self.mul = operator.mul
        self.neg = operator.neg

    def from_int(self, a):
        return _mpq(a)

    def from_fraction(self, q):
        return _mpq(q.numerator, q.denominator)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero field element")
        return a / b

    def inv(self, a):
        return self.div(self.one, a)

    def is_zero(self, a):
        return a == 0

    def to_float(self, a):
        return float(Fraction(a.numerator, a.denominator))

    def repr_elem(self, a):
        n, d = a.numerator, a.denominator
        return str(n) if d == 1 else f"{n}/{d}"

    def __repr__(self):
        return "RationalField()"


class PrimeField:
    """F_p with int elements in [0, p); p must be prime (not re-checked)."""

    def __init__(self, p=DEFAULT_PRIME):
        self.p = p
        self.name = f"mod-{p}"
        self.zero = 0
        self.one = 1 % p

    def from_int(self, a):
        return a % self.p

    def from_fraction(self, q):
        return self.from_int(q.numerator) * self.inv(self.from_int(q.denominator)) % self.p

    def add(self, a, b):
        s = a + b
        return s - self.p if s >= self.p else s

    def sub(self, a, b):
        s = a - b
        return s + self.p if s < 0 else s

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return self.p - a if a else 0

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero field element")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == 0

    def to_float(self, a):
        # meaningless as a magnitude; only used by float oracles, which run over QQ
        return float(a)

    def repr_elem(self, a):
        return str(a)

    def __repr__(self):
        return f"PrimeField({self.p})"


QQ = RationalField()


def make_field(mode="rational", prime=DEFAULT_PRIME):
    if mode == "rational":
        return QQ
    if mode == "mod-p":
        return PrimeField(prime)
    raise ValueError(f"unknown field mode {mode!r}")
