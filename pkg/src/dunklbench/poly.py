"""Sparse multivariate Laurent polynomials over an exact field.

Terms are a dict mapping integer exponent vectors (tuples, negative entries
allowed) to nonzero field elements.  All operations are pure; polynomials are
never mutated after construction.  A module-level term guard aborts products
whose result would exceed a configurable term count (runaway-expression
protection for the identity checks).
"""

from __future__ import annotations


class TermGuardExceeded(Exception):
    pass


_TERM_GUARD = 10**6


def set_term_guard(limit):
    global _TERM_GUARD
    _TERM_GUARD = int(limit)


def term_guard():
    return _TERM_GUARD


class LaurentRing:
    """Variable context: a fixed ordered tuple of names over a field."""

    def __init__(self, names, field):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.field = field
        self.nvars = len(self.names)
        self._zero_exp = (0,) * self.nvars
        self.zero = Poly(self, {})
        self.one = Poly(self, {self._zero_exp: field.one})

    def index(self, name):
        return self.names.index(name)

    def const(self, c):
        if self.field.is_zero(c):
            return self.zero
        return Poly(self, {self._zero_exp: c})

    def from_int(self, n):
        return self.const(self.field.from_int(n))

    def from_fraction(self, q):
        return self.const(self.field.from_fraction(q))

    def var(self, name):
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Poly(self, {tuple(e): self.field.one})

    def monomial(self, exps, coeff=None):
        coeff = self.field.one if coeff is None else coeff
        if self.field.is_zero(coeff):
            return self.zero
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent vector length mismatch")
        return Poly(self, {exps: coeff})

    def __eq__(self, other):
        return (
            isinstance(other, LaurentRing)
            and self.names == other.names
            and self.field is other.field
        )

    def __hash__(self):
        return hash((self.names, id(self.field)))

    def __repr__(self):
        return f"LaurentRing({self.names}, {self.field.name})"


class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- basic queries ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_exp in self.terms)

    def constant_value(self):
        if not self.terms:
            return self.ring.field.zero
        return self.terms.get(self.ring._zero_exp)

    def leading(self):
        """Lex-leading (exponent, coefficient); raises on zero."""
        e = max(self.terms)
        return e, self.terms[e]

    def min_exps(self):
        its = iter(self.terms)
        m = list(next(its))
        for e in its:
            for i, v in enumerate(e):
                if v < m[i]:
                    m[i] = v
        return tuple(m)

    def degree(self, i):
        """Maximum exponent of variable i (None for the zero polynomial)."""
        if not self.terms:
            return None
        return max(e[i] for e in self.terms)

    def involves(self, i):
        return any(e[i] for e in self.terms)

    def __len__(self):
        return len(self.terms)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        f = self.ring.field
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for e, c in b.items():
            s = f.add(out[e], c) if e in out else c
            if f.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return Poly(self.ring, out)

    def __neg__(self):
        neg = self.ring.field.neg
        return Poly(self.ring, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        f = self.ring.field
        a, b = self.terms, other.terms
        if not a or not b:
            return self.ring.zero
        if len(a) > len(b):
            a, b = b, a
        out = {}
        mul, add, is_zero = f.mul, f.add, f.is_zero
        guard = _TERM_GUARD
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                c = mul(ca, cb)
                if e in out:
                    s = add(out[e], c)
                    if is_zero(s):
                        del out[e]
                    else:
                        out[e] = s
                else:
                    out[e] = c
            if len(out) > guard:
                raise TermGuardExceeded(f"product exceeds {guard} terms")
        return Poly(self.ring, out)

    def scale(self, c):
        f = self.ring.field
        if f.is_zero(c):
            return self.ring.zero
        mul = f.mul
        return Poly(self.ring, {e: mul(c, v) for e, v in self.terms.items()})

    def shift(self, exps):
        """Multiply by the monomial with the given exponent vector."""
        if not any(exps):
            return self
        return Poly(
            self.ring,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()},
        )

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power on a polynomial")
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- calculus and substitution ----------------------------------------

    def euler(self, i):
        """t_i * d/dt_i; exponent-weighted, monomials are preserved."""
        f = self.ring.field
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                out[e] = f.mul(f.from_int(k), c)
        return Poly(self.ring, out)

    def swap_vars(self, i, j):
        out = {}
        for e, c in self.terms.items():
            l = list(e)
            l[i], l[j] = l[j], l[i]
            out[tuple(l)] = c
        return Poly(self.ring, out)

    def invert_var(self, i):
        out = {}
        for e, c in self.terms.items():
            l = list(e)
            l[i] = -l[i]
            out[tuple(l)] = c
        return Poly(self.ring, out)

    def apply_exponent_map(self, mapping):
        """mapping[i] = (j, sign): exponent of var i moves to var j times sign."""
        out = {}
        f = self.ring.field
        for e, c in self.terms.items():
            l = [0] * self.ring.nvars
            for i, v in enumerate(e):
                if v:
                    j, sg = mapping[i]
                    l[j] += sg * v
            key = tuple(l)
            if key in out:
                s = f.add(out[key], c)
                if f.is_zero(s):
                    del out[key]
                else:
                    out[key] = s
            else:
                out[key] = c
        return Poly(self.ring, out)

    def coeff_of_var_power(self, i, k):
        """Polynomial coefficient of (var i)^k, with var i's slot zeroed."""
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                l = list(e)
                l[i] = 0
                out[tuple(l)] = c
        return Poly(self.ring, out)

    # -- evaluation --------------------------------------------------------

    def eval(self, point):
        """Exact value at a full point (list of field elements, by var index)."""
        f = self.ring.field
        total = f.zero
        cache = {}
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    p = cache.get(key)
                    if p is None:
                        base = point[i]
                        if k < 0:
                            p = f.inv(base) ** (-k) if base != f.zero else None
                            if p is None:
                                raise ZeroDivisionError("negative power at zero")
                        else:
                            p = base**k
                        cache[key] = p
                    v = f.mul(v, p)
            total = f.add(total, v)
        return total

    def eval_float(self, point):
        """Float (or complex) value; used only by the transcendental oracles."""
        total = 0.0
        for e, c in self.terms.items():
            v = self.ring.field.to_float(c)
            for i, k in enumerate(e):
                if k:
                    v *= point[i] ** k
            total += v
        return total

    # -- exact division ----------------------------------------------------

    def divide_exact(self, divisor):
        """Return self / divisor if the quotient is a Laurent polynomial, else None.

        divisor must have min exponents 0 in every variable (canonical factor).
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        shift = self.min_exps()
        rem = (
            dict(self.terms)
            if not any(shift)
            else {tuple(a - b for a, b in zip(e, shift)): c for e, c in self.terms.items()}
        )
        f = self.ring.field
        le_d = max(divisor.terms)
        lc_d = divisor.terms[le_d]
        dterms = divisor.terms
        q = {}
        while rem:
            le_r = max(rem)
            e = tuple(a - b for a, b in zip(le_r, le_d))
            if any(x < 0 for x in e):
                return None
            c = f.div(rem[le_r], lc_d)
            q[e] = c
            nc = f.neg(c)
            for ed, cd in dterms.items():
                key = tuple(a + b for a, b in zip(e, ed))
                if key in rem:
                    s = f.add(rem[key], f.mul(nc, cd))
                    if f.is_zero(s):
                        del rem[key]
                    else:
                        rem[key] = s
                else:
                    rem[key] = f.mul(nc, cd)
        qp = Poly(self.ring, q)
        return qp.shift(shift) if any(shift) else qp

    # -- misc ---------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sort_key(self):
        return tuple(sorted(self.terms))

    def __repr__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        rf = self.ring.field.repr_elem
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"{names[i]}^{k}" if k != 1 else names[i] for i, k in enumerate(e) if k
            )
            cs = rf(c)
            parts.append(f"{cs}*{mono}" if mono and cs != "1" else (mono or cs))
        return " + ".join(parts)
