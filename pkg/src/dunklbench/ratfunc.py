"""Rational functions with factored denominators, and 1/u expansions.

A RatFunc is num / prod(factor^e) where num is a Laurent polynomial and every
denominator factor is canonical (min exponent 0 in each variable, lex-leading
coefficient 1).  Keeping the denominator factored makes additions cheap
(factor-wise lcm instead of a blind product) and lets cancellation run by
trial division, so no general multivariate gcd is ever needed: since the
numerator is always computed exactly over a common denominator, a RatFunc is
zero as a function iff its numerator is the zero polynomial.
"""

from __future__ import annotations

from .poly import LaurentRing, Poly


class PoleError(ZeroDivisionError):
    """A denominator factor vanished at the evaluation point."""


class Factor:
    """Canonical denominator factor (monic-lex, monomial-free), hashable."""

    __slots__ = ("poly", "_key", "_hash")

    def __init__(self, poly):
        self.poly = poly
        self._key = tuple(sorted(poly.terms.items()))
        self._hash = hash(self._key)

    def __eq__(self, other):
        return self._hash == other._hash and self._key == other._key

    def __lt__(self, other):
        return self._key < other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"({self.poly!r})"


def canonical_factor(p):
    """Split p = scalar * monomial^shift * canonical, return (shift, scalar, Factor|None).

    Returns factor None when the canonical part is the constant 1.
    """
    if p.is_zero():
        raise ZeroDivisionError("zero polynomial cannot be a denominator factor")
    shift = p.min_exps()
    if any(shift):
        p = p.shift(tuple(-s for s in shift))
    _, lc = p.leading()
    f = p.ring.field
    if lc != f.one:
        p = p.scale(f.inv(lc))
    if p.is_constant():
        return shift, lc, None
    return shift, lc, Factor(p)


class RatFunc:
    __slots__ = ("ring", "num", "den", "_den_poly")

    def __init__(self, ring, num, den=None, reduce=True):
        self.ring = ring
        self.num = num
        self.den = {} if den is None else den
        self._den_poly = None
        if num.is_zero():
            self.den = {}
        elif reduce and self.den:
            self._reduce()

    def _reduce(self):
        num = self.num
        den = dict(self.den)
        changed = False
        for fac in list(den):
            e = den[fac]
            while e > 0:
                q = num.divide_exact(fac.poly)
                if q is None:
                    break
                num, e, changed = q, e - 1, True
            if e:
                den[fac] = e
            else:
                del den[fac]
        if changed:
            self.num = num
            self.den = den

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_poly(cls, p):
        return cls(p.ring, p)

    @classmethod
    def ratio(cls, num, den):
        """num / den for Laurent polynomials; den factored canonically."""
        if den.is_zero():
            raise ZeroDivisionError("division by zero function")
        shift, scalar, fac = canonical_factor(den)
        f = num.ring.field
        num = num.scale(f.inv(scalar))
        if any(shift):
            num = num.shift(tuple(-s for s in shift))
        return cls(num.ring, num, {fac: 1} if fac is not None else {})

    # -- structure ----------------------------------------------------------

    def den_poly(self):
        if self._den_poly is None:
            p = self.ring.one
            for fac, e in self.den.items():
                p = p * fac.poly**e
            self._den_poly = p
        return self._den_poly

    def is_zero(self):
        """Exact: the numerator is maintained over a common denominator."""
        return self.num.is_zero()

    def is_constant(self):
        return not self.den and self.num.is_constant()

    def constant_value(self):
        return self.num.constant_value()

    def canonical(self):
        """Fully reduced form; reduction is maintained eagerly so this is stable."""
        out = RatFunc(self.ring, self.num, dict(self.den), reduce=True)
        return out

    # -- arithmetic -----------------------------------------------------------

    def _den_cofactor(self, lcm):
        cof = self.ring.one
        for fac, e in lcm.items():
            k = e - self.den.get(fac, 0)
            if k:
                cof = cof * fac.poly**k
        return cof

    def __add__(self, other):
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RatFunc(self.ring, self.num + other.num, dict(self.den))
        lcm = dict(self.den)
        for fac, e in other.den.items():
            if lcm.get(fac, 0) < e:
                lcm[fac] = e
        num = self.num * self._den_cofactor(lcm) + other.num * other._den_cofactor(lcm)
        return RatFunc(self.ring, num, lcm)

    def __neg__(self):
        return RatFunc(self.ring, -self.num, dict(self.den), reduce=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.num.is_zero() or other.num.is_zero():
            return RatFunc(self.ring, self.ring.zero)
        den = dict(self.den)
        for fac, e in other.den.items():
            den[fac] = den.get(fac, 0) + e
        return RatFunc(self.ring, self.num * other.num, den)

    def reciprocal(self):
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero function")
        shift, scalar, fac = canonical_factor(self.num)
        f = self.ring.field
        num = self.den_poly().scale(f.inv(scalar))
        if any(shift):
            num = num.shift(tuple(-s for s in shift))
        return RatFunc(self.ring, num, {fac: 1} if fac is not None else {})

    def __truediv__(self, other):
        return self * other.reciprocal()

    def scale(self, c):
        if self.ring.field.is_zero(c):
            return RatFunc(self.ring, self.ring.zero)
        return RatFunc(self.ring, self.num.scale(c), dict(self.den), reduce=False)

    def __pow__(self, n):
        if n < 0:
            return self.reciprocal() ** (-n)
        out = RatFunc(self.ring, self.ring.one)
        base = self
        for _ in range(n):
            out = out * base
        return out

    # -- calculus -----------------------------------------------------------

    def euler(self, i):
        """t_i d/dt_i, by the quotient rule over the factored denominator."""
        if not self.den:
            return RatFunc(self.ring, self.num.euler(i), {}, reduce=False)
        facs = [(fac, e) for fac, e in self.den.items() if fac.poly.involves(i)]
        prod_all = self.ring.one
        for fac, _ in facs:
            prod_all = prod_all * fac.poly
        num = self.num.euler(i) * prod_all
        f = self.ring.field
        for k, (fac, e) in enumerate(facs):
            cof = self.ring.one
            for m, (fac2, _) in enumerate(facs):
                if m != k:
                    cof = cof * fac2.poly
            num = num - self.num.scale(f.from_int(e)) * fac.poly.euler(i) * cof
        den = dict(self.den)
        for fac, e in facs:
            den[fac] = e + 1
        return RatFunc(self.ring, num, den)

    # -- substitution ---------------------------------------------------------

    def _map_exponents(self, mapping):
        num = self.num.apply_exponent_map(mapping)
        den = {}
        f = self.ring.field
        adjust_scalar = f.one
        adjust_shift = [0] * self.ring.nvars
        for fac, e in self.den.items():
            p = fac.poly.apply_exponent_map(mapping)
            shift, scalar, nf = canonical_factor(p)
            if nf is not None:
                den[nf] = den.get(nf, 0) + e
            if scalar != f.one:
                adjust_scalar = f.mul(adjust_scalar, scalar**e)
            for i, s in enumerate(shift):
                adjust_shift[i] += s * e
        if adjust_scalar != f.one:
            num = num.scale(f.inv(adjust_scalar))
        if any(adjust_shift):
            num = num.shift(tuple(-s for s in adjust_shift))
        return RatFunc(self.ring, num, den)

    def swap_vars(self, i, j):
        mapping = [(k, 1) for k in range(self.ring.nvars)]
        mapping[i], mapping[j] = (j, 1), (i, 1)
        return self._map_exponents(mapping)

    def invert_var(self, i):
        mapping = [(k, 1) for k in range(self.ring.nvars)]
        mapping[i] = (i, -1)
        return self._map_exponents(mapping)

    def substitute(self, spec):
        """spec: {name: target}, target a variable name or "1/<name>".

        Unlisted variables stay fixed.  Covers plain renames, swaps, and
        coordinate inversions; must be a bijection on the variables it moves.
        """
        ring = self.ring
        mapping = [(k, 1) for k in range(ring.nvars)]
        for src, tgt in spec.items():
            i = ring.index(src)
            if isinstance(tgt, str) and tgt.startswith("1/"):
                mapping[i] = (ring.index(tgt[2:]), -1)
            else:
                mapping[i] = (ring.index(tgt), 1)
        return self._map_exponents(mapping)

    # -- evaluation ------------------------------------------------------------

    def eval(self, point):
        f = self.ring.field
        d = f.one
        for fac, e in self.den.items():
            v = fac.poly.eval(point)
            if f.is_zero(v):
                raise PoleError(f"denominator factor vanished: {fac.poly!r}")
            d = f.mul(d, v**e)
        return f.div(self.num.eval(point), d)

    def eval_float(self, point):
        d = 1.0
        for fac, e in self.den.items():
            d *= fac.poly.eval_float(point) ** e
        return self.num.eval_float(point) / d

    # -- misc --------------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, RatFunc)
            and self.ring == other.ring
            and self.num == other.num
            and self.den == other.den
        )

    def __repr__(self):
        if not self.den:
            return repr(self.num)
        dens = " * ".join(
            f"({fac.poly!r})^{e}" if e != 1 else f"({fac.poly!r})" for fac, e in sorted(self.den.items())
        )
        return f"({self.num!r}) / [{dens}]"


class FunctionField:
    """Convenience facade: a LaurentRing plus RatFunc-valued constructors."""

    def __init__(self, names, field):
        self.ring = LaurentRing(names, field)
        self.field = field
        self.names = self.ring.names
        self.zero = RatFunc(self.ring, self.ring.zero)
        self.one = RatFunc(self.ring, self.ring.one)

    def const(self, c):
        return RatFunc(self.ring, self.ring.const(c))

    def from_int(self, n):
        return RatFunc(self.ring, self.ring.from_int(n))

    def from_fraction(self, q):
        return RatFunc(self.ring, self.ring.from_fraction(q))

    def var(self, name):
        return RatFunc(self.ring, self.ring.var(name))

    def monomial(self, exps, coeff=None):
        return RatFunc(self.ring, self.ring.monomial(exps, coeff))

    def ratio(self, num, den):
        """num/den where both are RatFunc."""
        return num / den

    def index(self, name):
        return self.ring.index(name)


class InfinitySeries:
    """Truncated expansion c_0 + c_1/u + ... + c_K/u^K; coefficients RatFunc.

    Arithmetic never claims coefficients beyond the stored order.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var, coeffs):
        self.var = var
        self.coeffs = list(coeffs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def mul(self, other):
        if self.var != other.var:
            raise ValueError("series variable mismatch")
        K = min(self.order, other.order)
        out = []
        for m in range(K + 1):
            ring = self.coeffs[0].ring
            acc = RatFunc(ring, ring.zero)
            for j in range(m + 1):
                acc = acc + self.coeffs[j] * other.coeffs[m - j]
            out.append(acc)
        return InfinitySeries(self.var, out)

    def eval(self, u_value, point):
        """Exact value of the truncation with u set to u_value (field element)."""
        ring = self.coeffs[0].ring
        f = ring.field
        inv_u = f.inv(u_value)
        total = f.zero
        p = f.one
        for c in self.coeffs:
            total = f.add(total, f.mul(c.eval(point), p))
            p = f.mul(p, inv_u)
        return total

    def __repr__(self):
        return f"InfinitySeries({self.var}, order={self.order})"


def expand_at_infinity(fn, uname, K):
    """Expand a RatFunc in powers of 1/u to order K.

    Requires fn bounded at u = infinity (deg_u num <= deg_u den after clearing
    negative u powers); coefficients are exact RatFuncs in the other variables.
    """
    if K < 0:
        raise ValueError("expansion order must be >= 0")
    ring = fn.ring
    iu = ring.index(uname)
    num = fn.num
    den = fn.den_poly()
    if num.is_zero():
        z = RatFunc(ring, ring.zero)
        return InfinitySeries(uname, [z] * (K + 1))
    mn = min(e[iu] for e in num.terms)
    md = min(e[iu] for e in den.terms)
    if mn < 0:
        sh = [0] * ring.nvars
        sh[iu] = -mn
        num = num.shift(tuple(sh))
        md += -mn
        # keep num/den ratio intact: shift den equally
        den = den.shift(tuple(sh))
    if md < 0:
        sh = [0] * ring.nvars
        sh[iu] = -md
        num = num.shift(tuple(sh))
        den = den.shift(tuple(sh))
    dn = num.degree(iu)
    dd = den.degree(iu)
    if dn > dd:
        raise ValueError("function is unbounded at u = infinity")
    A = [num.coeff_of_var_power(iu, dd - j) for j in range(K + 1)]
    B = [den.coeff_of_var_power(iu, dd - j) for j in range(K + 1)]
    b0 = RatFunc(ring, B[0])
    coeffs = []
    for m in range(K + 1):
        acc = RatFunc(ring, A[m])
        for j in range(1, m + 1):
            if not B[j].is_zero():
                acc = acc - RatFunc(ring, B[j]) * coeffs[m - j]
        coeffs.append(acc / b0)
    return InfinitySeries(uname, coeffs)
