"""Wavefunctions and the operators that act on them.

A WaveFunction is a finite sum of (rational coordinate function) x (spin basis
vector), stored consolidated: a map from spin multi-index to RatFunc.  Because
every coordinate part is kept exactly over a common denominator, a wavefunction
is the zero function iff its term map is empty; randomized point evaluation is
used to produce concrete witnesses, never to decide a pass.

PhysOperator is an expression tree over the generators (coordinate swaps,
coordinate inversions, Euler derivatives, multiplication by a rational
function, spin operators) with sums, compositions and scalar multiples.
Composite operators such as Dunkl operators are deliberately never
normal-ordered: products act by repeated application.
"""

from __future__ import annotations

from .ratfunc import PoleError
from .sampling import MAX_RETRIES, point_as_dict, sample_point


class WaveFunction:
    __slots__ = ("layout", "ff", "terms")

    def __init__(self, layout, ff, terms):
        self.layout = layout
        self.ff = ff
        self.terms = terms

    @classmethod
    def zero(cls, layout, ff):
        return cls(layout, ff, {})

    @classmethod
    def product(cls, layout, ff, coord, spin):
        """coord (RatFunc) times a SpinVector on the same layout."""
        terms = {}
        for idx, amp in spin.entries.items():
            v = coord * amp
            if not v.is_zero():
                terms[idx] = v
        return cls(layout, ff, terms)

    def __add__(self, other):
        out = dict(self.terms)
        for idx, v in other.terms.items():
            if idx in out:
                s = out[idx] + v
                if s.is_zero():
                    del out[idx]
                else:
                    out[idx] = s
            else:
                out[idx] = v
        return WaveFunction(self.layout, self.ff, out)

    def __sub__(self, other):
        return self + other.scale(self.ff.from_int(-1))

    def scale(self, r):
        if r.is_zero():
            return WaveFunction.zero(self.layout, self.ff)
        return WaveFunction(self.layout, self.ff, {k: v * r for k, v in self.terms.items()})

    def map_coords(self, fn):
        out = {}
        for idx, v in self.terms.items():
            w = fn(v)
            if not w.is_zero():
                out[idx] = w
        return WaveFunction(self.layout, self.ff, out)

    def apply_spin(self, sop):
        out = {}
        ci = sop.col_index()
        for idx, amp in self.terms.items():
            for row, v in ci.get(idx, ()):
                t = v * amp
                if row in out:
                    s = out[row] + t
                    if s.is_zero():
                        del out[row]
                    else:
                        out[row] = s
                elif not t.is_zero():
                    out[row] = t
        return WaveFunction(self.layout, self.ff, out)

    def is_zero(self):
        """Exact: empty term map iff the zero function."""
        return not self.terms

    def eval_at(self, point):
        return {idx: v.eval(point) for idx, v in self.terms.items()}

    def __eq__(self, other):
        return (
            isinstance(other, WaveFunction)
            and self.layout == other.layout
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return "WaveFunction(0)"
        parts = [f"{v!r} . e{list(idx)}" for idx, v in sorted(self.terms.items())]
        return "WaveFunction(" + " + ".join(parts) + ")"


def concat_basis(layout, ff, indices):
    """Basis wavefunction-ready SpinVector entries for concatenated index parts."""
    flat = tuple(i for part in indices for i in part)
    if len(flat) != layout.nspaces:
        raise ValueError("index concatenation does not match layout")
    return flat


# ---------------------------------------------------------------------------
# operator expression tree


class PhysOperator:
    def apply(self, psi):
        raise NotImplementedError

    def __matmul__(self, other):
        return Compose([self, other])

    def __add__(self, other):
        return OpSum([self, other])

    def __sub__(self, other):
        return OpSum([self, Scale(_MINUS_ONE, other)])

    def scaled(self, r):
        return Scale(r, self)


class _MinusOne:
    """Sentinel resolved against the operand's field at application time."""


_MINUS_ONE = _MinusOne()


class Ident(PhysOperator):
    def apply(self, psi):
        return psi

    def __repr__(self):
        return "1"


class CoordSwap(PhysOperator):
    """Exchange of two coordinate variables (positions of two particles)."""

    def __init__(self, i, j):
        self.i = i
        self.j = j

    def apply(self, psi):
        i, j = self.i, self.j
        return psi.map_coords(lambda f: f.swap_vars(i, j))

    def __repr__(self):
        return f"K({self.i},{self.j})"


class CoordInvert(PhysOperator):
    """t -> 1/t on one coordinate (the reflected-coordinate action)."""

    def __init__(self, i):
        self.i = i

    def apply(self, psi):
        i = self.i
        return psi.map_coords(lambda f: f.invert_var(i))

    def __repr__(self):
        return f"Inv({self.i})"


class Euler(PhysOperator):
    """t d/dt on one coordinate."""

    def __init__(self, i):
        self.i = i

    def apply(self, psi):
        i = self.i
        return psi.map_coords(lambda f: f.euler(i))

    def __repr__(self):
        return f"E({self.i})"


class Mul(PhysOperator):
    def __init__(self, f):
        self.f = f

    def apply(self, psi):
        f = self.f
        return psi.map_coords(lambda g: f * g)

    def __repr__(self):
        return f"Mul({self.f!r})"


class Spin(PhysOperator):
    def __init__(self, sop):
        self.sop = sop

    def apply(self, psi):
        return psi.apply_spin(self.sop)

    def __repr__(self):
        return f"Spin({self.sop!r})"


class Compose(PhysOperator):
    """Operator product; the rightmost factor acts first."""

    def __init__(self, ops):
        flat = []
        for op in ops:
            if isinstance(op, Compose):
                flat.extend(op.ops)
            elif not isinstance(op, Ident):
                flat.append(op)
        self.ops = flat

    def apply(self, psi):
        for op in reversed(self.ops):
            psi = op.apply(psi)
        return psi

    def __repr__(self):
        return " . ".join(map(repr, self.ops)) or "1"


class OpSum(PhysOperator):
    def __init__(self, ops):
        flat = []
        for op in ops:
            if isinstance(op, OpSum):
                flat.extend(op.ops)
            else:
                flat.append(op)
        self.ops = flat

    def apply(self, psi):
        out = WaveFunction.zero(psi.layout, psi.ff)
        for op in self.ops:
            out = out + op.apply(psi)
        return out

    def __repr__(self):
        return "(" + " + ".join(map(repr, self.ops)) + ")"


class Scale(PhysOperator):
    def __init__(self, r, op):
        self.r = r
        self.op = op

    def apply(self, psi):
        r = psi.ff.from_int(-1) if isinstance(self.r, _MinusOne) else self.r
        return self.op.apply(psi).scale(r)

    def __repr__(self):
        return f"[{self.r!r}] * {self.op!r}"


def commutator(a, b):
    return OpSum([Compose([a, b]), Scale(_MINUS_ONE, Compose([b, a]))])


def contains_spin(op):
    """Structural scan: does the expression tree touch any spin space?"""
    if isinstance(op, Spin):
        return True
    if isinstance(op, (Compose, OpSum)):
        return any(contains_spin(x) for x in op.ops)
    if isinstance(op, Scale):
        return contains_spin(op.op)
    return False


# ---------------------------------------------------------------------------
# zero-testing of wavefunctions


def wavefunction_zero(psi, rng, points=8, box=None, with_witness=True):
    """Decide psi == 0 exactly; on failure return a concrete evaluation witness.

    The decision itself is symbolic (consolidated exact arithmetic); sampled
    points only serve to exhibit a nonzero value.
    """
    if psi.is_zero():
        return True, None
    witness = {"component": None, "point": None, "value": "nonzero (symbolic)"}
    if not with_witness:
        return False, witness
    ring = psi.ff.ring
    f = psi.ff.field
    kwargs = {} if box is None else {"box": box}
    retries = 0
    for _ in range(max(points, 1)):
        point = sample_point(ring, rng, **kwargs)
        try:
            vals = psi.eval_at(point)
        except PoleError:
            retries += 1
            if retries > MAX_RETRIES:
                break
            continue
        for idx, v in vals.items():
            if not f.is_zero(v):
                witness = {
                    "component": list(idx),
                    "point": point_as_dict(ring, point),
                    "value": f.repr_elem(v),
                }
                return False, witness
    return False, witness


def random_monomial_state(layout, ff, rng, coord_vars, exp_range=(-3, 3)):
    """Laurent monomial (exponents uniform in exp_range) x random spin basis vector."""
    exps = [0] * ff.ring.nvars
    for i in coord_vars:
        exps[i] = rng.randint(*exp_range)
    idx = tuple(rng.randrange(layout.n) for _ in range(layout.nspaces))
    coord = ff.monomial(exps)
    return WaveFunction(layout, ff, {idx: coord})
