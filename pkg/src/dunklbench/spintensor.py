"""Sparse operators on ordered tensor products of n-dimensional spin spaces.

Spaces are addressed by string labels (quantum sites, auxiliary spaces, copies
used by determinant constructions).  Operators store only nonzero entries as
(row multi-index, column multi-index) -> RatFunc; everything needed here (spin
permutations, elementary matrices, involutions, R-matrices, antisymmetrizers)
has O(n^2)-per-factor structure, so dense n^(2m) storage is never built.
"""

from __future__ import annotations

from itertools import permutations, product


class SpaceLayout:
    """An ordered list of labeled spin spaces, all of dimension n."""

    def __init__(self, n, labels):
        self.n = n
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate space labels")
        self._pos = {lab: i for i, lab in enumerate(self.labels)}

    def pos(self, label):
        if label not in self._pos:
            raise KeyError(f"unknown space label {label!r}")
        return self._pos[label]

    @property
    def nspaces(self):
        return len(self.labels)

    def indices(self):
        return product(range(self.n), repeat=self.nspaces)

    def extended(self, labels):
        return SpaceLayout(self.n, self.labels + tuple(labels))

    def __eq__(self, other):
        return isinstance(other, SpaceLayout) and self.n == other.n and self.labels == other.labels

    def __repr__(self):
        return f"SpaceLayout(n={self.n}, labels={self.labels})"


class SpinVector:
    __slots__ = ("layout", "ff", "entries")

    def __init__(self, layout, ff, entries):
        self.layout = layout
        self.ff = ff
        self.entries = entries

    @classmethod
    def basis(cls, layout, ff, idx):
        return cls(layout, ff, {tuple(idx): ff.one})

    def __add__(self, other):
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out[k] + v if k in out else v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return SpinVector(self.layout, self.ff, out)

    def scale(self, r):
        if r.is_zero():
            return SpinVector(self.layout, self.ff, {})
        return SpinVector(self.layout, self.ff, {k: v * r for k, v in self.entries.items()})

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return self.layout == other.layout and self.entries == other.entries

    def __repr__(self):
        return f"SpinVector({self.entries})"


class SpinOperator:
    __slots__ = ("layout", "ff", "entries", "_col_index")

    def __init__(self, layout, ff, entries):
        self.layout = layout
        self.ff = ff
        self.entries = entries
        self._col_index = None

    def col_index(self):
        if self._col_index is None:
            ci = {}
            for (r, c), v in self.entries.items():
                ci.setdefault(c, []).append((r, v))
            self._col_index = ci
        return self._col_index

    @classmethod
    def identity(cls, layout, ff):
        one = ff.one
        return cls(layout, ff, {(idx, idx): one for idx in layout.indices()})

    @classmethod
    def zero(cls, layout, ff):
        return cls(layout, ff, {})

    def apply(self, vec):
        if vec.layout != self.layout:
            raise ValueError("layout mismatch")
        out = {}
        ci = self.col_index()
        for c, amp in vec.entries.items():
            for r, v in ci.get(c, ()):
                t = v * amp
                if r in out:
                    s = out[r] + t
                    if s.is_zero():
                        del out[r]
                    else:
                        out[r] = s
                elif not t.is_zero():
                    out[r] = t
        return SpinVector(self.layout, self.ff, out)

    def compose(self, other):
        """self after other (matrix product self @ other)."""
        if other.layout != self.layout:
            raise ValueError("layout mismatch")
        ci = self.col_index()
        out = {}
        for (k, c), vb in other.entries.items():
            for r, va in ci.get(k, ()):
                t = va * vb
                key = (r, c)
                if key in out:
                    s = out[key] + t
                    if s.is_zero():
                        del out[key]
                    else:
                        out[key] = s
                elif not t.is_zero():
                    out[key] = t
        return SpinOperator(self.layout, self.ff, out)

    def __matmul__(self, other):
        return self.compose(other)

    def __add__(self, other):
        if other.layout != self.layout:
            raise ValueError("layout mismatch")
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out[k] + v if k in out else v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return SpinOperator(self.layout, self.ff, out)

    def __sub__(self, other):
        return self + other.scale_rf(self.ff.from_int(-1))

    def scale_rf(self, r):
        if r.is_zero():
            return SpinOperator.zero(self.layout, self.ff)
        return SpinOperator(self.layout, self.ff, {k: v * r for k, v in self.entries.items()})

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, SpinOperator)
            and self.layout == other.layout
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"SpinOperator({len(self.entries)} entries on {self.layout.labels})"


def _coerce_matrix(ff, matrix):
    """n x n nested list with int / Fraction / field / RatFunc entries -> RatFunc."""
    out = []
    for row in matrix:
        r = []
        for x in row:
            if hasattr(x, "ring"):
                r.append(x)
            elif hasattr(x, "numerator") and not isinstance(x, int):
                r.append(ff.from_fraction(x))
            else:
                r.append(ff.from_int(x))
        out.append(r)
    return out


def embed(ff, layout, label, matrix):
    """A acting on the factor `label`, identity elsewhere."""
    n = layout.n
    k = layout.pos(label)
    mat = _coerce_matrix(ff, matrix)
    entries = {}
    for idx in layout.indices():
        col = idx
        j = idx[k]
        for i in range(n):
            v = mat[i][j]
            if v.is_zero():
                continue
            row = list(idx)
            row[k] = i
            entries[(tuple(row), col)] = v
    return SpinOperator(layout, ff, entries)


def elementary(n, i, j):
    """E_ij: entry 1 in row i, column j (0-based)."""
    return [[1 if (a, b) == (i, j) else 0 for b in range(n)] for a in range(n)]


def reversal_involution(n):
    """Antidiagonal permutation matrix, the default spin involution (square = 1)."""
    return [[1 if a + b == n - 1 else 0 for b in range(n)] for a in range(n)]


def check_involution(matrix):
    n = len(matrix)
    sq = [[sum(matrix[i][k] * matrix[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return all(sq[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))


def permutation_op(ff, layout, a, b):
    """Swap of factors a and b: P (v ox w) = w ox v."""
    if a == b:
        raise ValueError("permutation needs two distinct spaces")
    ia, ib = layout.pos(a), layout.pos(b)
    one = ff.one
    entries = {}
    for idx in layout.indices():
        row = list(idx)
        row[ia], row[ib] = row[ib], row[ia]
        entries[(tuple(row), idx)] = one
    return SpinOperator(layout, ff, entries)


def antisymmetrizer(ff, layout, labels):
    """Sum over permutations of the listed factors, weighted by signature."""
    pos = [layout.pos(lab) for lab in labels]
    m = len(pos)
    entries = {}
    for perm in permutations(range(m)):
        sgn = _signature(perm)
        val = ff.from_int(sgn)
        for idx in layout.indices():
            row = list(idx)
            vals = [idx[p] for p in pos]
            for slot, p in enumerate(pos):
                row[p] = vals[perm[slot]]
            key = (tuple(row), idx)
            if key in entries:
                s = entries[key] + val
                if s.is_zero():
                    del entries[key]
                else:
                    entries[key] = s
            else:
                entries[key] = val
    return SpinOperator(layout, ff, entries)


def _signature(perm):
    sgn = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sgn = -sgn
    return sgn


def alternating_vector(ff, layout, labels):
    """A_m (e_0 ox e_1 ox ... ) on the listed factors of an aux-only layout."""
    if layout.nspaces != len(labels):
        raise ValueError("alternating vector expects an aux-only layout")
    pos = [layout.pos(lab) for lab in labels]
    m = len(pos)
    if m > layout.n:
        raise ValueError("antisymmetrizer top component vanishes for m > n")
    entries = {}
    for perm in permutations(range(m)):
        idx = [0] * layout.nspaces
        for slot, p in enumerate(pos):
            idx[p] = perm[slot]
        entries[tuple(idx)] = ff.from_int(_signature(perm))
    return SpinVector(layout, ff, entries)


def yang_R(ff, layout, a, b, lam, spec):
    """R(spec) = 1 - lam * P_ab / spec; lam a field element, spec a RatFunc."""
    P = permutation_op(ff, layout, a, b)
    coeff = ff.const(ff.field.neg(lam)) / spec
    return SpinOperator.identity(layout, ff) + P.scale_rf(coeff)


def yang_R_poly(ff, layout, a, b, lam, spec):
    """spec * 1 - lam * P_ab: the pole-cleared Yang R-matrix."""
    P = permutation_op(ff, layout, a, b)
    ident = SpinOperator.identity(layout, ff)
    return ident.scale_rf(spec) + P.scale_rf(ff.const(ff.field.neg(lam)))
