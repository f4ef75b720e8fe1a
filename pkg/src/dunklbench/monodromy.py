"""Polynomial-normalized transfer matrices and the quantum determinant.

The monodromy factor at site i is (u + d_i - lambda P_{0i}); the ordered
product over sites is the transfer matrix T_hat(u), equal to
nu(u) = prod_i (u + d_i - lambda) times the rationally-normalized transfer
matrix.  nu(u) is a symmetric polynomial in the commuting d_i, so it commutes
with every coordinate transposition, every spin operator, and the exchange
projector: each identity checked for T_hat is equivalent to the identity for
the normalized matrix, the nu factors cancelling between the two sides.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .dunkl import coord_transposition, dunkl
from .hamiltonian import quantum_label
from .spintensor import (
    SpaceLayout,
    SpinVector,
    alternating_vector,
    antisymmetrizer,
    permutation_op,
)
from .wavefunction import Compose, Ident, Mul, OpSum, Scale, Spin, WaveFunction


def quantum_layout(n, N, extra=()):
    return SpaceLayout(n, tuple(quantum_label(i) for i in range(1, N + 1)) + tuple(extra))


def copies_labels(n):
    return tuple(f"c{k}" for k in range(1, n + 1))


def site_factor(ff, layout, params, aux, i, u_rf, sector, u_sign=1):
    """The local factor u + d_i - lambda P for u_sign=+1, or its reversed
    companion -u + d_i + lambda P for u_sign=-1."""
    lam = ff.field.from_fraction(params.lam)
    di = dunkl(ff, params, i, sector)
    P = permutation_op(ff, layout, aux, quantum_label(i))
    u_part = Mul(u_rf if u_sign == 1 else u_rf.scale(ff.field.from_int(-1)))
    p_coeff = ff.const(ff.field.neg(lam) if u_sign == 1 else lam)
    return OpSum([u_part, di, Scale(p_coeff, Spin(P))])


def transfer_hat(ff, layout, params, aux, u_rf, sector="yangian"):
    """T_hat(u) = prod_{i=1..N} (u + d_i - lambda P_{aux,i}), left to right."""
    return Compose(
        [site_factor(ff, layout, params, aux, i, u_rf, sector) for i in range(1, params.N + 1)]
    )


def exchange_projector(ff, layout, params):
    """(1/N!) prod_{j=2..N} (1 + tau1 sum_{k<j} P_kj K_kj); identity at N=1."""
    N = params.N
    tau = ff.from_int(params.tau1)
    factors = []
    for j in range(2, N + 1):
        parts = [Ident()]
        for k in range(1, j):
            Pkj = Spin(permutation_op(ff, layout, quantum_label(k), quantum_label(j)))
            parts.append(Scale(tau, Compose([Pkj, coord_transposition(ff, k, j)])))
        factors.append(OpSum(parts))
    if not factors:
        return Ident()
    return Scale(ff.from_fraction(Fraction(1, factorial(N))), Compose(factors))


# ---------------------------------------------------------------------------
# state plumbing: extending by auxiliary spaces and reading off components


def extend_state(psi, full_layout, aux_vector):
    """psi (on the quantum spaces) tensor aux_vector (on the trailing spaces)."""
    terms = {}
    for qidx, coord in psi.terms.items():
        for aidx, amp in aux_vector.entries.items():
            v = coord * amp
            if not v.is_zero():
                terms[qidx + aidx] = v
    return WaveFunction(full_layout, psi.ff, terms)


def extract_component(psi_full, qlay, aux_index, scale=None):
    """Wavefunction of components whose trailing aux part equals aux_index."""
    nq = qlay.nspaces
    terms = {}
    for idx, coord in psi_full.terms.items():
        if idx[nq:] == aux_index:
            v = coord if scale is None else coord * scale
            if not v.is_zero():
                terms[idx[:nq]] = v
    return WaveFunction(qlay, psi_full.ff, terms)


def aux_basis(ff, n, labels, index):
    lay = SpaceLayout(n, labels)
    return SpinVector.basis(lay, ff, index)


def entry_apply(op, ff, params, psi, aux_labels, row, col, pre=None):
    """Auxiliary-space matrix entry action: component `row` of op(psi x e_col).

    pre, when given, acts on the quantum part before the extension-dependent
    operator (used for projector insertions).
    """
    qlay = quantum_layout(params.n, params.N)
    full = quantum_layout(params.n, params.N, extra=aux_labels)
    if pre is not None:
        psi = pre.apply(psi)
    state = extend_state(psi, full, aux_basis(ff, params.n, aux_labels, col))
    state = op(full).apply(state) if callable(op) else op.apply(state)
    return extract_component(state, qlay, tuple(row))


# ---------------------------------------------------------------------------
# quantum determinant


def qdet_closed(ff, params, u_rf, sector="yangian"):
    """Polynomial-normalized closed form:
    prod_j (u + d_j) prod_{m=1..n, m != n-1} (u + d_j - m lambda).

    The m = n-1 factor of the normalization cancels the denominator of the
    normalized closed form, leaving a genuine polynomial in u.
    """
    n = params.n
    lam = params.lam
    factors = []
    for j in range(1, params.N + 1):
        dj = dunkl(ff, params, j, sector)
        factors.append(OpSum([Mul(u_rf), dj]))
        for m in range(1, n + 1):
            if m == n - 1:
                continue
            factors.append(OpSum([Mul(u_rf + ff.from_fraction(Fraction(-m) * lam)), dj]))
    return Compose(factors)


def qdet_normalization(ff, params, w_rf, sector="yangian"):
    """prod_j prod_{m=1..n} (w + d_j - m lambda): the nu-product relating the
    hatted and normalized quantum determinants at spectral argument w."""
    factors = []
    for j in range(1, params.N + 1):
        dj = dunkl(ff, params, j, sector)
        for m in range(1, params.n + 1):
            factors.append(OpSum([Mul(w_rf + ff.from_fraction(Fraction(-m) * params.lam)), dj]))
    return Compose(factors)


def qdet_antisym_apply(ff, params, psi, u_rf, sector="yangian", project=None):
    """Apply A_n T_1(u) ... T_n(u - (n-1)lambda) to psi x (alternating vector)
    and extract the coefficient of the alternating image.

    project, when given, is inserted after each transfer factor (the projected
    quantum determinant).  Returns qdet_hat(u) psi on the quantum layout.
    """
    n = params.n
    qlay = quantum_layout(params.n, params.N)
    labels = copies_labels(n)
    full = quantum_layout(params.n, params.N, extra=labels)
    aux_lay = SpaceLayout(n, labels)
    xi = alternating_vector(ff, aux_lay, labels)
    state = extend_state(psi, full, xi)
    for k in range(1, n + 1):
        u_k = u_rf + ff.from_fraction(Fraction(-(k - 1)) * params.lam)
        state = transfer_hat(ff, full, params, f"c{k}", u_k, sector).apply(state)
        if project is not None:
            state = project.apply(state)
    state = state.apply_spin(antisymmetrizer(ff, full, labels))
    ident_aux = tuple(range(n))
    return extract_component(
        state, qlay, ident_aux, scale=ff.from_fraction(Fraction(1, factorial(n)))
    )
