"""Dunkl operators in exponential coordinates, and the exchange-relation suite.

Everything is expressed in t_i = exp(2 gamma A(q_i)), which turns every
coefficient function into a rational function independently of the chart A:

    a(q_l) d/dq_l   -> 2 gamma t_l d/dt_l
    v(q_l, q_k)     -> beta t_l / (t_k - t_l)
    vbar(q_l, q_k)  -> beta / (1 - t_l t_k)
    g(q_l)          -> (c t_l - b) / (t_l^2 - 1)
    reflected coord -> t_l -> 1/t_l

The reflection-sector operator carries all four coefficient families; the
Yangian-sector operator keeps only the derivative and the swap terms.  The
operators contain no spin factors (asserted structurally), so they commute
with every spin-space operator by construction.
"""

from __future__ import annotations

import math

from .wavefunction import (
    Compose,
    CoordInvert,
    CoordSwap,
    Euler,
    Ident,
    Mul,
    OpSum,
    PhysOperator,
    Scale,
    contains_spin,
)

PERTURB_V = "v-numerator+1"
PERTURB_G = "g-sign-flip"
PERTURB_B = "b-inconsistent"
PERTURBATIONS = (PERTURB_V, PERTURB_G, PERTURB_B)


def tvar(ff, l):
    return ff.index(f"t{l}")


def coord_names(N, extra=()):
    return tuple(f"t{l}" for l in range(1, N + 1)) + tuple(extra)


def v_coeff(ff, params, l, k, perturb=None):
    """v(q_l, q_k) in t-coordinates: beta t_l / (t_k - t_l)."""
    beta = ff.from_fraction(params.beta)
    tl, tk = ff.var(f"t{l}"), ff.var(f"t{k}")
    out = beta * tl / (tk - tl)
    if perturb == PERTURB_V:
        out = out + ff.one
    return out


def vbar_coeff(ff, params, l, k):
    """vbar(q_l, q_k) in t-coordinates: beta / (1 - t_l t_k)."""
    beta = ff.from_fraction(params.beta)
    tl, tk = ff.var(f"t{l}"), ff.var(f"t{k}")
    return beta / (ff.one - tl * tk)


def g_coeff(ff, params, l, perturb=None):
    """g(q_l) in t-coordinates: (c t_l - b) / (t_l^2 - 1)."""
    c = ff.from_fraction(params.c)
    b = ff.from_fraction(params.b)
    tl = ff.var(f"t{l}")
    num = c * tl - b
    den = tl * tl - ff.one
    if perturb == PERTURB_G:
        den = ff.one - tl * tl
    return num / den


def coord_transposition(ff, i, j):
    return CoordSwap(tvar(ff, i), tvar(ff, j))


def coord_reflection(ff, i):
    return CoordInvert(tvar(ff, i))


def pbar_coord(ff, l, k):
    """Reflected pair exchange: both coordinates inverted, then swapped."""
    return Compose([CoordInvert(tvar(ff, l)), CoordInvert(tvar(ff, k)), coord_transposition(ff, l, k)])


def euler_term(ff, params, l):
    two_gamma = ff.from_fraction(2 * params.gamma)
    return Scale(two_gamma, Euler(tvar(ff, l)))


def dunkl(ff, params, l, sector="reflection", perturb=None):
    """The l-th Dunkl operator (1-based), as an unexpanded expression tree."""
    if not 1 <= l <= params.N:
        raise IndexError(f"particle index {l} out of range 1..{params.N}")
    terms = [euler_term(ff, params, l)]
    for k in range(1, l):
        terms.append(Compose([Mul(v_coeff(ff, params, l, k, perturb)), coord_transposition(ff, k, l)]))
    for k in range(l + 1, params.N + 1):
        terms.append(
            Scale(ff.from_int(-1), Compose([Mul(v_coeff(ff, params, k, l, perturb)), coord_transposition(ff, l, k)]))
        )
    if sector == "reflection":
        for k in range(1, params.N + 1):
            if k != l:
                terms.append(Compose([Mul(vbar_coeff(ff, params, l, k)), pbar_coord(ff, l, k)]))
        terms.append(Compose([Mul(g_coeff(ff, params, l, perturb)), coord_reflection(ff, l)]))
    elif sector != "yangian":
        raise ValueError(f"unknown sector {sector!r}")
    op = OpSum(terms)
    assert not contains_spin(op)
    return op


def dunkl_family(ff, params, sector="reflection", perturb=None):
    return [dunkl(ff, params, l, sector, perturb) for l in range(1, params.N + 1)]


# ---------------------------------------------------------------------------
# the defining exchange relations


HECKE_FAMILIES = (
    "braid",
    "swap-involution",
    "swap-dunkl-exchange",
    "dunkl-commute",
    "inversion-involution",
    "inversion-commute",
    "inversion-swap-exchange",
    "inversion-dunkl-exchange",
)

YANGIAN_FAMILIES = HECKE_FAMILIES[:4]


def relation_pairs(family, ff, params, sector="reflection", perturb=None):
    """All (tag, lhs, rhs) operator pairs of one relation family.

    Vacuous families (no admissible indices at this N) return an empty list.
    """
    N = params.N
    ds = dunkl_family(ff, params, sector, perturb)
    d = lambda i: ds[i - 1]
    K = lambda i, j: coord_transposition(ff, i, j)
    Q = lambda i: coord_reflection(ff, i)
    beta = ff.from_fraction(params.beta)
    out = []

    if family == "braid":
        for i in range(1, N - 1):
            a, b_ = K(i, i + 1), K(i + 1, i + 2)
            out.append((f"i={i}", Compose([a, b_, a]), Compose([b_, a, b_])))
    elif family == "swap-involution":
        for i in range(1, N):
            out.append((f"i={i}", Compose([K(i, i + 1), K(i, i + 1)]), Ident()))
    elif family == "swap-dunkl-exchange":
        for i in range(1, N):
            for k in range(1, N + 1):
                lhs = Compose([K(i, i + 1), d(k)])
                if k == i:
                    rhs = Compose([d(i + 1), K(i, i + 1)]) + Mul(beta)
                elif k == i + 1:
                    rhs = Compose([d(i), K(i, i + 1)]) - Mul(beta)
                else:
                    rhs = Compose([d(k), K(i, i + 1)])
                out.append((f"i={i},k={k}", lhs, rhs))
    elif family == "dunkl-commute":
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                out.append((f"i={i},j={j}", Compose([d(i), d(j)]), Compose([d(j), d(i)])))
    elif family == "inversion-involution":
        for i in range(1, N + 1):
            out.append((f"i={i}", Compose([Q(i), Q(i)]), Ident()))
    elif family == "inversion-commute":
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                out.append((f"i={i},j={j}", Compose([Q(i), Q(j)]), Compose([Q(j), Q(i)])))
    elif family == "inversion-swap-exchange":
        for k in range(1, N):
            for i in range(1, N + 1):
                lhs = Compose([Q(i), K(k, k + 1)])
                if i == k:
                    rhs = Compose([K(k, k + 1), Q(k + 1)])
                elif i == k + 1:
                    rhs = Compose([K(k, k + 1), Q(k)])
                else:
                    rhs = Compose([K(k, k + 1), Q(i)])
                out.append((f"k={k},i={i}", lhs, rhs))
    elif family == "inversion-dunkl-exchange":
        bconst = ff.from_fraction(params.b)
        for i in range(1, N + 1):
            for k in range(1, N + 1):
                lhs = Compose([Q(i), d(k)])
                if k < i:
                    rhs = Compose([d(k), Q(i)])
                elif k == i:
                    pieces = [Scale(ff.from_int(-1), Compose([d(i), Q(i)]))]
                    for j in range(i + 1, N + 1):
                        pieces.append(
                            Scale(beta, Compose([K(i, j), OpSum([Q(i), Q(j)])]))
                        )
                    pieces.append(Mul(bconst))
                    rhs = OpSum(pieces)
                else:
                    rhs = Compose([d(k), Q(i)]) + Scale(
                        beta, Compose([K(i, k), OpSum([Q(i), Scale(ff.from_int(-1), Q(k))])])
                    )
                out.append((f"i={i},k={k}", lhs, rhs))
    else:
        raise ValueError(f"unknown relation family {family!r}")
    return out


# ---------------------------------------------------------------------------
# transcendental cross-check of the substitution table


def substitution_table_errors(params, rng, npoints=10):
    """Max relative error of each t-coordinate form vs its transcendental
    closed form, at random real points with the chart A(x) = x.

    The derivative entry is checked against a complex-step derivative of the
    composed function, which is an independent oracle accurate to roundoff.
    """
    beta = float(params.beta)
    b = float(params.b)
    c = float(params.c)
    errors = {key: 0.0 for key in ("v", "vbar", "g", "kinetic", "sinh-", "sinh+", "sinh0", "cosh0")}

    def rel(a, bb):
        scale = max(abs(a), abs(bb), 1e-30)
        return abs(a - bb) / scale

    for _ in range(npoints):
        gamma = rng.uniform(0.05, 0.95)
        x = rng.uniform(-2.0, 2.0)
        y = rng.uniform(-2.0, 2.0)
        if abs(x - y) < 0.1 or abs(x + y) < 0.1 or abs(x) < 0.1 or abs(y) < 0.1:
            continue
        tx = math.exp(2 * gamma * x)
        ty = math.exp(2 * gamma * y)
        errors["v"] = max(
            errors["v"], rel(beta / (math.exp(-2 * gamma * (x - y)) - 1), beta * tx / (ty - tx))
        )
        errors["vbar"] = max(
            errors["vbar"], rel(beta / (1 - math.exp(2 * gamma * (x + y))), beta / (1 - tx * ty))
        )
        errors["g"] = max(
            errors["g"],
            rel(
                (c - b * math.exp(-2 * gamma * x)) / (2 * math.sinh(2 * gamma * x)),
                (c * tx - b) / (tx * tx - 1),
            ),
        )
        # kinetic: d/dq f(e^{2 gamma q}) vs 2 gamma (t f'(t)); complex-step derivative
        h = 1e-20
        fq = lambda q: (lambda t: t**3 + 1.0 / t + 2.0 * t)(complex(math.e) ** (2 * gamma * q))
        lhs = (fq(complex(x, h))).imag / h
        rhs = 2 * gamma * (3 * tx**3 - 1.0 / tx + 2.0 * tx)
        errors["kinetic"] = max(errors["kinetic"], rel(lhs, rhs))
        errors["sinh-"] = max(
            errors["sinh-"],
            rel(1 / math.sinh(gamma * (x - y)) ** 2, 4 * tx * ty / (tx - ty) ** 2),
        )
        errors["sinh+"] = max(
            errors["sinh+"],
            rel(1 / math.sinh(gamma * (x + y)) ** 2, 4 * tx * ty / (tx * ty - 1) ** 2),
        )
        errors["sinh0"] = max(
            errors["sinh0"], rel(1 / math.sinh(gamma * x) ** 2, 4 * tx / (tx - 1) ** 2)
        )
        errors["cosh0"] = max(
            errors["cosh0"], rel(1 / math.cosh(gamma * x) ** 2, 4 * tx / (tx + 1) ** 2)
        )
    return errors
