"""Model parameters and their consistency validation.

All scalar couplings are exact rationals.  The projected (reflection- and
Yangian-symmetric) constructions require the compatibility constraints
beta = tau1 * lambda and b = -2 * tau2 * b_prime; validation can be bypassed
explicitly, which the negative controls use.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .spintensor import check_involution, reversal_involution

DEFAULT_BOX = (2, 10**6)


class ParamsError(ValueError):
    def __init__(self, issues):
        self.issues = list(issues)
        super().__init__("; ".join(self.issues))


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class ModelParams:
    n: int = 2
    N: int = 2
    lam: Fraction = Fraction(2)
    beta: Fraction = Fraction(2)
    b: Fraction = Fraction(-6)
    b_prime: Fraction = Fraction(3)
    c: Fraction = Fraction(5)
    gamma: Fraction = Fraction(1)
    tau1: int = 1
    tau2: int = 1
    involution: tuple = None
    seed: int = 42
    states: int = 5
    points: int = 8
    box: tuple = DEFAULT_BOX

    def __post_init__(self):
        for name in ("lam", "beta", "b", "b_prime", "c", "gamma"):
            object.__setattr__(self, name, _frac(getattr(self, name)))
        if self.involution is None:
            object.__setattr__(
                self,
                "involution",
                tuple(tuple(map(Fraction, row)) for row in reversal_involution(self.n)),
            )
        else:
            object.__setattr__(
                self,
                "involution",
                tuple(tuple(map(_frac, row)) for row in self.involution),
            )

    @property
    def mu(self):
        """(n-1) * lambda, the shift entering every determinant formula."""
        return (self.n - 1) * self.lam

    def with_(self, **kw):
        return replace(self, **kw)

    def constrained(self):
        """Copy satisfying the projected-sector compatibility constraints."""
        return self.with_(beta=self.tau1 * self.lam, b=-2 * self.tau2 * self.b_prime)

    def validation_issues(self, sector=None):
        issues = []
        if self.n < 2:
            issues.append(f"n: spin dimension must be >= 2, got {self.n}")
        if self.N < 1:
            issues.append(f"N: particle count must be >= 1, got {self.N}")
        if self.tau1 not in (1, -1):
            issues.append(f"tau1: must be +1 or -1, got {self.tau1}")
        if self.tau2 not in (1, -1):
            issues.append(f"tau2: must be +1 or -1, got {self.tau2}")
        if len(self.involution) != self.n or not check_involution(
            [list(r) for r in self.involution]
        ):
            issues.append("involution: matrix must be n x n with square = identity")
        if self.gamma == 0:
            issues.append("gamma: must be nonzero (it scales the kinetic term)")
        if sector in ("yangian", "reflection") and self.beta != self.tau1 * self.lam:
            issues.append(
                f"beta: projected checks require beta = tau1*lambda = {self.tau1 * self.lam}, got {self.beta}"
            )
        if sector == "reflection" and self.b != -2 * self.tau2 * self.b_prime:
            issues.append(
                f"b: projected reflection checks require b = -2*tau2*b_prime = {-2 * self.tau2 * self.b_prime}, got {self.b}"
            )
        return issues

    def validate(self, sector=None, allow_inconsistent=False):
        issues = self.validation_issues(sector=sector)
        if issues and not allow_inconsistent:
            raise ParamsError(issues)
        return issues


def random_params(rng, n=2, N=2, constrained=False, **overrides):
    """Generic nonzero rational couplings for relation testing."""

    def q():
        sign = rng.choice((1, -1))
        return Fraction(sign * rng.randint(1, 9), rng.randint(1, 9))

    p = ModelParams(
        n=n,
        N=N,
        lam=q(),
        beta=q(),
        b=q(),
        b_prime=q(),
        c=q(),
        gamma=q(),
        tau1=rng.choice((1, -1)),
        tau2=rng.choice((1, -1)),
        **overrides,
    )
    return p.constrained() if constrained else p
