"""Seeded sampling and randomized zero-testing of exact rational functions.

Identity checks evaluate exact residuals at random integer points drawn from a
configurable box.  Points are sampled with all coordinates pairwise distinct,
none in {-1, 0, 1}, and no pair multiplying to 1, which avoids every structural
pole of the operator coefficients; accidental pole hits trigger a resample.
With the default box [2, 10^6] the failure probability per point is bounded by
total degree / box size (Schwartz-Zippel), far below 10^-4 for everything here.
"""

from __future__ import annotations

import random

from .ratfunc import PoleError

DEFAULT_BOX = (2, 10**6)
MAX_RETRIES = 100


def derive_rng(seed, check_id):
    """Independent deterministic stream per (seed, check id)."""
    return random.Random(f"{seed}:{check_id}")


def sample_point(ring, rng, box=DEFAULT_BOX):
    """One exact field element per ring variable."""
    lo, hi = box
    f = ring.field
    for _ in range(MAX_RETRIES):
        vals = [rng.randint(lo, hi) for _ in range(ring.nvars)]
        if len(set(vals)) != len(vals):
            continue
        if any(v in (-1, 0, 1) for v in vals):
            continue
        if any(vals[i] * vals[j] == 1 for i in range(len(vals)) for j in range(i + 1, len(vals))):
            continue
        return [f.from_int(v) for v in vals]
    raise RuntimeError("point sampling failed (box too small?)")


def point_as_dict(ring, point):
    f = ring.field
    return {name: f.repr_elem(v) for name, v in zip(ring.names, point)}


def ratfunc_zero(fn, rng, points=8, box=DEFAULT_BOX, strict=False):
    """Decide fn == 0; returns (ok, witness) with witness on failure.

    strict mode is a symbolic proof: the numerator is maintained exactly over a
    common denominator, so fn == 0 iff its numerator is the zero polynomial.
    """
    if strict:
        if fn.num.is_zero():
            return True, None
        return False, {"symbolic": repr(fn)}
    ring = fn.ring
    f = ring.field
    done = 0
    retries = 0
    while done < points:
        point = sample_point(ring, rng, box)
        try:
            v = fn.eval(point)
        except PoleError:
            retries += 1
            if retries > MAX_RETRIES:
                raise RuntimeError("pole resampling budget exhausted")
            continue
        if not f.is_zero(v):
            return False, {"point": point_as_dict(ring, point), "value": f.repr_elem(v)}
        done += 1
    return True, None


def ratfuncs_equal(a, b, rng, points=8, box=DEFAULT_BOX, strict=False):
    """Decide a == b as functions without forming the cross-multiplied difference."""
    if strict:
        return ratfunc_zero(a - b, rng, points, box, strict=True)
    ring = a.ring
    f = ring.field
    done = 0
    retries = 0
    while done < points:
        point = sample_point(ring, rng, box)
        try:
            va = a.eval(point)
            vb = b.eval(point)
        except PoleError:
            retries += 1
            if retries > MAX_RETRIES:
                raise RuntimeError("pole resampling budget exhausted")
            continue
        if va != vb:
            return False, {
                "point": point_as_dict(ring, point),
                "lhs": f.repr_elem(va),
                "rhs": f.repr_elem(vb),
            }
        done += 1
    return True, None
