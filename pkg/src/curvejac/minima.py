"""Successive minima of the height over the pseudo-effective cone.

Fix a nef class L = (A, B, C) with A > 0.  A point class of degree a
normalizes to (1, s, t) with pseudo-effectivity reading s >= g t^2, and its
height against L is the linear functional

    g! (B + s A - 2 t C).

Minimizing over the cone slice activates the constraint s = g t^2 and leaves
a one-variable quadratic.  ``cone_minimum`` solves it in closed form,
``grid_oracle`` re-derives lower envelopes by brute force on rational grids,
``witness_sequence`` produces an unbounded-degree family of point classes
attaining the minimum for the standard polarization, and ``zhang_audit``
compares the minima against the curve height, evaluating both
successive-minima inequalities with exact margins.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from .cones import classify
from .heights import PointClass, height_curve, height_point
from .lattice import (
    NSClass,
    RationalLike,
    as_fraction,
    monomial_table,
    pullback_theta,
)

__all__ = [
    "MinimaReport",
    "ZhangAudit",
    "cone_minimum",
    "grid_oracle",
    "witness_sequence",
    "zhang_audit",
]


@dataclass(frozen=True)
class MinimaReport:
    """Closed-form cone minimum with its minimizer and attainment status.

    ``s_star = g * t_star**2`` always: the constraint is active at the
    optimum (or the minimizer is the apex s = t = 0 when C = 0).
    """

    infimum: Fraction
    s_star: Fraction
    t_star: Fraction
    attained_by_witness: bool
    witness: Optional[PointClass] = None


@dataclass(frozen=True)
class ZhangAudit:
    """Exact evaluation of the two successive-minima inequalities for L.

    The first inequality is e1 >= h, the second is h >= (e1 + e2) / 2;
    ``violation_margin`` is the signed quantity (e1 + e2) / 2 - h, positive
    exactly when the second inequality fails.  When ``minima_attained`` is
    False the reported e1, e2 are certified lower bounds only.
    """

    e1: Fraction
    e2: Fraction
    h_curve: Fraction
    first_inequality_holds: bool
    second_inequality_holds: bool
    violation_margin: Fraction
    minima_attained: bool


def _minimizing_witness(L: NSClass, t_star: Fraction) -> PointClass:
    # A pullback class (g m^2, n^2, m n) normalizes to t = n / (g m), so the
    # minimizing ray is hit by taking n/m = g t_star in lowest terms.
    ratio = L.genus * t_star
    m, n = ratio.denominator, ratio.numerator
    return PointClass(pullback_theta(L.genus, m, n))


def cone_minimum(L: NSClass) -> MinimaReport:
    """Exact infimum of the normalized height of point classes against L.

    With A > 0 the active-constraint quadratic bottoms out at
    t* = C / (g A), s* = C^2 / (g A^2), with value g! (g A B - C^2) / (g A).
    The degenerate case A = 0 (nefness then forces C = 0) has constant
    objective g! B.  Attainment is certified, not assumed: the witness on
    the minimizing ray is rebuilt and its height recomputed through the
    intersection engine before the flag is set.
    """
    verdict = classify(L)
    if not verdict.is_nef:
        raise ValueError(
            f"cone_minimum needs a nef class, got {L} with defect {verdict.defect}"
        )
    g = L.genus
    gf = monomial_table(g).g_factorial
    A, B, C = L.a, L.b, L.c
    if A == 0:
        if C != 0:
            raise ValueError(f"inconsistent nef class {L}: zero degree, nonzero c")
        t_star = Fraction(0)
        s_star = Fraction(0)
        infimum = gf * B
    else:
        t_star = C / (g * A)
        s_star = C * C / (g * A * A)
        infimum = gf * (g * A * B - C * C) / (g * A)
    witness = _minimizing_witness(L, t_star)
    attained = height_point(L, witness).height == infimum
    return MinimaReport(
        infimum=infimum,
        s_star=s_star,
        t_star=t_star,
        attained_by_witness=attained,
        witness=witness if attained else None,
    )


def grid_oracle(
    L: NSClass, t_lo: RationalLike, t_hi: RationalLike, steps: int
) -> Fraction:
    """Brute-force minimum of the slice objective over a rational t-grid.

    Evaluates g! (B + g A t^2 - 2 t C) at the steps+1 points
    t_lo + i (t_hi - t_lo) / steps and returns the exact minimum.  Serves as
    an independent check on ``cone_minimum``: never below the closed-form
    infimum, and equal to it exactly when t* lies on the grid.  The result
    depends only on the grid point set, so chunked or reordered evaluation
    combines to the same minimum.
    """
    if not isinstance(steps, int) or isinstance(steps, bool) or steps < 1:
        raise ValueError(f"grid needs an integer steps >= 1, got {steps!r}")
    t_lo = as_fraction(t_lo)
    t_hi = as_fraction(t_hi)
    if t_lo > t_hi:
        raise ValueError(f"empty grid: t_lo = {t_lo} > t_hi = {t_hi}")
    verdict = classify(L)
    if not verdict.is_nef or L.a <= 0:
        raise ValueError(
            f"grid_oracle needs a nef class with positive generic degree, got {L}"
        )

    g = L.genus
    gf = monomial_table(g).g_factorial
    # Put the whole grid over one denominator q; the objective values then
    # share the denominator den * q^2 and compare as plain integers.
    step = (t_hi - t_lo) / steps
    q = lcm(t_lo.denominator, step.denominator)
    p0 = int(t_lo * q)
    dp = int(step * q)
    den = lcm(L.a.denominator, L.b.denominator, L.c.denominator)
    A, B, C = int(L.a * den), int(L.b * den), int(L.c * den)
    gA = g * A
    base = B * q * q
    slope = 2 * q * C
    best: Optional[int] = None
    for i in range(steps + 1):
        p = p0 + i * dp
        val = base + gA * p * p - slope * p
        if best is None or val < best:
            best = val
    assert best is not None
    return Fraction(gf * best, den * q * q)


def witness_sequence(g: int, n: int) -> PointClass:
    """The degree-(g^3 n) point class (g^3 n, n, g n) on the minimizing ray.

    The n-th multiple of the pullback class with (m, n) = (g, 1).  Each
    member sits on the nef boundary, and its height against the standard
    polarization equals the cone minimum (g - 1/g) (g-1)! exactly, so the
    infimum is attained at every degree scale.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"witness index must be a positive integer, got {n!r}")
    return PointClass(n * pullback_theta(g, g, 1))


def zhang_audit(L: NSClass) -> ZhangAudit:
    """Evaluate both successive-minima inequalities for L, exactly.

    e1 and e2 coincide here: the cone minimum bounds every successive
    minimum from below, and the witness family realizes arbitrarily large
    degrees on the minimizing ray, pinning them both.  ``minima_attained``
    records whether that certification went through; if not, the values
    stand as lower bounds.
    """
    report = cone_minimum(L)
    h = height_curve(L)
    e1 = report.infimum
    e2 = report.infimum
    mean = (e1 + e2) / 2
    return ZhangAudit(
        e1=e1,
        e2=e2,
        h_curve=h,
        first_inequality_holds=e1 >= h,
        second_inequality_holds=h >= mean,
        violation_margin=mean - h,
        minima_attained=report.attained_by_witness,
    )
