"""Height functionals for the fibration C x J -> J polarized by theta.

A line bundle class L with positive degree on the curve fibers defines a
height on points of the generic fiber; the class of a point's closure pairs
against L through theta powers.  Both the point height and the self-height
of the total space come out as exact rationals.

Whether a given pseudo-effective class is actually realized by a point of
the generic fiber is the caller's concern; this module validates only the
numerical conditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .cones import classify
from .lattice import (
    NSClass,
    RationalLike,
    as_fraction,
    pair_theta_power,
    pullback_theta,
    restrict_to_C_fiber,
)

__all__ = [
    "HeightReport",
    "PointClass",
    "generic_degree",
    "height_curve",
    "height_point",
    "standard_polarization",
]


@dataclass(frozen=True)
class PointClass:
    """Numerical class of the closure of a point of the generic fiber.

    Requires positive degree (the alpha1 coefficient) and pseudo-effectivity;
    both are validated at construction, not assumed.
    """

    cls: NSClass

    def __post_init__(self) -> None:
        if self.cls.a <= 0:
            raise ValueError(f"point class needs positive degree, got a = {self.cls.a}")
        if not classify(self.cls).is_psef:
            raise ValueError(f"point class must be pseudo-effective, got {self.cls}")

    @property
    def degree(self) -> Fraction:
        return self.cls.a


@dataclass(frozen=True)
class HeightReport:
    height: Fraction
    degree: Fraction


def standard_polarization(g: int) -> NSClass:
    """The class (g, 1, 1): theta pulled back along (x, y) -> (x - base) + y.

    Sits on the nef boundary and has fiber degree g; the default polarization
    for heights and audits throughout.
    """
    return pullback_theta(g, 1, 1)


def generic_degree(L: NSClass) -> Fraction:
    """Degree of L on the generic curve fiber."""
    return restrict_to_C_fiber(L)


def _base_factor(g: int, base_multiple: RationalLike) -> Fraction:
    # Rescaling the base polarization theta -> lam * theta multiplies the
    # theta^(g-1) factor in every height by lam^(g-1).
    lam = as_fraction(base_multiple)
    if lam <= 0:
        raise ValueError(f"base polarization multiple must be positive, got {lam}")
    return lam ** (g - 1)


def height_point(
    L: NSClass,
    point: Union[PointClass, NSClass],
    base_multiple: RationalLike = 1,
) -> HeightReport:
    """Height of a point class against L, normalized by the point's degree.

    height = (point . L . theta2^(g-1)) / deg(point), computed through the
    intersection engine.
    """
    if isinstance(point, NSClass):
        point = PointClass(point)
    factor = _base_factor(L.genus, base_multiple)
    pairing = pair_theta_power(point.cls, L)
    return HeightReport(height=factor * pairing / point.degree, degree=point.degree)


def height_curve(L: NSClass, base_multiple: RationalLike = 1) -> Fraction:
    """Self-height of the total space: L . L . theta2^(g-1) / (2 deg L)."""
    deg = generic_degree(L)
    if deg <= 0:
        raise ValueError(f"curve height needs positive generic degree, got {deg}")
    factor = _base_factor(L.genus, base_multiple)
    return factor * pair_theta_power(L, L) / (2 * deg)
