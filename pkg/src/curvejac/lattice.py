"""Exact rational calculus on the rank-3 Neron-Severi lattice of C x J.

For a smooth projective curve C of genus g >= 2 with Jacobian J, the product
C x J in the minimal-Picard-number case has Neron-Severi rank 3, spanned by

* ``alpha1``, the class of a curve fiber {point} x J,
* ``theta2``, the theta polarization pulled back from J,
* ``poincare`` (written Q below), the universal bundle class.

An ``NSClass`` is a rational coordinate triple (a, b, c) on that basis,
tagged with its genus.  Everything is exact: coefficients live in
``fractions.Fraction`` and no code path touches floating point.  All values
are immutable and all functions pure, so the module is safe to share across
threads without synchronization.

The top intersection form on (g+1)-fold products of basis classes is
concentrated in two monomials,

    alpha1 . theta2^g      =  g!
    Q^2 . theta2^(g-1)     = -2 g!

and every other degree-(g+1) monomial vanishes; see ``MonomialTable``.
``top_intersect`` contracts an arbitrary product of g+1 classes against the
table after a truncated trivariate polynomial expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm
from typing import Iterator, NamedTuple, Sequence, Union

__all__ = [
    "MIN_GENUS",
    "POINCARE_SQUARE_COEFF",
    "JFiberRestriction",
    "MonomialTable",
    "NSClass",
    "RationalLike",
    "alpha1",
    "as_fraction",
    "monomial_table",
    "pair_theta_power",
    "pair_theta_power_closed",
    "poincare",
    "pullback_theta",
    "restrict_to_C_fiber",
    "restrict_to_J_fiber",
    "theta2",
    "top_intersect",
    "zero_class",
]

MIN_GENUS = 2

RationalLike = Union[int, str, Fraction]

# Self-intersection coefficient of the universal class against theta powers:
# Q^2 . theta2^(g-1) = -2 g!.  The -2 is pinned by vanishing of the (g+1)st
# power of every pullback class (g m^2, n^2, m n), checked symbolically in
# the test suite, and is consistent with the closed pairing form
# (a + g b - 2 c) g!.
POINCARE_SQUARE_COEFF = -2


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce an exact rational input to ``Fraction``.

    Accepts ints, ``Fraction``s and strings like ``"3/4"``.  Floats are
    refused: a float's binary expansion is almost never the rational the
    caller meant, and this module promises exactness.
    """
    if isinstance(value, float):
        raise TypeError(
            "inexact float rejected; pass an int, Fraction, or 'p/q' string"
        )
    return Fraction(value)


def _check_genus(g: int) -> None:
    if not isinstance(g, int) or isinstance(g, bool):
        raise TypeError(f"genus must be an int, got {type(g).__name__}")
    if g < MIN_GENUS:
        raise ValueError(f"genus must be >= {MIN_GENUS}, got {g}")


def _check_same_genus(x: "NSClass", y: "NSClass") -> None:
    if x.genus != y.genus:
        raise ValueError(f"genus mismatch: {x.genus} vs {y.genus}")


@dataclass(frozen=True)
class NSClass:
    """A divisor class a*alpha1 + b*theta2 + c*Q in genus-g coordinates.

    Construction imposes no positivity: any rational triple is a valid
    lattice point.  Cone membership is a separate question (see the cones
    module).
    """

    genus: int
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self) -> None:
        _check_genus(self.genus)
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))
        object.__setattr__(self, "c", as_fraction(self.c))

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    @property
    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c)

    def __add__(self, other: "NSClass") -> "NSClass":
        if not isinstance(other, NSClass):
            return NotImplemented
        _check_same_genus(self, other)
        return NSClass(self.genus, self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: "NSClass") -> "NSClass":
        if not isinstance(other, NSClass):
            return NotImplemented
        _check_same_genus(self, other)
        return NSClass(self.genus, self.a - other.a, self.b - other.b, self.c - other.c)

    def __neg__(self) -> "NSClass":
        return NSClass(self.genus, -self.a, -self.b, -self.c)

    def __mul__(self, scalar: RationalLike) -> "NSClass":
        if isinstance(scalar, float):
            raise TypeError("inexact float scalar rejected")
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        s = Fraction(scalar)
        return NSClass(self.genus, s * self.a, s * self.b, s * self.c)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"

    def __repr__(self) -> str:
        return f"NSClass(genus={self.genus}, a={self.a}, b={self.b}, c={self.c})"


def zero_class(g: int) -> NSClass:
    return NSClass(g, 0, 0, 0)


def alpha1(g: int) -> NSClass:
    """Class of a curve fiber {point} x J."""
    return NSClass(g, 1, 0, 0)


def theta2(g: int) -> NSClass:
    """Theta polarization pulled back from the Jacobian factor."""
    return NSClass(g, 0, 1, 0)


def poincare(g: int) -> NSClass:
    """Universal bundle class Q, normalized along a base point of the curve."""
    return NSClass(g, 0, 0, 1)


@dataclass(frozen=True)
class MonomialTable:
    """Top intersection numbers alpha1^i . theta2^j . Q^k for i+j+k = g+1."""

    genus: int
    g_factorial: int

    def value(self, i: int, j: int, k: int) -> Fraction:
        """Intersection number of the (i, j, k) basis monomial."""
        return Fraction(self._int_value(i, j, k))

    def _int_value(self, i: int, j: int, k: int) -> int:
        g = self.genus
        if min(i, j, k) < 0 or i + j + k != g + 1:
            raise ValueError(
                f"monomial index ({i},{j},{k}) is not a degree-{g + 1} triple"
            )
        if i >= 2:
            # alpha1 is a fiber of the projection to C: squares to zero.
            return 0
        if i == 1:
            # On {x} x J only theta survives; Q restricts into Pic^0.
            return self.g_factorial if k == 0 else 0
        if k == 2:
            return POINCARE_SQUARE_COEFF * self.g_factorial
        # k = 0: theta2^(g+1) = 0 on a g-dimensional fiber direction.
        # k = 1: Q is numerically trivial against theta powers alone.
        # k >= 3: forced by vanishing of all pullback-class top powers.
        return 0

    def entries(self) -> Iterator[tuple[tuple[int, int, int], Fraction]]:
        """Enumerate all (g+2)(g+3)/2 index triples with their values."""
        top = self.genus + 1
        for i in range(top + 1):
            for j in range(top + 1 - i):
                k = top - i - j
                yield (i, j, k), self.value(i, j, k)


@lru_cache(maxsize=None)
def monomial_table(g: int) -> MonomialTable:
    """Monomial table for genus g, with g! computed once and cached."""
    _check_genus(g)
    return MonomialTable(genus=g, g_factorial=factorial(g))


def top_intersect(classes: Sequence[NSClass]) -> Fraction:
    """Exact top intersection number of g+1 classes of common genus g.

    Expands the product by iterated truncated polynomial multiplication in
    the three basis symbols, dropping every term whose alpha1 exponent
    reaches 2 or whose total degree exceeds g+1, then contracts the result
    against the monomial table.  Symmetric and multilinear in its arguments.
    """
    classes = list(classes)
    if not classes:
        raise ValueError("top_intersect needs g+1 classes, got none")
    g = classes[0].genus
    for cls in classes[1:]:
        _check_same_genus(classes[0], cls)
    if len(classes) != g + 1:
        raise ValueError(
            f"top_intersect at genus {g} needs exactly {g + 1} classes, "
            f"got {len(classes)}"
        )

    # Clear denominators so the expansion runs on plain ints; multilinearity
    # restores the combined scale at the end.
    scale = 1
    factors: list[tuple[int, int, int]] = []
    for cls in classes:
        den = lcm(cls.a.denominator, cls.b.denominator, cls.c.denominator)
        scale *= den
        factors.append((int(cls.a * den), int(cls.b * den), int(cls.c * den)))

    top = g + 1
    poly: dict[tuple[int, int, int], int] = {(0, 0, 0): 1}
    for xa, xb, xc in factors:
        product: dict[tuple[int, int, int], int] = {}
        for (i, j, k), coeff in poly.items():
            if i + j + k >= top:
                continue
            if xa and i == 0:
                key = (1, j, k)
                product[key] = product.get(key, 0) + coeff * xa
            if xb:
                key = (i, j + 1, k)
                product[key] = product.get(key, 0) + coeff * xb
            if xc:
                key = (i, j, k + 1)
                product[key] = product.get(key, 0) + coeff * xc
        poly = {key: coeff for key, coeff in product.items() if coeff}

    table = monomial_table(g)
    total = 0
    for (i, j, k), coeff in poly.items():
        if i + j + k == top:
            total += coeff * table._int_value(i, j, k)
    return Fraction(total, scale)


def pair_theta_power(x: NSClass, y: NSClass) -> Fraction:
    """The pairing X . Y . theta2^(g-1), through the full expansion engine."""
    _check_same_genus(x, y)
    g = x.genus
    return top_intersect([x, y] + [theta2(g)] * (g - 1))


def pair_theta_power_closed(x: NSClass, y: NSClass) -> Fraction:
    """Closed form g! (x_a y_b + x_b y_a - 2 x_c y_c) of the same pairing.

    Kept as an independent cross-check on ``pair_theta_power``; the two are
    proved equal by the test suite, not assumed.
    """
    _check_same_genus(x, y)
    gf = monomial_table(x.genus).g_factorial
    return gf * (x.a * y.b + x.b * y.a - 2 * x.c * y.c)


def pullback_theta(g: int, m: RationalLike, n: RationalLike) -> NSClass:
    """Pullback of theta along (x, y) -> m(x - base) + n y, as a class.

    Equals (g m^2, n^2, m n), which always sits on the nef boundary:
    a, b >= 0 with ab = g c^2 exactly.
    """
    _check_genus(g)
    m = as_fraction(m)
    n = as_fraction(n)
    return NSClass(g, g * m * m, n * n, m * n)


class JFiberRestriction(NamedTuple):
    """Restriction to a Jacobian fiber {x} x J: theta part plus a Pic^0 part."""

    theta_coeff: Fraction
    pic0_coeff: Fraction


def restrict_to_J_fiber(x: NSClass) -> JFiberRestriction:
    """Class on {x0} x J: b theta plus a numerically trivial c-part."""
    return JFiberRestriction(x.b, x.c)


def restrict_to_C_fiber(x: NSClass) -> Fraction:
    """Degree on a curve fiber C x {y}; only the alpha1 coefficient survives."""
    return x.a
