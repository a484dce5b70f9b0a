"""Point heights and the self-height of the total space."""

from fractions import Fraction
from math import factorial

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from curvejac.heights import (
    PointClass,
    generic_degree,
    height_curve,
    height_point,
    standard_polarization,
)
from curvejac.lattice import NSClass, alpha1, pullback_theta, theta2

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonneg = st.fractions(min_value=0, max_value=20, max_denominator=12)
positive = st.fractions(min_value=Fraction(1, 12), max_value=20, max_denominator=12)
genera = st.integers(min_value=2, max_value=8)


def psef_point(g, m, n, s, t):
    # Nef (hence psef) with positive degree as long as m != 0 or s > 0.
    return PointClass(pullback_theta(g, m, n) + s * alpha1(g) + t * theta2(g))


class TestPointClass:
    def test_accepts_boundary_point(self):
        point = PointClass(NSClass(2, 8, 1, 2))
        assert point.degree == 8

    def test_rejects_nonpositive_degree(self):
        with pytest.raises(ValueError):
            PointClass(NSClass(2, 0, 1, 0))
        with pytest.raises(ValueError):
            PointClass(NSClass(2, -2, 1, 0))

    def test_rejects_non_psef(self):
        with pytest.raises(ValueError):
            PointClass(NSClass(2, 1, 1, 1))


class TestStandardPolarization:
    @pytest.mark.parametrize("g", range(2, 13))
    def test_is_theta_pullback_at_one_one(self, g):
        L = standard_polarization(g)
        assert L == NSClass(g, g, 1, 1)
        assert L == pullback_theta(g, 1, 1)
        assert generic_degree(L) == g


class TestHeightPoint:
    def test_constant_section_class(self):
        # (1, 0, 0) is the class of a constant section; height g!.
        for g in range(2, 7):
            report = height_point(standard_polarization(g), NSClass(g, 1, 0, 0))
            assert report.height == factorial(g)
            assert report.degree == 1

    def test_witness_example_genus_two(self):
        report = height_point(standard_polarization(2), NSClass(2, 8, 1, 2))
        assert report.height == Fraction(3, 2)
        assert report.degree == 8

    def test_witness_example_genus_three(self):
        report = height_point(standard_polarization(3), NSClass(3, 27, 1, 3))
        assert report.height == Fraction(16, 3)
        assert report.degree == 27

    def test_genus_mismatch_rejected(self):
        with pytest.raises(ValueError):
            height_point(standard_polarization(2), PointClass(NSClass(3, 1, 0, 0)))

    def test_base_multiple(self):
        L = standard_polarization(3)
        point = NSClass(3, 27, 1, 3)
        plain = height_point(L, point).height
        scaled = height_point(L, point, base_multiple=Fraction(1, 2)).height
        assert scaled == plain * Fraction(1, 2) ** 2

    def test_base_multiple_must_be_positive(self):
        with pytest.raises(ValueError):
            height_point(standard_polarization(2), NSClass(2, 1, 0, 0), base_multiple=0)

    @given(st.data(), genera)
    @settings(max_examples=80)
    def test_report_invariant_and_scale_invariance(self, data, g):
        from curvejac.lattice import pair_theta_power

        point = psef_point(
            g,
            data.draw(positive),
            data.draw(rationals),
            data.draw(nonneg),
            data.draw(nonneg),
        )
        L = standard_polarization(g)
        report = height_point(L, point)
        assert report.height == pair_theta_power(point.cls, L) / report.degree
        lam = data.draw(positive)
        scaled = height_point(L, PointClass(lam * point.cls))
        assert scaled.height == report.height
        assert scaled.degree == lam * report.degree
        assert height_point(2 * L, point).height == 2 * report.height

    @given(st.data(), genera)
    @settings(max_examples=80)
    def test_lower_bound_and_equality_analysis(self, data, g):
        point = psef_point(
            g,
            data.draw(positive),
            data.draw(rationals),
            data.draw(nonneg),
            data.draw(nonneg),
        )
        bound = Fraction((g * g - 1) * factorial(g - 1), g)  # (g - 1/g) (g-1)!
        height = height_point(standard_polarization(g), point).height
        assert height >= bound
        if height == bound:
            # Equality only on the ray through (1, 1/g^3, 1/g^2).
            assert point.cls.b / point.cls.a == Fraction(1, g**3)
            assert point.cls.c / point.cls.a == Fraction(1, g**2)

    @pytest.mark.parametrize("g", range(2, 13))
    def test_equality_on_minimizing_ray(self, g):
        bound = Fraction((g * g - 1) * factorial(g - 1), g)
        ray = NSClass(g, 1, Fraction(1, g**3), Fraction(1, g**2))
        for lam in (1, 2, Fraction(5, 3)):
            report = height_point(standard_polarization(g), lam * ray)
            assert report.height == bound


class TestHeightCurve:
    @pytest.mark.parametrize("g", range(2, 13))
    def test_standard_polarization_value(self, g):
        assert height_curve(standard_polarization(g)) == (g - 1) * factorial(g - 1)

    def test_genus_five_example(self):
        assert height_curve(standard_polarization(5)) == 96

    def test_rejects_degree_zero(self):
        with pytest.raises(ValueError):
            height_curve(theta2(2))

    def test_base_multiple(self):
        g = 4
        plain = height_curve(standard_polarization(g))
        scaled = height_curve(standard_polarization(g), base_multiple=3)
        assert scaled == plain * 3 ** (g - 1)

    @given(st.data(), genera)
    @settings(max_examples=60)
    def test_quadratic_homogeneity_cancels_to_linear(self, data, g):
        from curvejac.lattice import pair_theta_power

        m = data.draw(positive)
        n = data.draw(rationals)
        L = pullback_theta(g, m, n) + data.draw(positive) * alpha1(g)
        value = height_curve(L)
        assert value == pair_theta_power(L, L) / (2 * generic_degree(L))
        lam = data.draw(positive)
        assert height_curve(lam * L) == lam * value
