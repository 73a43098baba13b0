"""Polar curves, the polar family, and the section-2/3 theorem checks."""

from fractions import Fraction

import pytest

from battery import BATTERY, DX, DY, X, Y
from polarweb import (
    AffinePoint,
    MPoly,
    PlaneCurve,
    RadialProduct,
    SymWeb,
    family_degree,
    family_dimension,
    polar_curve,
    polar_equality_criterion,
    polar_family,
    superpose,
    web_degree,
)
from polarweb.errors import DegenerateSampleError
from polarweb.polarops import (
    base_points,
    base_points_check,
    branches_at_center,
    branches_check,
    curve_component_count,
    family_degree_check,
    family_dimension_check,
    generic_polar_irreducible,
    generic_polar_singularities_check,
    polar_degree_check,
    web_decomposable,
)
from polarweb.sampling import GenericSampler

w_product = SymWeb(DX * DY)
w_radial = SymWeb(X * DY - Y * DX)
w_circles = SymWeb(X * DX + Y * DY)
w_sqrt = SymWeb(DY**2 - X * DX**2)

P0 = AffinePoint.of(0, 0)


class TestPolarCurve:
    def test_radial_web_gives_line_through_center_and_origin(self):
        p = AffinePoint.of(3, 5)
        curve = polar_curve(w_radial, p)
        assert curve.defining == (3 * Y - 5 * X).canonical()

    def test_circle_pencil(self):
        curve = polar_curve(w_circles, AffinePoint.of(Fraction(1), Fraction(2)))
        assert curve.defining == (X**2 + Y**2 - X - 2 * Y).canonical()
        assert curve.degree == 2

    def test_product_web(self):
        curve = polar_curve(w_product, AffinePoint.of(1, 2))
        assert curve.defining == ((X - 1) * (Y - 2)).canonical()

    def test_whole_plane_detection(self):
        result = polar_curve(w_radial, P0)
        assert isinstance(result, RadialProduct)
        assert result.cofactor_form.is_constant()

    def test_whole_plane_cofactor_web(self):
        web = superpose(w_radial, SymWeb(DX)).web
        result = polar_curve(web, P0)
        assert isinstance(result, RadialProduct)
        assert result.cofactor_web().form == DX.canonical()

    def test_product_rule_exact(self):
        # P_p(W1 x W2) = P_p(W1) * P_p(W2), exact identity up to normalization
        sampler = GenericSampler(11)
        pairs = [(w_circles, w_sqrt), (w_product, w_circles), (w_radial, w_sqrt)]
        for w1, w2 in pairs:
            web = superpose(w1, w2).web
            p = AffinePoint(*sampler.point())
            c = polar_curve(web, p)
            c1 = polar_curve(w1, p)
            c2 = polar_curve(w2, p)
            assert c.raw == (c1.raw * c2.raw).canonical()


class TestPolarDegree:
    @pytest.mark.parametrize("entry", BATTERY, ids=lambda e: e.name)
    def test_battery_degree(self, entry):
        report = polar_degree_check(entry.web, seed=5, samples=6)
        assert report.passed, report.render_text()

    def test_sqrt_web_cubic(self):
        curve = polar_curve(w_sqrt, AffinePoint.of(3, 7))
        assert curve.raw_degree == 3


class TestPolarEquality:
    def test_constructed_pair(self):
        w2 = SymWeb(w_sqrt.form + (X * DY - Y * DX) * DX)
        v = polar_equality_criterion(w_sqrt, w2, P0)
        assert v.polars_equal and v.divisible and v.routes_agree
        assert v.quotient_form == DX.canonical()

    def test_perturbed_pair(self):
        w2 = SymWeb(DX * DY + DX**2)
        v = polar_equality_criterion(w_product, w2, P0)
        assert not v.polars_equal and not v.divisible and v.routes_agree

    def test_identical(self):
        v = polar_equality_criterion(w_product, w_product, P0)
        assert v.identical

    def test_scaled_forms_still_agree(self):
        w2 = SymWeb(MPoly.constant(3) * w_sqrt.form + (X * DY - Y * DX) * DX)
        v = polar_equality_criterion(w_sqrt, w2, P0)
        # polars differ (scaling changes the sum), but routes must agree
        assert v.routes_agree


class TestPolarFamily:
    def test_product_parametric(self):
        fam = polar_family(w_product)
        a, b = MPoly.variable("a"), MPoly.variable("b")
        assert fam.parametric == ((X - a) * (Y - b)).canonical()

    def test_circle_parametric(self):
        fam = polar_family(w_circles)
        a, b = MPoly.variable("a"), MPoly.variable("b")
        assert fam.parametric == (X**2 + Y**2 - a * X - b * Y).canonical()

    def test_radial_parametric(self):
        fam = polar_family(w_radial)
        a, b = MPoly.variable("a"), MPoly.variable("b")
        assert fam.parametric == (a * Y - b * X).canonical()

    def test_excluded_center_recorded(self):
        fam = polar_family(w_radial)
        result = fam.at(P0)
        assert isinstance(result, RadialProduct)
        assert fam.excluded_centers == [P0]


class TestBasePoints:
    def test_circle_pencil(self):
        rational, numeric = base_points(w_circles)
        assert rational == [P0] and not numeric

    def test_product_empty(self):
        rational, numeric = base_points(w_product)
        assert not rational and not numeric

    def test_radial(self):
        rational, _ = base_points(w_radial)
        assert rational == [P0]

    @pytest.mark.parametrize("entry", BATTERY, ids=lambda e: e.name)
    def test_contained_in_singular_set(self, entry):
        report = base_points_check(entry.web, seed=2)
        assert report.passed, report.render_text()


class TestFamilyDegree:
    def test_product_web_example(self):
        count, pts = family_degree(w_product, P0, AffinePoint.of(1, 2))
        assert count == 4
        at_inf = [q for q in pts if q.z == 0]
        affine = sorted(str(q) for q in pts if q.z != 0)
        assert len(at_inf) == 2
        assert affine == ["(0, 2)", "(1, 0)"]

    def test_foliation_single_point(self):
        count, _ = family_degree(w_circles, AffinePoint.of(1, 1), AffinePoint.of(2, -1))
        assert count == 1

    def test_sqrt_web_four(self):
        count, _ = family_degree(w_sqrt, AffinePoint.of(1, 1), AffinePoint.of(4, -1))
        assert count == 4

    @pytest.mark.parametrize("entry", BATTERY, ids=lambda e: e.name)
    def test_k_squared_on_battery(self, entry):
        if entry.is_radial_pencil:
            pytest.skip("the radial pencil is the excluded web")
        report = family_degree_check(entry.web, seed=9, pairs=2)
        assert report.passed, report.render_text()


class TestFamilyDimension:
    def test_radial_is_a_line_of_curves(self):
        assert family_dimension(w_radial) == 1

    def test_circle_pencil(self):
        assert family_dimension(w_circles) == 2

    def test_product(self):
        assert family_dimension(w_product) == 2

    @pytest.mark.parametrize("entry", BATTERY, ids=lambda e: e.name)
    def test_battery(self, entry):
        report = family_dimension_check(entry.web, seed=4)
        assert report.passed, report.render_text()


class TestSingularLocus:
    @pytest.mark.parametrize("entry", BATTERY, ids=lambda e: e.name)
    def test_containment(self, entry):
        report = generic_polar_singularities_check(entry.web, seed=6, samples=4)
        assert report.passed, report.render_text()

    def test_product_node_at_center(self):
        p = AffinePoint.of(2, 3)
        curve = polar_curve(w_product, p)
        F = curve.defining
        assert F.evaluate(p.as_dict()) == 0
        assert F.derivative("x").evaluate(p.as_dict()) == 0
        assert F.derivative("y").evaluate(p.as_dict()) == 0


class TestBranches:
    def test_product_web(self):
        tc = branches_at_center(w_product, AffinePoint.of(1, 2))
        assert tc.matches_web_directions
        assert tc.cone == (X * Y).canonical()

    def test_sqrt_web(self):
        tc = branches_at_center(w_sqrt, AffinePoint.of(1, 0))
        assert tc.matches_web_directions
        assert {str(d) for d, _ in tc.factors} == {"(1:1)", "(1:-1)"}

    def test_foliation_smooth_at_center(self):
        tc = branches_at_center(w_circles, AffinePoint.of(1, 2))
        assert tc.matches_web_directions and len(tc.factors) == 1

    def test_precondition_on_discriminant(self):
        with pytest.raises(DegenerateSampleError):
            branches_at_center(w_sqrt, AffinePoint.of(0, 1))

    @pytest.mark.parametrize("entry", BATTERY, ids=lambda e: e.name)
    def test_battery(self, entry):
        report = branches_check(entry.web, seed=8, samples=4)
        assert report.passed, report.render_text()


class TestIrreducibility:
    def test_component_count_conic(self):
        assert curve_component_count(PlaneCurve(X**2 + Y**2 - 1), 0)[0] == 1

    def test_component_count_product(self):
        assert curve_component_count(PlaneCurve((Y - X) * (Y + X - 1)), 0)[0] == 2

    def test_component_count_vertical_line_factor(self):
        assert curve_component_count(PlaneCurve((X - 1) * (Y - 2)), 0)[0] == 2

    def test_web_decomposability(self):
        assert web_decomposable(w_product, 0)[0]
        assert not web_decomposable(w_sqrt, 0)[0]
        assert web_decomposable(superpose(w_circles, w_sqrt).web, 0)[0]

    @pytest.mark.parametrize("entry", BATTERY, ids=lambda e: e.name)
    def test_battery(self, entry):
        report = generic_polar_irreducible(entry.web, seed=3, samples=2)
        assert report.passed, report.render_text()
