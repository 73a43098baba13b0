"""Exact polynomial core: arithmetic, gcd, resultants, discriminants, jets."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polarweb import MPoly, discriminant_binary, gcd_squarefree, jet_decompose, poly_gcd, resultant, squarefree_part
from polarweb.errors import PolynomialError
from polarweb.mpoly import (
    exact_div,
    format_mpoly,
    lowest_jet,
    sylvester_resultant,
    try_exact_div,
)

x = MPoly.variable("x")
y = MPoly.variable("y")
dx = MPoly.variable("dx")
dy = MPoly.variable("dy")


def small_polys(variables=("x", "y"), max_terms=4, max_exp=3):
    coeff = st.integers(-6, 6)
    exp = st.tuples(*[st.integers(0, max_exp) for _ in variables])
    term = st.tuples(exp, coeff)
    return st.lists(term, min_size=0, max_size=max_terms).map(
        lambda terms: sum(
            (
                MPoly.monomial(c, dict(zip(variables, e)))
                for e, c in terms
                if c != 0
            ),
            MPoly.zero(),
        )
    )


class TestArithmetic:
    def test_product_identity(self):
        assert (x + y) * (x - y) == x**2 - y**2

    def test_power_zero(self):
        assert x**0 == 1

    def test_subtraction(self):
        assert (y**2 - x**3) - y**2 == -(x**3)

    def test_negative_power_rejected(self):
        with pytest.raises(PolynomialError):
            x ** (-1)

    @given(small_polys(), small_polys(), small_polys())
    @settings(max_examples=60, deadline=None)
    def test_ring_laws(self, f, g, h):
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h


class TestDerivative:
    def test_cubic(self):
        assert (y**2 - x**3).derivative("x") == -3 * x**2

    def test_product(self):
        assert (x * y).derivative("y") == x

    def test_constant(self):
        assert MPoly.constant(5).derivative("x") == 0


class TestSubstitute:
    def test_hand_expansion(self):
        got = (dx * dy).substitute({"dx": x - 1, "dy": y - 2})
        assert got == x * y - 2 * x - y + 2

    def test_identity(self):
        assert (x**2).substitute({"x": x}) == x**2

    def test_radial_contraction_vanishes(self):
        assert (x * dy - y * dx).substitute({"dx": x, "dy": y}) == 0

    def test_unknown_variable_rejected(self):
        with pytest.raises(PolynomialError):
            (x**2).substitute({"t": x})

    @given(small_polys(), small_polys())
    @settings(max_examples=40, deadline=None)
    def test_ring_homomorphism(self, f, g):
        subs = {"x": x + 1, "y": y * y - 2}
        def apply(p):
            use = {v: subs[v] for v in p.variables if v in subs}
            return p.substitute(use) if use else p
        assert apply(f * g) == apply(f) * apply(g)
        assert apply(f + g) == apply(f) + apply(g)


class TestGcdSquarefree:
    def test_monomials(self):
        g, _ = gcd_squarefree(x**2 * y, x * y**2)
        assert g == x * y

    def test_squarefree_part(self):
        assert squarefree_part(x**2 * (y - 1)) == (x * (y - 1)).canonical()

    def test_cusp_gradient_coprime(self):
        assert poly_gcd(y**2 - x**3, 2 * y) == 1

    def test_both_zero_rejected(self):
        with pytest.raises(PolynomialError):
            gcd_squarefree(MPoly.zero(), MPoly.zero())

    def test_gcd_divides_both(self):
        f = (x + y) ** 2 * (x - 2)
        g = (x + y) * (y + 3)
        d = poly_gcd(f, g)
        assert d == (x + y).canonical()
        assert try_exact_div(f, d) is not None
        assert try_exact_div(g, d) is not None


class TestResultant:
    def test_sylvester_2x2_by_hand(self):
        assert resultant(y**2 - x, y, "y") == -x

    def test_linear_case(self):
        assert resultant(y - x, y + x, "y") == 2 * x

    def test_common_factor_gives_zero(self):
        f = y**2 - x**3 + x * y
        assert resultant(f, f, "y") == 0

    def test_degenerate_rejected(self):
        with pytest.raises(PolynomialError):
            resultant(x + 1, y, "y")

    @given(small_polys(max_terms=3, max_exp=2), small_polys(max_terms=3, max_exp=2))
    @settings(max_examples=30, deadline=None)
    def test_matches_sylvester_determinant(self, f, g):
        if f.degree_in("y") == 0 or g.degree_in("y") == 0:
            return
        assert resultant(f, g, "y") == sylvester_resultant(f, g, "y")

    @given(small_polys(max_terms=2, max_exp=2), small_polys(max_terms=2, max_exp=2))
    @settings(max_examples=30, deadline=None)
    def test_zero_iff_common_factor(self, f, g):
        # planted common factor forces a zero resultant
        h = x * y + y + 1
        f1, g1 = f * h, g * h
        if f1.degree_in("y") == 0 or g1.degree_in("y") == 0:
            return
        assert resultant(f1, g1, "y") == 0
        # and in general: zero resultant iff the gcd has positive y-degree
        if f.degree_in("y") > 0 and g.degree_in("y") > 0 and not (f.is_zero() or g.is_zero()):
            assert (resultant(f, g, "y") == 0) == (poly_gcd(f, g).degree_in("y") > 0)


class TestDiscriminantBinary:
    def test_sqrt_web(self):
        # b^2 - 4ac with a = -x, b = 0, c = 1, up to unit
        assert discriminant_binary(dy**2 - x * dx**2) == x

    def test_product_web_unit(self):
        assert discriminant_binary(dx * dy) == 1

    def test_degree_one_unit(self):
        assert discriminant_binary(dx) == 1

    def test_zero_rejected(self):
        with pytest.raises(PolynomialError):
            discriminant_binary(MPoly.zero())

    @given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4))
    @settings(max_examples=40, deadline=None)
    def test_vanishes_iff_repeated_root(self, a0, a1, a2, x0):
        from polarweb.webmodel import binary_form_factors

        form = (
            MPoly.constant(a0) * dx**2
            + MPoly.constant(a1) * x * dx * dy
            + MPoly.constant(a2) * dy**2
        )
        if form.is_zero():
            return
        disc = discriminant_binary(form)
        val = (
            disc.evaluate({v: x0 for v in disc.variables})
            if not disc.is_constant()
            else disc.constant_value()
        )
        spec = (
            form.substitute({"x": MPoly.constant(x0)})
            if "x" in form.variables
            else form
        )
        if spec.is_zero():
            return
        # independent oracle: factor the specialized binary form over C
        repeated = any(m >= 2 for _, m in binary_form_factors(spec, "dx", "dy"))
        assert (val == 0) == repeated

    @given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-2, 2), st.integers(-2, 2))
    @settings(max_examples=30, deadline=None)
    def test_cubic_form_vanishing_iff_repeated_root(self, a, b, x0, y0):
        from polarweb.webmodel import binary_form_factors

        form = (
            dy**3
            + MPoly.constant(a) * x * dx**2 * dy
            + MPoly.constant(b) * y * dx**3
            + dx * dy**2
        )
        disc = discriminant_binary(form)
        point = {v: (x0 if v == "x" else y0) for v in disc.variables}
        val = disc.evaluate(point) if not disc.is_constant() else disc.constant_value()
        spec = form.substitute(
            {v: (x0 if v == "x" else y0) for v in form.variables if v in ("x", "y")}
        )
        repeated = any(m >= 2 for _, m in binary_form_factors(spec, "dx", "dy"))
        assert (val == 0) == repeated


class TestJets:
    def test_cusp(self):
        jets = jet_decompose(y**2 - x**3)
        assert jets == {2: y**2, 3: -(x**3)}

    def test_translate_constant(self):
        jets = jet_decompose(x, ("x", "y"), (1, 0))
        assert jets[0] == 1 and jets[1] == x

    def test_translation_kills_lower_terms(self):
        f = (x - 2) * (y - 3)
        jets = jet_decompose(f, ("x", "y"), (2, 3))
        assert list(jets) == [2] and jets[2] == x * y

    @given(small_polys(), st.integers(-3, 3), st.integers(-3, 3))
    @settings(max_examples=40, deadline=None)
    def test_parts_sum_to_translate(self, f, a, b):
        if f.is_zero():
            return
        jets = jet_decompose(f, ("x", "y"), (a, b))
        subs = {
            v: MPoly.variable(v) + MPoly.constant(c)
            for v, c in (("x", a), ("y", b))
            if v in f.variables and c != 0
        }
        translated = f.substitute(subs) if subs else f
        assert sum(jets.values(), MPoly.zero()) == translated

    def test_lowest_jet(self):
        order, init = lowest_jet(y**2 - x**3)
        assert order == 2 and init == y**2


class TestCanonicalForm:
    def test_exact_division(self):
        f = (x + y) * (x - y) * MPoly.constant(Fraction(3, 2))
        assert exact_div(f, x + y) == (x - y) * Fraction(3, 2)

    def test_format_round_trippable_shape(self):
        f = Fraction(3, 2) * x**2 * y - dx**2 * x
        assert format_mpoly(f) == "-dx^2*x + 3/2*x^2*y"

    def test_canonical_sign(self):
        assert (-(x**3) + y).canonical() == (x**3 - y).canonical()
