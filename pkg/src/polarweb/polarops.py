"""Polar curves and the polar family of a plane web.

The polar with center p = (a, b) is the substitution dx -> x - a, dy -> y - b
in the symmetric form: the locus of points whose leaf direction points at the
center.  This module houses the degree count d + k, the polar-equality
criterion, the two-dimensionality and degree k^2 of the family, base points,
the singular-locus containment of the generic polar, the k-branch structure at
the center, and the monodromy-based irreducibility verdict.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateSampleError, PolynomialError, WebValidationError
from .mpoly import MPoly, exact_div, jet_decompose, resultant, try_exact_div
from .numerics import MonodromyResult, cluster_points, monodromy_partition, univariate_roots
from .reports import CheckReport
from .sampling import GenericSampler
from .solve import common_zeros, term_scale, univariate_root_split, vanishes_numerically
from .webmodel import (
    DX,
    DY,
    X,
    Y,
    AffinePoint,
    Direction,
    PlaneCurve,
    SymWeb,
    binary_form_factors,
    is_smooth_point,
    on_discriminant,
    singular_set,
    tangent_directions,
    web_degree,
)

A_VAR = MPoly.variable("a")
B_VAR = MPoly.variable("b")


def radial_form(p: AffinePoint) -> MPoly:
    return (X - MPoly.constant(p.a)) * DY - (Y - MPoly.constant(p.b)) * DX


@dataclass
class RadialProduct:
    """Structured outcome of an identically-zero polar: the web splits off the
    radial foliation centered at the requested point."""

    center: AffinePoint
    cofactor_form: MPoly  # the (k-1)-form W', a constant when k = 1

    def cofactor_web(self) -> SymWeb | None:
        if self.cofactor_form.is_constant():
            return None
        return SymWeb(self.cofactor_form, saturate=True)


def polar_curve(web: SymWeb, p: AffinePoint) -> PlaneCurve | RadialProduct:
    """The polar of the web with center p, as a plane curve of degree d + k."""
    subs = {}
    if "dx" in web.form.variables:
        subs["dx"] = X - MPoly.constant(p.a)
    if "dy" in web.form.variables:
        subs["dy"] = Y - MPoly.constant(p.b)
    raw = web.form.substitute(subs) if subs else web.form
    if raw.is_zero():
        return RadialProduct(p, exact_div(web.form, radial_form(p)))
    return PlaneCurve(raw)


@dataclass
class PolarFamily:
    """The polar with a symbolic center: one polynomial in (a, b, x, y)."""

    parametric: MPoly
    k: int
    d: int
    excluded_centers: list[AffinePoint] = field(default_factory=list)

    def at(self, p: AffinePoint) -> PlaneCurve | RadialProduct:
        raw = self.parametric
        subs = {v: MPoly.constant(val) for v, val in (("a", p.a), ("b", p.b)) if v in raw.variables}
        raw = raw.substitute(subs) if subs else raw
        if raw.is_zero():
            if p not in self.excluded_centers:
                self.excluded_centers.append(p)
            return RadialProduct(p, MPoly.zero())
        return PlaneCurve(raw)

    def center_coefficients(self) -> list[MPoly]:
        """Coefficients of the parametric polar with respect to monomials in
        (a, b), including the center-free part; polynomials in (x, y)."""
        groups: dict[tuple[int, int], dict] = {}
        poly = self.parametric
        ia = poly.variables.index("a") if "a" in poly.variables else None
        ib = poly.variables.index("b") if "b" in poly.variables else None
        keep = [i for i, v in enumerate(poly.variables) if v not in ("a", "b")]
        names = tuple(poly.variables[i] for i in keep)
        for e, c in poly.terms.items():
            key = (e[ia] if ia is not None else 0, e[ib] if ib is not None else 0)
            rest = tuple(e[i] for i in keep)
            groups.setdefault(key, {})[rest] = c
        return [MPoly(names, terms) for key, terms in sorted(groups.items())]


def polar_family(web: SymWeb, seed: int = 0) -> PolarFamily:
    subs = {}
    if "dx" in web.form.variables:
        subs["dx"] = X - A_VAR
    if "dy" in web.form.variables:
        subs["dy"] = Y - B_VAR
    parametric = (web.form.substitute(subs) if subs else web.form).canonical()
    return PolarFamily(parametric, web.k, web_degree(web, seed))


# ---------------------------------------------------------------------------
# degree of the polar
# ---------------------------------------------------------------------------


def polar_degree_check(web: SymWeb, seed: int = 0, samples: int = 20) -> CheckReport:
    """deg P_p = d + k at seeded generic centers (raw degree, multiplicities kept)."""
    report = CheckReport("polar-degree", seed=seed, samples_requested=samples)
    d = web_degree(web, seed)
    k = web.k
    sampler = GenericSampler(seed)
    report.note(f"web degree d={d}, k={k}, expected polar degree {d + k}")
    for i in range(samples):

        def admissible(pt):
            p = AffinePoint(*pt)
            if isinstance(polar_curve(web, p), RadialProduct):
                return False, "polar degenerates: center of a radial factor"
            return True, ""

        try:
            pt = sampler.sample_until(admissible, "center")
        except DegenerateSampleError as e:
            report.add(f"sample {i}", False, str(e))
            continue
        p = AffinePoint(*pt)
        curve = polar_curve(web, p)
        got = curve.raw_degree
        report.add(
            f"deg P_p at p={p}",
            got == d + k,
            f"degree {got}",
        )
    report.samples_used = samples
    report.discards = list(sampler.discards.entries)
    return report


# ---------------------------------------------------------------------------
# polar equality criterion
# ---------------------------------------------------------------------------


@dataclass
class EqualityVerdict:
    identical: bool
    polars_equal: bool
    divisible: bool
    routes_agree: bool
    quotient_form: MPoly | None = None
    scale: Fraction | None = None


def polar_equality_criterion(w1: SymWeb, w2: SymWeb, p: AffinePoint) -> EqualityVerdict:
    """P_p(W1) = P_p(W2) iff (a scaling of) form2 - form1 is divisible by the
    radial form centered at p; both routes are computed and compared."""
    if w1.k != w2.k:
        raise WebValidationError("polar equality criterion needs webs of the same k")
    if w1.form == w2.form:
        return EqualityVerdict(True, True, True, True, None, Fraction(1))
    sub1 = _raw_polar(w1, p)
    sub2 = _raw_polar(w2, p)
    scale = _proportionality(sub1, sub2)
    polars_equal = scale is not None
    lam = scale if scale is not None else Fraction(1)
    diff = w2.form - w1.form * lam
    quotient = try_exact_div(diff, radial_form(p)) if not diff.is_zero() else None
    divisible = diff.is_zero() or quotient is not None
    return EqualityVerdict(
        identical=False,
        polars_equal=polars_equal,
        divisible=divisible,
        routes_agree=(polars_equal == divisible),
        quotient_form=quotient,
        scale=scale,
    )


def _raw_polar(web: SymWeb, p: AffinePoint) -> MPoly:
    subs = {}
    if "dx" in web.form.variables:
        subs["dx"] = X - MPoly.constant(p.a)
    if "dy" in web.form.variables:
        subs["dy"] = Y - MPoly.constant(p.b)
    return web.form.substitute(subs) if subs else web.form


def _proportionality(f: MPoly, g: MPoly) -> Fraction | None:
    """lambda with g = lambda * f, or None."""
    if f.is_zero() or g.is_zero():
        return None
    ef, cf = f.leading_term()
    if f.variables != g.variables or ef not in g.terms:
        return None
    lam = g.terms[ef] / cf
    return lam if f * lam == g else None


# ---------------------------------------------------------------------------
# base points
# ---------------------------------------------------------------------------


def base_points_check(web: SymWeb, seed: int = 0) -> CheckReport:
    """Points on every polar lie in the singular set of the web."""
    report = CheckReport("base-points", seed=seed)
    family = polar_family(web, seed)
    coeffs = family.center_coefficients()
    report.note(f"{len(coeffs)} center-monomial coefficients")
    if any(c.is_constant() and not c.is_zero() for c in coeffs):
        report.add("base locus", True, "a center-monomial coefficient is a nonzero constant: empty")
        return report
    zs = common_zeros([c for c in coeffs if not c.is_zero()], rng=random.Random(seed))
    sing = singular_set(web, seed)
    for q in zs.rational:
        pt = AffinePoint(*q)
        report.add(
            f"base point {pt} in Sing(W)",
            sing.contains(pt),
            "exact containment",
        )
    for q in zs.numeric:
        report.add(
            f"base point ({q[0]:.6g}, {q[1]:.6g}) in Sing(W)",
            sing.contains_numeric(q),
            "numeric containment",
            exact=False,
        )
    if len(zs) == 0:
        report.add("base locus", True, "empty")
    if any(not a.exact for a in report.assertions):
        from .solve import NUMERIC_TOL

        report.certify("numeric_membership_tolerance", NUMERIC_TOL)
    return report


def base_points(web: SymWeb, seed: int = 0):
    """The base locus itself (rational and numeric points)."""
    family = polar_family(web, seed)
    coeffs = [c for c in family.center_coefficients() if not c.is_zero()]
    if any(c.is_constant() for c in coeffs):
        return [], []
    zs = common_zeros(coeffs, rng=random.Random(seed))
    return [AffinePoint(*q) for q in zs.rational], zs.numeric


# ---------------------------------------------------------------------------
# family degree (k^2) and dimension
# ---------------------------------------------------------------------------


@dataclass
class ProjPoint:
    """Point of the projective plane, exact when possible."""

    x: complex
    y: complex
    z: complex  # 0 for points at infinity
    exact: tuple[Fraction, Fraction] | None = None

    def key(self, tol: float = 1e-8) -> tuple:
        # normalized rounding key for dedup
        vec = (self.x, self.y, self.z)
        norm = max(abs(v) for v in vec)
        lead = next(v for v in vec if abs(v) > 0.5 * norm)
        vec = tuple(v / lead for v in vec)
        return tuple((round(v.real, 6), round(v.imag, 6)) for v in vec)

    def __str__(self):
        if self.exact is not None:
            return f"({self.exact[0]}, {self.exact[1]})"
        if self.z == 0:
            return f"[{self.x:.6g} : {self.y:.6g} : 0]"
        return f"({self.x:.6g}, {self.y:.6g})"


def _tangent_line(p: AffinePoint, d: Direction):
    """Line through p with direction (u:v) as normal-form coefficients
    (A, B, C) for A x + B y + C = 0; exact when the direction is."""
    if d.is_exact:
        A, B = d.v, -d.u
        C = -(A * p.a + B * p.b)
        return (A, B, C), True
    u, v = d.approx
    A, B = v, -u
    C = -(A * complex(p.a) + B * complex(p.b))
    return (A, B, C), False


def family_degree(web: SymWeb, p1: AffinePoint, p2: AffinePoint, seed: int = 0) -> tuple[int, list[ProjPoint]]:
    """Number of webs' polar curves through two generic points: the k^2
    pairwise intersections of the tangent lines at p1 and p2, counted in the
    projective plane."""
    dirs1 = tangent_directions(web, p1)
    dirs2 = tangent_directions(web, p2)
    family = polar_family(web, seed)
    points: list[ProjPoint] = []
    for da in dirs1:
        la, exa = _tangent_line(p1, da)
        for db in dirs2:
            lb, exb = _tangent_line(p2, db)
            if exa and exb:
                det = la[0] * lb[1] - lb[0] * la[1]
                if det == 0:
                    if la[0] * lb[2] - lb[0] * la[2] == 0 and la[1] * lb[2] - lb[1] * la[2] == 0:
                        raise DegenerateSampleError("coincident tangent lines between p1 and p2")
                    points.append(ProjPoint(complex(da.u), complex(da.v), 0))
                    continue
                xq = (la[1] * lb[2] - lb[1] * la[2]) / det
                yq = (lb[0] * la[2] - la[0] * lb[2]) / det
                points.append(ProjPoint(complex(xq), complex(yq), 1, exact=(xq, yq)))
            else:
                ca = tuple(map(complex, la))
                cb = tuple(map(complex, lb))
                det = ca[0] * cb[1] - cb[0] * ca[1]
                scale = max(abs(v) for v in ca + cb)
                if abs(det) <= 1e-10 * scale * scale:
                    u, v = da.as_complex()
                    points.append(ProjPoint(u, v, 0))
                    continue
                xq = (ca[1] * cb[2] - cb[1] * ca[2]) / det
                yq = (cb[0] * ca[2] - ca[0] * cb[2]) / det
                points.append(ProjPoint(xq, yq, 1))
    seen = {}
    for pt in points:
        key = pt.key()
        if key in seen:
            raise DegenerateSampleError("two tangent-line pairs meet in the same point")
        seen[key] = pt
    # cross-check: each affine intersection is the center of a polar through
    # p1, p2 (a whole-plane polar contains them trivially)
    for pt in points:
        if pt.z == 0:
            continue
        if pt.exact is not None:
            curve = family.at(AffinePoint(*pt.exact))
            if isinstance(curve, RadialProduct):
                continue
            if not (curve.contains(p1) and curve.contains(p2)):
                raise DegenerateSampleError(f"center {pt} fails the polar membership cross-check")
        else:
            env = {"a": pt.x, "b": pt.y}
            for target in (p1, p2):
                val = family.parametric.evaluate_complex(
                    {**env, "x": complex(target.a), "y": complex(target.b)}
                )
                scale = term_scale(
                    family.parametric,
                    {**env, "x": complex(target.a), "y": complex(target.b)},
                )
                if abs(val) > 1e-9 * scale:
                    raise DegenerateSampleError(f"center {pt} fails the numeric membership cross-check")
    return len(points), points


def family_degree_check(web: SymWeb, seed: int = 0, pairs: int = 5) -> CheckReport:
    report = CheckReport("family-degree-k2", seed=seed, samples_requested=pairs)
    k2 = web.k * web.k
    sampler = GenericSampler(seed)
    done = 0
    tries = 0
    while done < pairs and tries < 50 * pairs:
        tries += 1
        p1 = AffinePoint(*sampler.point())
        p2 = AffinePoint(*sampler.point())
        if p1 == p2:
            continue
        try:
            if not is_smooth_point(web, p1)[0] or not is_smooth_point(web, p2)[0]:
                sampler.discards.add(f"{p1},{p2}", "point not smooth on the web")
                continue
            count, pts = family_degree(web, p1, p2, seed)
        except DegenerateSampleError as e:
            sampler.discards.add(f"{p1},{p2}", str(e))
            continue
        at_inf = sum(1 for q in pts if q.z == 0)
        report.add(
            f"|T_p1 W ∩ T_p2 W| at {p1}, {p2}",
            count == k2,
            f"{count} points ({at_inf} at infinity), expected {k2}",
        )
        done += 1
    if done < pairs:
        report.add("sampling", False, f"only {done} of {pairs} admissible pairs found")
    report.samples_used = done
    report.discards = list(sampler.discards.entries)
    return report


def family_dimension(web: SymWeb, seed: int = 0, samples: int = 5) -> int:
    """Dimension of the polar family inside the space of degree-(d+k) curves:
    projective rank of the coefficient map at sampled centers, maximized."""
    family = polar_family(web, seed)
    sampler = GenericSampler(seed)
    poly = family.parametric
    monos: set[tuple] = set()
    ia = poly.variables.index("a") if "a" in poly.variables else None
    ib = poly.variables.index("b") if "b" in poly.variables else None
    keep = [i for i, v in enumerate(poly.variables) if v not in ("a", "b")]
    coeff_map: dict[tuple, dict] = {}
    for e, c in poly.terms.items():
        key = tuple(e[i] for i in keep)
        ab = tuple(
            e[i] if i is not None else 0 for i in (ia, ib)
        )
        coeff_map.setdefault(key, {})[ab] = c
        monos.add(key)
    mono_list = sorted(monos)

    def coeff_value(key, a0, b0, da=0, db=0) -> Fraction:
        total = Fraction(0)
        for (ea, eb), c in coeff_map.get(key, {}).items():
            if da and ea == 0 or db and eb == 0:
                continue
            fa, fb = ea, eb
            coeff = c
            if da:
                coeff *= fa
                fa -= 1
            if db:
                coeff *= fb
                fb -= 1
            total += coeff * a0**fa * b0**fb
        return total

    best = 0
    for _ in range(samples):
        a0, b0 = sampler.point()
        rows = [
            [coeff_value(m, a0, b0) for m in mono_list],
            [coeff_value(m, a0, b0, da=1) for m in mono_list],
            [coeff_value(m, a0, b0, db=1) for m in mono_list],
        ]
        best = max(best, _rank(rows) - 1)
        if best == 2:
            break
    return best


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        r += 1
        rank += 1
        if r == len(rows):
            break
    return rank


def family_dimension_check(web: SymWeb, seed: int = 0) -> CheckReport:
    report = CheckReport("family-dimension", seed=seed)
    dim = family_dimension(web, seed)
    d = web_degree(web, seed)
    is_radial = web.k == 1 and d == 0
    expected = 1 if is_radial else 2
    report.add(
        "dim R(W)",
        dim == expected,
        f"rank computation gives {dim}, expected {expected}"
        + (" (radial web: the family is a line of curves)" if is_radial else ""),
    )
    return report


# ---------------------------------------------------------------------------
# singular locus of the generic polar
# ---------------------------------------------------------------------------


def generic_polar_singularities_check(web: SymWeb, seed: int = 0, samples: int = 20) -> CheckReport:
    """Sing(P_p) inside discriminant ∪ Sing(W) ∪ {p} for generic p.

    The web discriminant is computed as the (dx:dy)-discriminant, which for
    k >= 2 contains the singular set of the web; for k = 1 the ramification
    locus over the singular points is accounted for by the explicit Sing(W)
    membership branch.
    """
    report = CheckReport("polar-singular-locus", seed=seed, samples_requested=samples)
    sampler = GenericSampler(seed)
    sing = singular_set(web, seed)
    disc = web.discriminant_form
    rng = random.Random(seed + 1)
    for i in range(samples):

        def admissible(pt):
            p = AffinePoint(*pt)
            if isinstance(polar_curve(web, p), RadialProduct):
                return False, "center of a radial factor"
            if not disc.is_constant() and disc.evaluate(p.as_dict()) == 0:
                return False, "center on the discriminant"
            if sing.contains(p):
                return False, "center is singular on the web"
            return True, ""

        try:
            pt = sampler.sample_until(admissible, "center")
        except DegenerateSampleError as e:
            report.add(f"sample {i}", False, str(e))
            continue
        p = AffinePoint(*pt)
        curve = polar_curve(web, p)
        F = curve.defining
        fx, fy = F.derivative("x"), F.derivative("y")
        if fx.is_zero() and fy.is_zero():
            report.add(f"Sing(P_p) at p={p}", False, "degenerate polar gradient")
            continue
        zs = common_zeros([F, fx, fy], rng=rng)
        bad = []
        for q in zs.rational:
            qp = AffinePoint(*q)
            on_disc = (not disc.is_constant()) and disc.evaluate(qp.as_dict()) == 0
            if not (qp == p or on_disc or sing.contains(qp)):
                bad.append(str(qp))
        for q in zs.numeric:
            env = {"x": q[0], "y": q[1]}
            on_disc = (not disc.is_constant()) and vanishes_numerically(disc, env)
            near_p = abs(q[0] - complex(p.a)) < 1e-8 and abs(q[1] - complex(p.b)) < 1e-8
            if not (near_p or on_disc or sing.contains_numeric(q)):
                bad.append(f"({q[0]:.6g},{q[1]:.6g})")
        exact = not zs.numeric
        report.add(
            f"Sing(P_p) ⊆ Δ(W) ∪ Sing(W) ∪ {{p}} at p={p}",
            not bad,
            f"{len(zs)} singular points" + (f"; violations: {bad}" if bad else ""),
            exact=exact,
        )
    report.samples_used = samples
    report.discards = list(sampler.discards.entries)
    if any(not a.exact for a in report.assertions):
        from .solve import NUMERIC_TOL

        report.certify("numeric_membership_tolerance", NUMERIC_TOL)
    return report


# ---------------------------------------------------------------------------
# branches at the center
# ---------------------------------------------------------------------------


@dataclass
class TangentConeReport:
    point: AffinePoint
    cone: MPoly
    factors: list[tuple[Direction, int]]
    matches_web_directions: bool


def branches_at_center(web: SymWeb, p: AffinePoint) -> TangentConeReport:
    """Tangent cone of the polar at its center: k distinct lines along the
    web's tangent directions.  Requires p off the discriminant and Sing(W)."""
    smooth, reason = is_smooth_point(web, p)
    if not smooth:
        raise DegenerateSampleError(f"branches_at_center precondition: {reason}")
    curve = polar_curve(web, p)
    if isinstance(curve, RadialProduct):
        raise DegenerateSampleError("polar degenerates at this center")
    jets = jet_decompose(curve.raw, ("x", "y"), (p.a, p.b))
    order = min(jets)
    cone = jets[order]
    if order != web.k:
        return TangentConeReport(p, cone, [], False)
    # cross-check against the specialized symmetric form
    coeffs = [c.evaluate(p.as_dict()) for c in web.coefficients()]
    expected = MPoly.zero()
    for i, c in enumerate(coeffs):
        expected = expected + MPoly.constant(c) * X ** (web.k - i) * Y**i
    if _proportionality(expected, cone) is None:
        return TangentConeReport(p, cone, [], False)
    factors = binary_form_factors(cone)
    dirs = tangent_directions(web, p)
    ok = len(factors) == web.k and all(m == 1 for _, m in factors)
    if ok:
        for d in dirs:
            if not any(f.matches(d) for f, _ in factors):
                ok = False
                break
    return TangentConeReport(p, cone, factors, ok)


def branches_check(web: SymWeb, seed: int = 0, samples: int = 20) -> CheckReport:
    report = CheckReport("branches-at-center", seed=seed, samples_requested=samples)
    sampler = GenericSampler(seed)
    for i in range(samples):

        def admissible(pt):
            p = AffinePoint(*pt)
            ok, reason = is_smooth_point(web, p)
            if not ok:
                return False, reason
            if isinstance(polar_curve(web, p), RadialProduct):
                return False, "center of a radial factor"
            return True, ""

        try:
            pt = sampler.sample_until(admissible, "center")
        except DegenerateSampleError as e:
            report.add(f"sample {i}", False, str(e))
            continue
        p = AffinePoint(*pt)
        tc = branches_at_center(web, p)
        exact = all(d.is_exact for d, _ in tc.factors)
        report.add(
            f"{web.k} transversal branches at p={p}",
            tc.matches_web_directions,
            f"cone factors: {[(str(d), m) for d, m in tc.factors]}",
            exact=exact,
        )
    report.samples_used = samples
    report.discards = list(sampler.discards.entries)
    return report


# ---------------------------------------------------------------------------
# irreducibility via monodromy
# ---------------------------------------------------------------------------


def _find_shear(F: MPoly, rng: random.Random) -> int:
    n = F.total_degree()
    top = jet_decompose(F, ("x", "y"), (0, 0)).get(n)
    for lam in [0, 1, -1, 2, -2, 3, -3] + [rng.randint(-20, 20) for _ in range(20)]:
        val = top.evaluate({"x": lam, "y": 1})
        if val != 0:
            return lam
    raise DegenerateSampleError("no shear makes the curve y-proper")


def curve_component_count(curve: PlaneCurve, seed: int = 0) -> tuple[int, MonodromyResult | None]:
    """Number of irreducible components over C of a reduced curve, by
    monodromy of a sheared line-section cover."""
    F = curve.defining
    n = F.total_degree()
    if n <= 0:
        raise PolynomialError("component count of an empty curve")
    if n == 1:
        return 1, None
    rng = random.Random(seed)
    lam = _find_shear(F, rng)
    Fs = F.substitute({"x": X + MPoly.constant(lam) * Y}) if "x" in F.variables else F
    if Fs.degree_in("y") != n:
        raise DegenerateSampleError("shear failed to make the curve y-proper")
    disc = resultant(Fs, Fs.derivative("y"), "y")
    if disc.is_zero():
        raise PolynomialError("discriminant vanished on a reduced curve (internal)")
    branch: list[complex] = []
    if disc.degree_in("x") > 0:
        rat, num = univariate_root_split(disc, "x")
        branch = [complex(r) for r, _ in rat] + [z for z, _ in num]
        branch = [c for c, _ in cluster_points(branch, 1e-7 * _spread_scale(branch))]
    coeff_polys = Fs.coeffs_in("y")

    def cover(s: complex):
        return [c.evaluate_complex({"x": s}) for c in coeff_polys]

    base = _pick_base(branch, cover, rng, n)
    result = monodromy_partition(cover, base, branch)
    return result.orbit_count, result


def _spread_scale(points: list[complex]) -> float:
    if len(points) < 2:
        return 1.0
    return max(abs(p - q) for i, p in enumerate(points) for q in points[i + 1 :]) or 1.0


def _pick_base(branch: list[complex], cover, rng: random.Random, degree: int) -> complex:
    spread = _spread_scale(branch)
    center = sum(branch) / len(branch) if branch else 0j
    for _ in range(100):
        z = center + spread * complex(rng.uniform(-1.6, 1.6), rng.uniform(0.3, 1.6))
        if branch and min(abs(z - b) for b in branch) <= 2e-3 * spread:
            continue
        try:
            roots = univariate_roots(cover(z))
        except Exception:
            continue
        if len(roots) != degree:
            continue
        if degree > 1:
            sep = min(
                abs(r1 - r2) for i, r1 in enumerate(roots) for r2 in roots[i + 1 :]
            )
            if sep < 1e-6 * max(1.0, max(abs(r) for r in roots)):
                continue
        return z
    raise DegenerateSampleError("no admissible monodromy base point found")


def web_decomposable(web: SymWeb, seed: int = 0) -> tuple[bool, MonodromyResult | None]:
    """Whether the web splits as a superposition, decided by monodromy of the
    direction cover over a generic line."""
    if web.k == 1:
        return False, None
    rng = random.Random(seed)
    t = MPoly.variable("t")
    for _ in range(30):
        mu = next(
            m
            for m in [0, 1, -1, 2, -2, 3, -3]
            if not _form_at_direction(web.form, m).is_zero()
        )
        form = web.form
        if mu != 0 and "dx" in form.variables:
            form = form.substitute({"dx": DX + MPoly.constant(mu) * DY})
        a1, a2 = rng.randint(-15, 15), rng.randint(-15, 15)
        b1, b2 = rng.randint(-15, 15), rng.randint(-15, 15)
        if a1 == 0 and a2 == 0:
            continue
        subs = {}
        if "x" in form.variables:
            subs["x"] = MPoly.constant(a1) * t + MPoly.constant(b1)
        if "y" in form.variables:
            subs["y"] = MPoly.constant(a2) * t + MPoly.constant(b2)
        if "dx" in form.variables:
            subs["dx"] = MPoly.constant(1)
        if "dy" in form.variables:
            subs["dy"] = MPoly.variable("m")
        q = form.substitute(subs)
        if q.degree_in("m") != web.k:
            continue
        lead = q.coeffs_in("m")[web.k]
        if q.degree_in("t") == 0:
            # direction cover is constant along the line: split sections
            rat, num = univariate_root_split(q, "m")
            count = len(rat) + len(num)
            if count == web.k:
                partition = tuple((i,) for i in range(web.k))
                return True, MonodromyResult(web.k, 0, partition)
            continue
        try:
            disc = resultant(q, q.derivative("m"), "m")
        except PolynomialError:
            continue
        if disc.is_zero():
            continue
        special: list[complex] = []
        for poly in (disc, lead):
            if poly.degree_in("t") > 0:
                rat, num = univariate_root_split(poly, "t")
                special += [complex(r) for r, _ in rat] + [z for z, _ in num]
        special = [c for c, _ in cluster_points(special, 1e-7 * _spread_scale(special))]
        coeff_polys = q.coeffs_in("m")

        def cover(s: complex):
            return [c.evaluate_complex({"t": s}) for c in coeff_polys]

        try:
            base = _pick_base(special, cover, rng, web.k)
            result = monodromy_partition(cover, base, special)
        except Exception:
            continue
        return result.orbit_count > 1, result
    raise DegenerateSampleError("web_decomposable: no admissible line found")


def _form_at_direction(form: MPoly, mu: int) -> MPoly:
    subs = {}
    if "dx" in form.variables:
        subs["dx"] = MPoly.constant(mu)
    if "dy" in form.variables:
        subs["dy"] = MPoly.constant(1)
    return form.substitute(subs) if subs else form


def generic_polar_irreducible(web: SymWeb, seed: int = 0, samples: int = 5) -> CheckReport:
    """Generic polar decomposable iff the web is decomposable or has degree 0
    (with k >= 2); verified sample by sample against the monodromy count."""
    report = CheckReport("polar-irreducible", seed=seed, samples_requested=samples)
    d = web_degree(web, seed)
    k = web.k
    decomposable, _ = web_decomposable(web, seed)
    expect_reducible = decomposable or (d == 0 and k >= 2)
    report.note(
        f"web: k={k}, d={d}, decomposable={decomposable}; expected generic polar "
        + ("reducible" if expect_reducible else "irreducible")
    )
    sampler = GenericSampler(seed)
    sing = singular_set(web, seed)
    for i in range(samples):

        def admissible(pt):
            p = AffinePoint(*pt)
            if isinstance(polar_curve(web, p), RadialProduct):
                return False, "center of a radial factor"
            if sing.contains(p):
                return False, "center is singular on the web"
            if on_discriminant(web, p):
                return False, "center on the discriminant"
            return True, ""

        try:
            pt = sampler.sample_until(admissible, "center")
        except DegenerateSampleError as e:
            report.add(f"sample {i}", False, str(e))
            continue
        p = AffinePoint(*pt)
        curve = polar_curve(web, p)
        reduced = curve.raw == curve.defining
        if not reduced:
            report.add(
                f"polar at {p} square-free",
                False,
                "polar is non-reduced; component count uses the reduction",
            )
        try:
            count, cert = curve_component_count(curve, seed + i)
        except (DegenerateSampleError, PolynomialError) as e:
            report.add(f"components at p={p}", False, f"monodromy failed: {e}")
            continue
        ok = (count >= 2) if expect_reducible else (count == 1)
        detail = f"{count} component(s)"
        if cert is not None:
            detail += (
                f"; loops={cert.loops_traced}, min separation {cert.min_separation:.3e}, "
                f"max step {cert.max_step:.3f} of separation"
            )
        report.add(f"components at p={p}", ok, detail, exact=False)
        if cert is not None:
            report.certify(f"min_separation[{i}]", cert.min_separation)
    report.samples_used = samples
    report.discards = list(sampler.discards.entries)
    return report
