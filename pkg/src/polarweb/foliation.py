"""Foliation-specific analysis of polar curves.

A foliation is the k = 1 web of a vector field A d/dx + B d/dy with coprime
polynomial components.  This module computes the inflexion divisor, classifies
singular points as quasi-radial or not through the first nonzero jet pair,
verifies the tangent-cone dichotomy of the polar at singular points, runs both
directions of the inflexion-at-center equivalence, and computes the class of a
curve (degree of its dual) to bound the number of quasi-radial singularities.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateSampleError,
    InternalInvariantError,
    NumericAbortError,
    PolynomialError,
    WebValidationError,
)
from .mpoly import (
    MPoly,
    divisibility_multiplicity,
    exact_div,
    jet_decompose,
    poly_gcd,
    resultant,
    try_exact_div,
)
from .localsing import (
    cp_clean,
    cp_from_mpoly,
    cp_norm,
    cp_translate,
    homogenize,
    intersection_multiplicity,
)
from .numerics import univariate_roots
from .polarops import RadialProduct, polar_curve
from .reports import CheckReport
from .sampling import GenericSampler
from .solve import univariate_root_split
from .webmodel import (
    AffinePoint,
    PlaneCurve,
    SymWeb,
    foliation_web,
    singular_set,
    web_degree,
)

X = MPoly.variable("x")
Y = MPoly.variable("y")


@dataclass
class FoliationData:
    """Vector field X = A d/dx + B d/dy with gcd(A, B) = 1."""

    A: MPoly
    B: MPoly
    as_web: SymWeb
    saturated: bool = False

    def __init__(self, A: MPoly, B: MPoly):
        if A.is_zero() and B.is_zero():
            raise WebValidationError("zero vector field")
        extra = (set(A.variables) | set(B.variables)) - {"x", "y"}
        if extra:
            raise WebValidationError(f"vector field involves {sorted(extra)}")
        self.saturated = False
        if not A.is_zero() and not B.is_zero():
            g = poly_gcd(A, B)
            if not g.is_constant():
                A, B = exact_div(A, g), exact_div(B, g)
                self.saturated = True
        self.A, self.B = A, B
        self.as_web = foliation_web(A, B)

    def degree(self, seed: int = 0) -> int:
        return web_degree(self.as_web, seed)

    def polar(self, p: AffinePoint) -> PlaneCurve | RadialProduct:
        return polar_curve(self.as_web, p)

    def __str__(self):
        return f"foliation[A={self.A}, B={self.B}]"


# ---------------------------------------------------------------------------
# inflexion divisor
# ---------------------------------------------------------------------------


def inflexion_polynomial(fol: FoliationData) -> MPoly:
    """B^2 A_y + A B A_x - A^2 B_x - A B B_y, not yet reduced."""
    A, B = fol.A, fol.B
    return (
        B * B * A.derivative("y")
        + A * B * A.derivative("x")
        - A * A * B.derivative("x")
        - A * B * B.derivative("y")
    )


def inflexion_divisor(fol: FoliationData) -> PlaneCurve | None:
    """The curve of inflexion points of the leaves; None when it vanishes
    identically (every leaf is a line)."""
    e = inflexion_polynomial(fol)
    if e.is_zero():
        return None
    if e.is_constant():
        return PlaneCurve(MPoly.constant(1), reduce=False)
    return PlaneCurve(e)


def polar_sing_in_inflexion_check(fol: FoliationData, seed: int = 0, samples: int = 20) -> CheckReport:
    """Singular points of every polar lie on the inflexion divisor.

    The statement holds for every center, so the samples deliberately include
    non-generic points (the origin, singular points of the foliation, points
    on the inflexion divisor itself)."""
    from .solve import common_zeros

    report = CheckReport("sing-in-inflexion", seed=seed, samples_requested=samples)
    e = inflexion_divisor(fol)
    if e is None:
        report.add("inflexion divisor", True, "identically zero: all leaves are lines; check skipped")
        return report
    sampler = GenericSampler(seed)
    rng = random.Random(seed + 3)
    centers: list[AffinePoint] = [AffinePoint.of(0, 0), AffinePoint.of(1, 0), AffinePoint.of(0, 1)]
    centers += singular_set(fol.as_web, seed).points[:2]
    while len(centers) < samples:
        centers.append(AffinePoint(*sampler.point()))
    used = 0
    for p in centers[:samples]:
        curve = fol.polar(p)
        if isinstance(curve, RadialProduct):
            sampler.discards.add(str(p), "polar degenerates (radial factor)")
            continue
        F = curve.defining
        fx, fy = F.derivative("x"), F.derivative("y")
        if fx.is_zero() and fy.is_zero():
            sampler.discards.add(str(p), "polar gradient vanishes identically")
            continue
        zs = common_zeros([F, fx, fy], rng=rng)
        bad = []
        for q in zs.rational:
            on_divisor = (not e.is_empty) and e.defining.evaluate({"x": q[0], "y": q[1]}) == 0
            if not on_divisor:
                bad.append(f"({q[0]},{q[1]})")
        for q in zs.numeric:
            if e.is_empty or not e.contains_numeric(q):
                bad.append(f"({q[0]:.5g},{q[1]:.5g})")
        report.add(
            f"Sing(P_p) ⊆ E(F) at p={p}",
            not bad,
            f"{len(zs)} singular point(s)" + (f"; violations {bad}" if bad else ""),
            exact=not zs.numeric,
        )
        used += 1
    report.samples_used = used
    report.discards = list(sampler.discards.entries)
    if any(not a.exact for a in report.assertions):
        from .solve import NUMERIC_TOL

        report.certify("numeric_membership_tolerance", NUMERIC_TOL)
    return report


# ---------------------------------------------------------------------------
# quasi-radial classification
# ---------------------------------------------------------------------------


@dataclass
class SingularityClass:
    point: AffinePoint | tuple[complex, complex]
    first_jet_order: int
    quasi_radial: bool
    radial_cofactor: MPoly | None
    exact: bool

    def __str__(self):
        kind = "quasi-radial" if self.quasi_radial else "not quasi-radial"
        return f"{kind} (first jet order {self.first_jet_order})"


def classify_singularity(fol: FoliationData, q: AffinePoint) -> SingularityClass:
    """Quasi-radial iff the first nonzero jet pair is a multiple of the radial
    field: y*A_k - x*B_k = 0, i.e. A_k = x*P and B_k = y*P."""
    point = q.as_dict()
    if fol.A.evaluate(point) != 0 or fol.B.evaluate(point) != 0:
        raise PolynomialError(f"{q} is not a singular point of the foliation")
    ja = jet_decompose(fol.A, ("x", "y"), (q.a, q.b))
    jb = jet_decompose(fol.B, ("x", "y"), (q.a, q.b))
    orders = sorted(set(ja) | set(jb))
    k = next(o for o in orders if o in ja or o in jb)
    ak = ja.get(k, MPoly.zero())
    bk = jb.get(k, MPoly.zero())
    crit = Y * ak - X * bk
    if not crit.is_zero():
        return SingularityClass(q, k, False, None, True)
    cofactor = exact_div(ak, X) if not ak.is_zero() else exact_div(bk, Y)
    if ak != X * cofactor or bk != Y * cofactor:
        raise InternalInvariantError("quasi-radial cofactor extraction failed")
    return SingularityClass(q, k, True, cofactor, True)


def classify_singularity_numeric(
    fol: FoliationData, q: tuple[complex, complex], tol: float = 1e-7
) -> SingularityClass:
    """Jet-pair criterion at a non-rational singular point, with tolerances."""
    ca = cp_clean(cp_translate(cp_from_mpoly(fol.A), q[0], q[1]))
    cb = cp_clean(cp_translate(cp_from_mpoly(fol.B), q[0], q[1]))
    if not ca and not cb:
        raise PolynomialError("vector field vanishes identically at the point")
    orders = [i + j for i, j in ca] + [i + j for i, j in cb]
    k = min(orders)
    if k == 0:
        raise PolynomialError("point is not singular (jet order 0)")
    ak = {e: c for e, c in ca.items() if e[0] + e[1] == k}
    bk = {e: c for e, c in cb.items() if e[0] + e[1] == k}
    crit: dict = {}
    for (i, j), c in ak.items():
        crit[(i, j + 1)] = crit.get((i, j + 1), 0j) + c
    for (i, j), c in bk.items():
        crit[(i + 1, j)] = crit.get((i + 1, j), 0j) - c
    scale = max(cp_norm(ak), cp_norm(bk))
    qr = cp_norm(crit) <= tol * scale
    return SingularityClass(q, k, qr, None, False)


# ---------------------------------------------------------------------------
# tangent-cone dichotomy at singular points
# ---------------------------------------------------------------------------


def line_multiplicity_in_cone(cone: MPoly, a1: Fraction, b1: Fraction) -> int:
    """Multiplicity of the line b1*x - a1*y in a homogeneous cone (exact)."""
    line = MPoly.constant(b1) * X - MPoly.constant(a1) * Y
    return divisibility_multiplicity(cone, line)


def tangent_cone_dichotomy(
    fol: FoliationData, q: AffinePoint, seed: int = 0, samples: int = 20
) -> CheckReport:
    """Line through center and singular point divides the polar's tangent cone
    exactly once for quasi-radial singularities, never otherwise."""
    report = CheckReport("qr-dichotomy", seed=seed, samples_requested=samples)
    cls = classify_singularity(fol, q)
    report.note(f"singular point {q}: {cls}")
    sampler = GenericSampler(seed)
    ja = jet_decompose(fol.A, ("x", "y"), (q.a, q.b))
    jb = jet_decompose(fol.B, ("x", "y"), (q.a, q.b))
    ak = ja.get(cls.first_jet_order, MPoly.zero())
    bk = jb.get(cls.first_jet_order, MPoly.zero())
    for i in range(samples):

        def admissible(pt):
            p = AffinePoint(*pt)
            if p == q:
                return False, "center equals the singular point"
            if isinstance(fol.polar(p), RadialProduct):
                return False, "polar degenerates"
            a1, b1 = p.a - q.a, p.b - q.b
            if not cls.quasi_radial:
                val = (
                    Fraction(b1) * ak.evaluate({v: (a1 if v == "x" else b1) for v in ak.variables})
                    - Fraction(a1) * bk.evaluate({v: (a1 if v == "x" else b1) for v in bk.variables})
                )
                if val == 0:
                    return False, "center on the measure-zero containment locus"
            else:
                line = MPoly.constant(b1) * X - MPoly.constant(a1) * Y
                if try_exact_div(cls.radial_cofactor, line) is not None:
                    return False, "line through p and q divides the radial cofactor"
            return True, ""

        try:
            pt = sampler.sample_until(admissible, "center")
        except DegenerateSampleError as e:
            report.add(f"sample {i}", False, str(e))
            continue
        p = AffinePoint(*pt)
        curve = fol.polar(p)
        jets = jet_decompose(curve.raw, ("x", "y"), (q.a, q.b))
        order = min(jets)
        cone = jets[order]
        if order != cls.first_jet_order:
            report.note(f"cone at order {order} (deeper than the first jet order {cls.first_jet_order})")
        mult = line_multiplicity_in_cone(cone, p.a - q.a, p.b - q.b)
        expected = 1 if cls.quasi_radial else 0
        report.add(
            f"line-pq multiplicity at p={p}",
            mult == expected,
            f"multiplicity {mult}, expected {expected}",
        )
    report.samples_used = samples
    report.discards = list(sampler.discards.entries)
    return report


def tangent_cone_dichotomy_numeric(
    fol: FoliationData, q: tuple[complex, complex], seed: int = 0, samples: int = 20
) -> CheckReport:
    """Dichotomy at a non-rational singular point: cone-root counting with
    clustering replaces exact line division."""
    report = CheckReport("qr-dichotomy-numeric", seed=seed, samples_requested=samples)
    cls = classify_singularity_numeric(fol, q)
    report.note(f"singular point ({q[0]:.6g}, {q[1]:.6g}): {cls}")
    sampler = GenericSampler(seed)
    for _ in range(samples):
        p = AffinePoint(*sampler.point())
        curve = fol.polar(p)
        if isinstance(curve, RadialProduct):
            sampler.discards.add(str(p), "polar degenerates")
            continue
        cp = cp_clean(cp_translate(cp_from_mpoly(curve.raw), q[0], q[1]))
        order = min(i + j for i, j in cp)
        cone = {e: c for e, c in cp.items() if e[0] + e[1] == order}
        u = [0j] * (order + 1)
        for (i, j), c in cone.items():
            u[j] = c
        slope = (complex(p.b) - q[1]) / (complex(p.a) - q[0])
        top = next((j for j in range(order, -1, -1) if abs(u[j]) > 0), 0)
        mult = 0
        if top > 0:
            roots = univariate_roots(u[: top + 1])
            scale = 1.0 + max(abs(r) for r in roots) + abs(slope)
            mult = sum(1 for r in roots if abs(r - slope) < 1e-6 * scale)
        expected = 1 if cls.quasi_radial else 0
        report.add(
            f"line-pq multiplicity at p={p}",
            mult == expected,
            f"multiplicity {mult}, expected {expected} (cone order {order})",
            exact=False,
        )
    report.samples_used = len(report.assertions)
    report.discards = list(sampler.discards.entries)
    report.certify("cone_root_match_tolerance", 1e-6)
    return report


# ---------------------------------------------------------------------------
# inflexion points
# ---------------------------------------------------------------------------


def is_inflexion_point(curve: PlaneCurve, p: AffinePoint) -> bool:
    """Hessian quadratic form of the defining polynomial, evaluated on the
    tangent direction; p must be a smooth point of the curve."""
    F = curve.defining
    point = p.as_dict()
    fx = F.derivative("x").evaluate(point)
    fy = F.derivative("y").evaluate(point)
    if F.evaluate(point) != 0:
        raise PolynomialError(f"{p} is not on the curve")
    if fx == 0 and fy == 0:
        raise PolynomialError(f"{p} is a singular point of the curve")
    fxx = F.derivative("x").derivative("x").evaluate(point)
    fxy = F.derivative("x").derivative("y").evaluate(point)
    fyy = F.derivative("y").derivative("y").evaluate(point)
    u, v = -fy, fx
    return fxx * u * u + 2 * fxy * u * v + fyy * v * v == 0


def _is_inflexion_numeric(curve: PlaneCurve, pt: dict[str, complex], tol: float = 1e-9) -> bool:
    F = curve.defining
    fx = F.derivative("x").evaluate_complex(pt)
    fy = F.derivative("y").evaluate_complex(pt)
    fxx = F.derivative("x").derivative("x").evaluate_complex(pt)
    fxy = F.derivative("x").derivative("y").evaluate_complex(pt)
    fyy = F.derivative("y").derivative("y").evaluate_complex(pt)
    u, v = -fy, fx
    val = fxx * u * u + 2 * fxy * u * v + fyy * v * v
    scale = max(abs(fxx), abs(fxy), abs(fyy), 1e-30) * max(abs(u), abs(v)) ** 2
    return abs(val) <= tol * max(scale, 1e-30)


def _rational_points_on_curve(
    e: PlaneCurve, reject, sampler: GenericSampler, want: int, tries: int = 50
) -> list[AffinePoint]:
    """Rational points on a curve found by intersecting with random rational
    lines y = m x + c and keeping rational intersection abscissae."""
    found: list[AffinePoint] = []
    for _ in range(tries):
        if len(found) >= want:
            break
        m, c = sampler.fraction(), sampler.fraction()
        sub = {}
        if "y" in e.defining.variables:
            sub["y"] = MPoly.constant(m) * X + MPoly.constant(c)
        restricted = e.defining.substitute(sub) if sub else e.defining
        if restricted.is_zero() or restricted.degree_in("x") == 0:
            continue
        try:
            rat, _ = univariate_root_split(restricted, "x")
        except NumericAbortError:
            continue  # wildly scaled line; try another
        for x0, _mult in rat:
            p = AffinePoint(x0, m * x0 + c)
            if reject(p):
                continue
            if p not in found:
                found.append(p)
            if len(found) >= want:
                break
    return found


def inflexion_lemma_check(
    fol: FoliationData, seed: int = 0, on_curve: int = 5, off_curve: int = 15
) -> CheckReport:
    """p is an inflexion point of its own polar iff p lies on the inflexion
    divisor; both directions witnessed by stratified sampling."""
    report = CheckReport("inflexion-lemma", seed=seed, samples_requested=on_curve + off_curve)
    e = inflexion_divisor(fol)
    if e is None:
        report.add("inflexion divisor", True, "identically zero (all leaves lines); check skipped")
        return report
    sampler = GenericSampler(seed)
    sing = singular_set(fol.as_web, seed)

    def regular(p: AffinePoint) -> bool:
        return not (fol.A.evaluate(p.as_dict()) == 0 and fol.B.evaluate(p.as_dict()) == 0)

    used = 0
    if e.is_empty:
        report.note("inflexion divisor is a nonzero constant: no on-divisor points exist")
    else:
        on_points = _rational_points_on_curve(
            e, lambda p: not regular(p) or isinstance(fol.polar(p), RadialProduct), sampler, on_curve
        )
        for p in on_points:
            curve = fol.polar(p)
            got = is_inflexion_point(curve, p)
            report.add(
                f"p on E(F): inflexion at p={p}",
                got,
                "polar inflects at its center",
            )
            used += 1
        if len(on_points) < on_curve:
            # numeric fallback: intersect with lines and keep complex roots
            needed = on_curve - len(on_points)
            added = 0
            for _ in range(50):
                if added >= needed:
                    break
                m, c = sampler.fraction(), sampler.fraction()
                sub = {}
                if "y" in e.defining.variables:
                    sub["y"] = MPoly.constant(m) * X + MPoly.constant(c)
                restricted = e.defining.substitute(sub) if sub else e.defining
                if restricted.is_zero() or restricted.degree_in("x") == 0:
                    continue
                try:
                    _, num = univariate_root_split(restricted, "x")
                except NumericAbortError:
                    continue
                for z, _mult in num:
                    zp = (z, complex(m) * z + complex(c))
                    if sing.contains_numeric(zp):
                        continue
                    got = _numeric_center_inflexion(fol, zp)
                    report.add(
                        f"p on E(F) (numeric): inflexion at p≈({zp[0]:.5g},{zp[1]:.5g})",
                        got,
                        "numeric Hessian on tangent direction",
                        exact=False,
                    )
                    added += 1
                    used += 1
                    if added >= needed:
                        break
            if added < needed:
                report.add("on-divisor sampling", False, f"found {len(on_points)}+{added} of {on_curve}")
    off_found = 0
    for _ in range(50 * off_curve):
        if off_found >= off_curve:
            break
        p = AffinePoint(*sampler.point())
        if not regular(p):
            sampler.discards.add(str(p), "singular point of the foliation")
            continue
        if not e.is_empty and e.defining.evaluate(p.as_dict()) == 0:
            sampler.discards.add(str(p), "accidentally on the inflexion divisor")
            continue
        curve = fol.polar(p)
        if isinstance(curve, RadialProduct):
            sampler.discards.add(str(p), "polar degenerates")
            continue
        got = is_inflexion_point(curve, p)
        report.add(
            f"p off E(F): no inflexion at p={p}",
            not got,
            "polar does not inflect at its center",
        )
        off_found += 1
        used += 1
    report.samples_used = used
    report.discards = list(sampler.discards.entries)
    return report


def _numeric_center_inflexion(fol: FoliationData, zp: tuple[complex, complex], tol: float = 1e-8) -> bool:
    """Inflexion test of P_p at p for a numeric center p."""
    A, B = fol.A, fol.B
    pt = {"x": zp[0], "y": zp[1]}

    def dpolar(fdx: int, fdy: int) -> complex:
        # partials of F = A*(y-b) - B*(x-a) at the center: the (y-b) and (x-a)
        # factors vanish there, leaving the Leibniz cross terms only
        def d(f, i, j):
            g = f
            for _ in range(i):
                g = g.derivative("x")
            for _ in range(j):
                g = g.derivative("y")
            return g.evaluate_complex(pt)

        total = 0j
        if fdy >= 1:
            total += fdy * d(A, fdx, fdy - 1)
        if fdx >= 1:
            total -= fdx * d(B, fdx - 1, fdy)
        return total

    fx = dpolar(1, 0)
    fy = dpolar(0, 1)
    fxx = dpolar(2, 0)
    fxy = dpolar(1, 1)
    fyy = dpolar(0, 2)
    u, v = -fy, fx
    val = fxx * u * u + 2 * fxy * u * v + fyy * v * v
    scale = max(abs(fxx), abs(fxy), abs(fyy), 1e-30) * max(abs(u), abs(v), 1e-30) ** 2
    return abs(val) <= tol * max(scale, 1e-30)


# ---------------------------------------------------------------------------
# class of a curve (degree of the dual)
# ---------------------------------------------------------------------------


def class_of_curve(curve: PlaneCurve, seed: int = 0) -> int:
    """Number of tangent lines to the curve through a generic point.

    Computed as n(n-1) minus the local intersection numbers of the curve with
    its first polar at the singular points; verified against two independent
    auxiliary points."""
    from .solve import common_zeros

    if curve.raw != curve.defining:
        raise PolynomialError("class_of_curve needs a reduced curve")
    F0 = curve.defining
    n = F0.total_degree()
    if n < 2:
        raise PolynomialError("class of a line (degree < 2) is not defined here")
    rng = random.Random(seed)
    F = _chart_without_infinite_singularities(F0, rng)
    fx, fy = F.derivative("x"), F.derivative("y")
    gens = [g for g in (F, fx, fy) if not g.is_zero()]
    sing = common_zeros(gens, rng=rng) if not (fx.is_zero() and fy.is_zero()) else None
    values = []
    for _ in range(2):
        values.append(_class_once(F, n, sing, rng))
    if values[0] != values[1]:
        # one more draw decides
        values.append(_class_once(F, n, sing, rng))
        if values[1] == values[2] or values[0] == values[2]:
            return values[2]
        raise NumericAbortError(f"class_of_curve: auxiliary points disagree: {values}")
    return values[0]


def _chart_without_infinite_singularities(F: MPoly, rng: random.Random) -> MPoly:
    """Projective coordinate change keeping the curve's singular points affine."""
    H = homogenize(F)
    Z = MPoly.variable("z")
    for attempt in range(50):
        if attempt == 0:
            H2 = H
        else:
            c1, c2 = rng.randint(-9, 9), rng.randint(-9, 9)
            H2 = H.substitute({"z": Z + MPoly.constant(c1) * X + MPoly.constant(c2) * Y})
        restricted = [
            (g.substitute({"z": MPoly.zero()}) if "z" in g.variables else g)
            for g in (H2.derivative("x"), H2.derivative("y"), H2.derivative("z"))
        ]
        restricted = [g for g in restricted if not g.is_zero()]
        if not restricted:
            continue
        g = restricted[0]
        for h in restricted[1:]:
            if g.is_constant():
                break
            g = poly_gcd(g, h)
        if g.is_constant():
            Fa = H2.substitute({"z": MPoly.constant(1)}) if "z" in H2.variables else H2
            if Fa.total_degree() == F.total_degree():
                return Fa.canonical()
    raise DegenerateSampleError("could not move all singular points into the affine chart")


def _class_once(F: MPoly, n: int, sing, rng: random.Random) -> int:
    H = homogenize(F)
    for _ in range(50):
        z1 = Fraction(rng.randint(-60, 60), rng.randint(1, 20))
        z2 = Fraction(rng.randint(-60, 60), rng.randint(1, 20))
        G = (
            MPoly.constant(z1) * H.derivative("x")
            + MPoly.constant(z2) * H.derivative("y")
            + H.derivative("z")
        )
        G = G.substitute({"z": MPoly.constant(1)}) if "z" in G.variables else G
        if G.is_zero() or poly_gcd(F, G).total_degree() > 0:
            continue
        lam = _common_shear(F, G, rng)
        if lam is None:
            continue
        Fs = F.substitute({"x": X + MPoly.constant(lam) * Y}) if "x" in F.variables else F
        Gs = G.substitute({"x": X + MPoly.constant(lam) * Y}) if "x" in G.variables else G
        R = resultant(Fs, Gs, "y")
        if R.is_zero() or R.degree_in("x") != n * (n - 1):
            continue
        local_sum = 0
        ok = True
        if sing is not None:
            rational_x = []
            for q in sing.rational:
                germ_f = _translate(F, q)
                germ_g = _translate(G, q)
                local_sum += intersection_multiplicity(germ_f, germ_g)
                rational_x.append(complex(q[0] - lam * q[1]))
            if sing.numeric:
                rat_roots, num_roots = univariate_root_split(R, "x")
                all_roots = [(complex(r), m) for r, m in rat_roots] + num_roots
                spread = 1.0 + max(abs(r) for r, _ in all_roots)
                for q in sing.numeric:
                    xq = q[0] - lam * q[1]
                    if any(abs(xq - rx) < 1e-6 * spread for rx in rational_x):
                        ok = False  # shear failed to separate singular columns
                        break
                    cluster = [m for r, m in all_roots if abs(r - xq) < 1e-7 * spread]
                    local_sum += sum(cluster)
        if not ok:
            continue
        return n * (n - 1) - local_sum
    raise DegenerateSampleError("class_of_curve: no admissible auxiliary point/shear")


def _common_shear(F: MPoly, G: MPoly, rng: random.Random) -> int | None:
    def top_value(h: MPoly, lam: int) -> Fraction:
        d = h.total_degree()
        tops = {e: c for e, c in h.terms.items() if sum(e) == d}
        top = MPoly(h.variables, tops)
        return top.evaluate({v: (lam if v == "x" else 1) for v in top.variables})

    for lam in [0, 1, -1, 2, -2, 3, -3] + [rng.randint(-30, 30) for _ in range(20)]:
        if top_value(F, lam) != 0 and top_value(G, lam) != 0:
            return lam
    return None


def _translate(f: MPoly, q: tuple[Fraction, Fraction]) -> MPoly:
    subs = {
        v: MPoly.variable(v) + MPoly.constant(c)
        for v, c in zip(("x", "y"), q)
        if v in f.variables and c != 0
    }
    return f.substitute(subs) if subs else f


# ---------------------------------------------------------------------------
# quasi-radial count bound
# ---------------------------------------------------------------------------


def count_quasi_radial(fol: FoliationData, seed: int = 0) -> tuple[int, list[str], bool]:
    """(#quasi-radial singular points, descriptions, all-exact flag)."""
    sing = singular_set(fol.as_web, seed)
    count = 0
    descriptions = []
    exact = True
    for q in sing.points:
        cls = classify_singularity(fol, q)
        if cls.quasi_radial:
            count += 1
        descriptions.append(f"{q}: {cls}")
    for q in sing.numeric_points:
        cls = classify_singularity_numeric(fol, q)
        exact = False
        if cls.quasi_radial:
            count += 1
        descriptions.append(f"({q[0]:.5g},{q[1]:.5g}): {cls}")
    return count, descriptions, exact


def quasi_radial_bound_check(fol: FoliationData, seed: int = 0, samples: int = 5) -> CheckReport:
    """#Sing_QR <= class(P_p) - 1 for generic centers."""
    report = CheckReport("qr-bound", seed=seed, samples_requested=samples)
    e = inflexion_divisor(fol)
    if e is None:
        report.add("inflexion divisor", True, "identically zero; bound check skipped (degenerate)")
        return report
    qr, descriptions, exact = count_quasi_radial(fol, seed)
    for d in descriptions:
        report.note(d)
    sampler = GenericSampler(seed)
    done = 0
    attempts = 0
    while done < samples and attempts < 50 * samples:
        attempts += 1
        p = AffinePoint(*sampler.point())
        curve = fol.polar(p)
        if isinstance(curve, RadialProduct):
            sampler.discards.add(str(p), "polar degenerates")
            continue
        if curve.raw != curve.defining:
            sampler.discards.add(str(p), "polar not reduced")
            continue
        try:
            cls = class_of_curve(curve, seed + done)
        except (DegenerateSampleError, NumericAbortError) as exc:
            sampler.discards.add(str(p), f"class computation failed: {exc}")
            continue
        report.add(
            f"#Sing_QR <= class(P_p) - 1 at p={p}",
            qr <= cls - 1,
            f"#QR = {qr}, class = {cls}",
            exact=exact,
        )
        done += 1
    if done < samples:
        report.add("sampling", False, f"only {done} of {samples} classes computed")
    report.samples_used = done
    report.discards = list(sampler.discards.entries)
    return report
