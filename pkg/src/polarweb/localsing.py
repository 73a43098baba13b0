"""Local invariants of plane curve germs.

A germ is a curve equation translated so the point of interest is the origin.
Germs at rational points stay exact; germs at irrational points (and germs
whose resolution passes through irrational infinitely-near points) continue
with complex floating-point coefficients, normalized and cleaned at every
step.  All the integer invariants (multiplicity sequence, branch count, delta)
come out of the same blow-up recursion in both modes, so fingerprints are
comparable across modes.

Resolution convention: blow up until every strict transform is smooth,
meets at most one exceptional component, and is transverse to it.  This gives
the cusp the sequence [2, 1, 1] rather than [2]; fingerprints rely on the
convention being fixed.
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
)
from .mpoly import MPoly, exact_div, lowest_jet, poly_gcd, resultant, squarefree_part
from .numerics import cluster_points, univariate_roots
from .reports import CheckReport
from .sampling import GenericSampler
from .solve import common_zeros, univariate_root_split
from .webmodel import AffinePoint, Direction, PlaneCurve, binary_form_factors

X = MPoly.variable("x")
Y = MPoly.variable("y")

CLEAN_TOL = 1e-8
CLUSTER_TOL = 1e-5
MAX_BLOWUPS = 50

CPoly = dict  # {(i, j): complex}


# ---------------------------------------------------------------------------
# numeric bivariate polynomials
# ---------------------------------------------------------------------------


def _binomials(n: int) -> list[list[int]]:
    rows = [[1]]
    for i in range(1, n + 1):
        prev = rows[-1]
        rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, i)] + [1])
    return rows


def cp_from_mpoly(f: MPoly) -> CPoly:
    out: CPoly = {}
    ix = f.variables.index("x") if "x" in f.variables else None
    iy = f.variables.index("y") if "y" in f.variables else None
    for e, c in f.terms.items():
        i = e[ix] if ix is not None else 0
        j = e[iy] if iy is not None else 0
        out[(i, j)] = out.get((i, j), 0j) + complex(c)
    return out


def cp_norm(cp: CPoly) -> float:
    return max((abs(c) for c in cp.values()), default=0.0)


def cp_clean(cp: CPoly, tol: float | None = None) -> CPoly:
    if tol is None:
        tol = CLEAN_TOL
    norm = cp_norm(cp)
    if norm == 0.0:
        return {}
    cut = tol * norm
    return {e: c / norm for e, c in cp.items() if abs(c) > cut}


def cp_translate(cp: CPoly, zx: complex, zy: complex) -> CPoly:
    degx = max((i for i, _ in cp), default=0)
    degy = max((j for _, j in cp), default=0)
    binom = _binomials(max(degx, degy))
    out: CPoly = {}
    for (i, j), c in cp.items():
        for a in range(i + 1):
            xa = binom[i][a] * (zx ** (i - a)) if i - a else binom[i][a]
            for b in range(j + 1):
                yb = binom[j][b] * (zy ** (j - b)) if j - b else binom[j][b]
                out[(a, b)] = out.get((a, b), 0j) + c * xa * yb
    return {e: c for e, c in out.items() if c != 0}


def cp_order(cp: CPoly) -> int:
    if not cp:
        raise NumericAbortError("numeric germ vanished entirely")
    return min(i + j for i, j in cp)


def cp_blowup1(cp: CPoly, m: int) -> CPoly:
    """f(x, x*y) / x^m in the chart where the exceptional line is {x = 0}."""
    out: CPoly = {}
    for (i, j), c in cp.items():
        out[(i + j - m, j)] = out.get((i + j - m, j), 0j) + c
    if any(i < 0 for i, _ in out):
        raise InternalInvariantError("blow-up division by wrong multiplicity")
    return out


def cp_blowup2(cp: CPoly, m: int) -> CPoly:
    """f(x*y, y) / y^m in the chart where the exceptional line is {y = 0}."""
    out: CPoly = {}
    for (i, j), c in cp.items():
        out[(i, i + j - m)] = out.get((i, i + j - m), 0j) + c
    if any(j < 0 for _, j in out):
        raise InternalInvariantError("blow-up division by wrong multiplicity")
    return out


# ---------------------------------------------------------------------------
# germs
# ---------------------------------------------------------------------------


@dataclass
class CurveGerm:
    """A reduced plane curve germ at the origin (exact or numeric)."""

    poly: MPoly | None
    cpoly: CPoly | None
    exact: bool

    @staticmethod
    def at_point(curve: MPoly, point: tuple[Fraction, Fraction]) -> "CurveGerm":
        subs = {
            v: MPoly.variable(v) + MPoly.constant(c)
            for v, c in zip(("x", "y"), point)
            if v in curve.variables and c != 0
        }
        g = curve.substitute(subs) if subs else curve
        if g.evaluate({v: 0 for v in g.variables}) != 0:
            raise PolynomialError(f"curve does not pass through {point}")
        reduced = squarefree_part(g)
        return CurveGerm(reduced, None, True)

    @staticmethod
    def at_numeric_point(curve: MPoly, point: tuple[complex, complex]) -> "CurveGerm":
        cp = cp_clean(cp_translate(cp_from_mpoly(curve), point[0], point[1]))
        if not cp or cp_order(cp) == 0:
            raise PolynomialError("curve does not pass through the numeric point (residual constant term)")
        return CurveGerm(None, cp, False)

    def multiplicity(self) -> int:
        if self.exact:
            m, _ = lowest_jet(self.poly, ("x", "y"))
            return m
        return cp_order(self.cpoly)


def local_multiplicity(germ: CurveGerm) -> int:
    """Order of the lowest nonzero jet."""
    return germ.multiplicity()


# ---------------------------------------------------------------------------
# intersection multiplicity and Milnor number (exact route)
# ---------------------------------------------------------------------------

_SHEAR_CANDIDATES = [0, 1, -1, 2, -2, 3, -3, 5, -5, 7, -7, 11, -11, 13]


def intersection_multiplicity(f: MPoly, g: MPoly) -> int:
    """Local intersection number of two germs at the origin.

    Shear to make both y-proper, then the order at x = 0 of Res_y, guarded by
    the requirement that the origin is the only common zero on the line x = 0.
    """
    fv = f.evaluate({v: 0 for v in f.variables})
    gv = g.evaluate({v: 0 for v in g.variables})
    if fv != 0 or gv != 0:
        return 0
    if f.is_zero() or g.is_zero():
        raise PolynomialError("intersection multiplicity with the zero germ")
    common = poly_gcd(f, g)
    if not common.is_constant() and common.evaluate({v: 0 for v in common.variables}) == 0:
        raise PolynomialError("infinite intersection: germs share a component through the origin")

    def top_ok(h: MPoly, lam: int) -> bool:
        d = h.total_degree()
        jets = {}
        for e, c in h.terms.items():
            jets.setdefault(sum(e), []).append((e, c))
        top = MPoly(h.variables, dict(jets[d]))
        return top.evaluate({v: (lam if v == "x" else 1) for v in top.variables}) != 0

    for lam in _SHEAR_CANDIDATES:
        # (x, y) -> (x + lam*y, y) keeps the origin and makes both y-proper
        fs = f.substitute({"x": X + MPoly.constant(lam) * Y}) if "x" in f.variables else f
        gs = g.substitute({"x": X + MPoly.constant(lam) * Y}) if "x" in g.variables else g
        if not (top_ok(f, lam) and top_ok(g, lam)):
            continue
        f0 = fs.substitute({"x": MPoly.zero()}) if "x" in fs.variables else fs
        g0 = gs.substitute({"x": MPoly.zero()}) if "x" in gs.variables else gs
        if f0.is_zero() or g0.is_zero():
            continue
        u = poly_gcd(f0, g0)
        if len(u.terms) != 1:
            continue  # another common zero sits on x = 0; shear again
        r = resultant(fs, gs, "y")
        if r.is_zero():
            raise InternalInvariantError("resultant vanished for coprime germs")
        ix = r.variables.index("x") if "x" in r.variables else None
        if ix is None:
            return 0
        return min(e[ix] for e in r.terms)
    raise DegenerateSampleError("no admissible shear for intersection multiplicity")


def milnor_number(germ: CurveGerm) -> int:
    """mu = I(f_x, f_y) at the origin; requires an isolated singularity."""
    if not germ.exact:
        raise PolynomialError("exact Milnor number needs a rational base point")
    f = germ.poly
    fx, fy = f.derivative("x"), f.derivative("y")
    if fx.is_zero() and fy.is_zero():
        raise PolynomialError("zero gradient: germ is not reduced")
    if _nonzero_at_origin(fx) or _nonzero_at_origin(fy):
        return 0
    if fx.is_zero() or fy.is_zero():
        raise PolynomialError("non-isolated singularity (a partial derivative vanishes)")
    g = poly_gcd(fx, fy)
    if not g.is_constant() and not _nonzero_at_origin(g):
        raise PolynomialError("non-isolated singularity at the origin")
    return intersection_multiplicity(fx, fy)


def _nonzero_at_origin(f: MPoly) -> bool:
    return f.evaluate({v: 0 for v in f.variables}) != 0


# ---------------------------------------------------------------------------
# blow-ups and resolution
# ---------------------------------------------------------------------------


@dataclass
class BlowUpPoint:
    direction: Direction
    germ: CurveGerm
    on_old_exceptional: bool


def blow_up_germ(germ: CurveGerm) -> list[BlowUpPoint]:
    """One blow-up: the points of the exceptional line met by the strict
    transform, each with the translated strict-transform germ."""
    m = germ.multiplicity()
    out = []
    for direction, _mult, child in _children(germ, m):
        out.append(BlowUpPoint(direction, child, False))
    return out


def _children(germ: CurveGerm, m: int):
    """Directions in the tangent cone and the strict-transform germs there."""
    if germ.exact:
        _, init = lowest_jet(germ.poly, ("x", "y"))
        chart1 = exact_div(
            germ.poly.substitute({"y": X * Y}) if "y" in germ.poly.variables else germ.poly,
            X**m,
        )
        for direction, mult in sorted(
            binary_form_factors(init), key=_direction_sort_key
        ):
            if direction.is_exact and direction.u != 0:
                c = direction.v
                shifted = (
                    chart1.substitute({"y": Y + MPoly.constant(c)})
                    if c != 0 and "y" in chart1.variables
                    else chart1
                )
                yield direction, mult, CurveGerm(shifted, None, True)
            elif direction.is_exact:
                chart2 = exact_div(
                    germ.poly.substitute({"x": X * Y}) if "x" in germ.poly.variables else germ.poly,
                    Y**m,
                )
                yield direction, mult, CurveGerm(chart2, None, True)
            else:
                z = _slope(direction)
                cp = cp_clean(cp_translate(cp_from_mpoly(chart1), 0j, z))
                yield direction, mult, CurveGerm(None, cp, False)
    else:
        cp = germ.cpoly
        init = {e: c for e, c in cp.items() if e[0] + e[1] == m}
        # univariate u(t) = init(1, t); the direction (0:1) shows up as degree drop
        u = [0j] * (m + 1)
        for (i, j), c in init.items():
            u[j] = c
        top = next((j for j in range(m, -1, -1) if abs(u[j]) > 0), None)
        if top is not None and top < m:
            chart2 = cp_clean(cp_blowup2(cp, m))
            yield Direction.exact(0, 1), m - top, CurveGerm(None, chart2, False)
        if top is not None and top > 0:
            roots = univariate_roots(u[: top + 1])
            scale = 1.0 + max(abs(r) for r in roots)
            chart1 = cp_blowup1(cp, m)
            for center, count in sorted(
                cluster_points(roots, CLUSTER_TOL * scale), key=lambda t: (t[0].real, t[0].imag)
            ):
                shifted = cp_clean(cp_translate(chart1, 0j, center))
                yield Direction.numeric(1.0 + 0j, center), count, CurveGerm(None, shifted, False)


def _slope(d: Direction) -> complex:
    u, v = d.approx
    return v / u


def _direction_sort_key(item):
    d, _ = item
    if d.is_exact:
        return (0, float(d.u), float(d.v))
    u, v = d.approx
    return (1, (v / u).real if u != 0 else float("inf"), (v / u).imag if u != 0 else 0.0)


@dataclass
class Resolution:
    mult_sequence: list[int]
    branches: int
    exact_mode: bool
    tangent_pattern: tuple[int, ...]


def resolve_germ(germ: CurveGerm) -> Resolution:
    """Full embedded resolution bookkeeping: multiplicities of the strict
    transforms at all infinitely-near points, and the leaf (branch) count."""
    m0 = germ.multiplicity()
    if germ.exact:
        _, init = lowest_jet(germ.poly, ("x", "y"))
        pattern = tuple(sorted(mult for _, mult in binary_form_factors(init)))
    else:
        pattern = _numeric_tangent_pattern(germ.cpoly, m0)
    seq: list[int] = []
    leaves = 0
    all_exact = True

    def recurse(g: CurveGerm, has_x: bool, has_y: bool, depth: int):
        nonlocal leaves, all_exact
        if depth > MAX_BLOWUPS:
            raise PolynomialError(
                "resolution exceeded the blow-up cap (is the germ reduced?)"
            )
        all_exact = all_exact and g.exact
        m = g.multiplicity()
        if m == 0:
            raise InternalInvariantError("strict transform does not vanish at its point")
        if m == 1 and _is_terminal(g, has_x, has_y):
            leaves += 1
            return
        seq.append(m)
        for direction, _mult, child in _children(g, m):
            if direction.is_exact and direction.u != 0:
                new_has_x, new_has_y = True, (direction.v == 0 and has_y)
            elif direction.is_exact:
                new_has_x, new_has_y = has_x, True
            else:
                new_has_x, new_has_y = True, (abs(_slope(direction)) < 1e-9 and has_y)
            recurse(child, new_has_x, new_has_y, depth + 1)

    recurse(germ, False, False, 0)
    return Resolution(seq, leaves, all_exact, pattern)


def _is_terminal(g: CurveGerm, has_x: bool, has_y: bool) -> bool:
    """Smooth, through at most one exceptional component, and transverse to it."""
    if has_x and has_y:
        return False
    if g.exact:
        _, init = lowest_jet(g.poly, ("x", "y"))
        alpha = init.coeffs_in("x")[1].constant_value() if init.degree_in("x") == 1 else Fraction(0)
        beta = init.coeffs_in("y")[1].constant_value() if init.degree_in("y") == 1 else Fraction(0)
        tangent_is_vertical = beta == 0  # tangent line x = 0
        tangent_is_horizontal = alpha == 0
    else:
        init = {e: c for e, c in g.cpoly.items() if e[0] + e[1] == 1}
        alpha = init.get((1, 0), 0j)
        beta = init.get((0, 1), 0j)
        norm = max(abs(alpha), abs(beta))
        tangent_is_vertical = abs(beta) <= 1e-7 * norm
        tangent_is_horizontal = abs(alpha) <= 1e-7 * norm
    if has_x and tangent_is_vertical:
        return False
    if has_y and tangent_is_horizontal:
        return False
    return True


def _numeric_tangent_pattern(cp: CPoly, m: int) -> tuple[int, ...]:
    init = {e: c for e, c in cp.items() if e[0] + e[1] == m}
    u = [0j] * (m + 1)
    for (i, j), c in init.items():
        u[j] = c
    top = next((j for j in range(m, -1, -1) if abs(u[j]) > 0), None)
    pattern = []
    if top is not None and top < m:
        pattern.append(m - top)
    if top is not None and top > 0:
        roots = univariate_roots(u[: top + 1])
        scale = 1.0 + max(abs(r) for r in roots)
        pattern += [count for _, count in cluster_points(roots, CLUSTER_TOL * scale)]
    return tuple(sorted(pattern))


def multiplicity_sequence(germ: CurveGerm) -> list[int]:
    return resolve_germ(germ).mult_sequence


def branch_count(germ: CurveGerm) -> int:
    return resolve_germ(germ).branches


# ---------------------------------------------------------------------------
# fingerprints
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GermFingerprint:
    m: int
    mu: int
    r: int
    delta: int
    mult_sequence: tuple[int, ...]
    tangent_pattern: tuple[int, ...]
    exact: bool

    def key(self) -> tuple:
        return (self.m, self.mu, self.r, self.delta, self.mult_sequence, self.tangent_pattern)

    def __str__(self):
        return (
            f"(m={self.m}, mu={self.mu}, r={self.r}, delta={self.delta}, "
            f"seq={list(self.mult_sequence)}, cone={list(self.tangent_pattern)})"
        )


def fingerprint(germ: CurveGerm) -> GermFingerprint:
    """Equisingularity invariants of the germ.

    delta always comes from the multiplicity sequence; for exact germs mu is
    computed independently as I(f_x, f_y) and the Milnor relation
    mu = 2*delta - r + 1 is asserted, never assumed.
    """
    res = resolve_germ(germ)
    m = germ.multiplicity()
    delta_seq = sum(mi * (mi - 1) // 2 for mi in res.mult_sequence)
    r = res.branches
    if germ.exact:
        mu = milnor_number(germ)
        if (mu + r - 1) % 2 != 0:
            raise InternalInvariantError(f"mu + r - 1 odd: mu={mu}, r={r}")
        delta_mu = (mu + r - 1) // 2
        if delta_mu != delta_seq:
            raise InternalInvariantError(
                f"delta mismatch: (mu+r-1)/2 = {delta_mu} vs blow-up count {delta_seq}"
            )
    else:
        mu = 2 * delta_seq - r + 1
    if res.mult_sequence and res.mult_sequence[0] != m:
        raise InternalInvariantError("multiplicity sequence does not start at m")
    return GermFingerprint(
        m=m,
        mu=mu,
        r=r,
        delta=delta_seq,
        mult_sequence=tuple(res.mult_sequence),
        tangent_pattern=res.tangent_pattern,
        exact=res.exact_mode and germ.exact,
    )


# ---------------------------------------------------------------------------
# genus
# ---------------------------------------------------------------------------


def homogenize(f: MPoly, n: int | None = None) -> MPoly:
    """Degree-n homogenization with the variable z."""
    n = f.total_degree() if n is None else n
    z = MPoly.variable("z")
    total = MPoly.zero()
    for e, c in f.terms.items():
        mono = MPoly((f.variables), {e: c})
        total = total + mono * z ** (n - sum(e))
    return total


def _delta_sum_at_infinity(F: MPoly, rng: random.Random) -> int:
    """Sum of delta invariants of the projective curve along the line z = 0."""
    n = F.total_degree()
    H = homogenize(F, n)
    total = 0
    # chart y = 1: coordinates (x, z); points [x0 : 1 : 0]
    G = H.substitute({"y": MPoly.constant(1)}) if "y" in H.variables else H
    gens = [G, G.derivative("x"), G.derivative("z")]
    line = [g.substitute({"z": MPoly.zero()}) if "z" in g.variables else g for g in gens]
    line = [g for g in line if not g.is_zero()]
    candidates_r: list[Fraction] = []
    candidates_n: list[complex] = []
    if line and all(not g.is_constant() for g in line):
        elim = line[0]
        for g in line[1:]:
            elim = poly_gcd(elim, g)
            if elim.is_constant():
                break
        if not elim.is_constant():
            rat, num = univariate_root_split(elim, "x")
            candidates_r = [r for r, _ in rat]
            candidates_n = [z for z, _ in num]
    for x0 in candidates_r:
        if G.evaluate({"x": x0, "z": 0} | {v: 0 for v in G.variables if v not in ("x", "z")}) == 0:
            germ = CurveGerm.at_point(_rename_to_xy(G), (x0, Fraction(0)))
            total += fingerprint(germ).delta
    for x0 in candidates_n:
        germ = CurveGerm.at_numeric_point(_rename_to_xy(G), (x0, 0j))
        total += fingerprint(germ).delta
    # the point [1 : 0 : 0] lives in the chart x = 1
    K = H.substitute({"x": MPoly.constant(1)}) if "x" in H.variables else H
    K = _rename_yz_to_xy(K)
    origin = {v: 0 for v in K.variables}
    if (
        K.evaluate(origin) == 0
        and K.derivative("x").evaluate(origin) == 0
        and K.derivative("y").evaluate(origin) == 0
    ):
        germ = CurveGerm.at_point(K, (Fraction(0), Fraction(0)))
        total += fingerprint(germ).delta
    return total


def _rename_to_xy(g: MPoly) -> MPoly:
    """(x, z) -> (x, y) for germ machinery."""
    if "z" not in g.variables:
        return g
    return g.substitute({"z": Y})


def _rename_yz_to_xy(g: MPoly) -> MPoly:
    """(y, z) -> (x, y) for germ machinery (chart x = 1)."""
    out = g
    if "y" in out.variables:
        out = out.substitute({"y": MPoly.variable("u")})
    if "z" in out.variables:
        out = out.substitute({"z": MPoly.variable("v")})
    subs = {}
    if "u" in out.variables:
        subs["u"] = X
    if "v" in out.variables:
        subs["v"] = Y
    return out.substitute(subs) if subs else out


def genus_of_curve(curve: PlaneCurve, seed: int = 0, include_infinity: bool = True) -> int:
    """Geometric genus of a reduced irreducible plane curve:
    (n-1)(n-2)/2 minus the sum of local delta invariants."""
    from .polarops import curve_component_count

    if curve.raw != curve.defining:
        raise PolynomialError("genus_of_curve needs a reduced curve")
    F = curve.defining
    n = F.total_degree()
    if n <= 0:
        raise PolynomialError("genus of an empty curve")
    count, _ = curve_component_count(curve, seed)
    if count != 1:
        raise PolynomialError(f"genus_of_curve: curve has {count} components; not irreducible")
    rng = random.Random(seed)
    delta_total = 0
    fx, fy = F.derivative("x"), F.derivative("y")
    if not (fx.is_zero() and fy.is_zero()) and n >= 2:
        gens = [g for g in (F, fx, fy) if not g.is_zero()]
        zs = common_zeros(gens, rng=rng)
        for q in zs.rational:
            delta_total += fingerprint(CurveGerm.at_point(F, q)).delta
        for q in zs.numeric:
            delta_total += fingerprint(CurveGerm.at_numeric_point(F, q)).delta
    if include_infinity:
        delta_total += _delta_sum_at_infinity(F, rng)
    g = (n - 1) * (n - 2) // 2 - delta_total
    if g < 0:
        raise InternalInvariantError(f"negative genus {g}: delta sum {delta_total} too large")
    return g


# ---------------------------------------------------------------------------
# equisingularity of the polar family of a foliation
# ---------------------------------------------------------------------------


def equisingularity_check(fol, seed: int = 0, samples: int = 10) -> CheckReport:
    """Constancy of the embedded-topology fingerprints of the generic polar
    at each of its singular points, across seeded generic centers.

    `fol` is any object with an `as_web` SymWeb attribute (a foliation).
    """
    from .polarops import RadialProduct, polar_curve
    from .webmodel import singular_set

    web = fol.as_web if hasattr(fol, "as_web") else fol
    report = CheckReport("equisingularity", seed=seed, samples_requested=samples)
    report.note(
        "equisingularity proxy: (m, mu, r, delta, multiplicity sequence, tangent cone pattern)"
    )
    sing = singular_set(web, seed)
    if sing.is_empty():
        report.note("foliation has no affine singular points; polars are checked for smoothness")
    sampler = GenericSampler(seed)
    rng = random.Random(seed + 17)
    reference: list[tuple] | None = None
    ref_degree: int | None = None
    collected = 0
    attempts = 0
    while collected < samples and attempts < 50 * samples:
        attempts += 1
        p = AffinePoint(*sampler.point())
        curve = polar_curve(web, p)
        if isinstance(curve, RadialProduct):
            sampler.discards.add(str(p), "center of a radial factor")
            continue
        if sing.contains(p):
            sampler.discards.add(str(p), "center is singular on the foliation")
            continue
        F = curve.defining
        if curve.raw != curve.defining:
            sampler.discards.add(str(p), "polar not reduced")
            continue
        fx, fy = F.derivative("x"), F.derivative("y")
        try:
            zs = common_zeros([F, fx, fy], rng=rng)
        except Exception as e:
            sampler.discards.add(str(p), f"singular locus solve failed: {e}")
            continue
        entries = []
        ok = True
        for q in zs.rational:
            fp = fingerprint(CurveGerm.at_point(F, q))
            entries.append((("rat", str(q[0]), str(q[1])), fp.key()))
        for q in zs.numeric:
            try:
                fp = fingerprint(CurveGerm.at_numeric_point(F, q))
            except (NumericAbortError, PolynomialError) as e:
                sampler.discards.add(str(p), f"numeric germ failed: {e}")
                ok = False
                break
            entries.append((("num", round(q[0].real, 5), round(q[0].imag, 5),
                             round(q[1].real, 5), round(q[1].imag, 5)), fp.key()))
        if not ok:
            continue
        table = sorted(fp_key for _, fp_key in entries)
        if reference is None:
            reference = table
            ref_degree = curve.degree
            report.note(
                f"reference table at p={p}: "
                + ("; ".join(_fmt_fp(k) for k in table) if table else "no singular points")
            )
        exact_entry = not zs.numeric
        report.add(
            f"fingerprint table at p={p}",
            table == reference and curve.degree == ref_degree,
            f"{len(table)} singular point(s), degree {curve.degree}",
            exact=exact_entry,
        )
        collected += 1
    if collected < samples:
        report.add("sampling", False, f"only {collected} of {samples} admissible centers")
    report.samples_used = collected
    report.discards = list(sampler.discards.entries)
    if any(not a.exact for a in report.assertions):
        report.certify("germ_clean_tolerance", CLEAN_TOL)
        report.certify("cluster_tolerance", CLUSTER_TOL)
    return report


def _fmt_fp(key: tuple) -> str:
    m, mu, r, delta, seq, pattern = key
    return f"m={m},mu={mu},r={r},delta={delta},seq={list(seq)},cone={list(pattern)}"


def genus_constancy_check(fol, seed: int = 0, samples: int = 5) -> CheckReport:
    """Genus of the generic polar is the same for every generic center."""
    from .polarops import RadialProduct, polar_curve

    web = fol.as_web if hasattr(fol, "as_web") else fol
    report = CheckReport("genus-constancy", seed=seed, samples_requested=samples)
    sampler = GenericSampler(seed)
    genera = []
    collected = 0
    attempts = 0
    while collected < samples and attempts < 50 * samples:
        attempts += 1
        p = AffinePoint(*sampler.point())
        curve = polar_curve(web, p)
        if isinstance(curve, RadialProduct):
            sampler.discards.add(str(p), "center of a radial factor")
            continue
        if curve.raw != curve.defining:
            sampler.discards.add(str(p), "polar not reduced")
            continue
        try:
            g = genus_of_curve(curve, seed)
        except PolynomialError as e:
            sampler.discards.add(str(p), f"genus unavailable: {e}")
            continue
        genera.append((str(p), g))
        collected += 1
    values = {g for _, g in genera}
    report.add(
        "genus constant across centers",
        len(values) == 1 and collected == samples,
        f"genera: {genera}",
        exact=False,
    )
    report.samples_used = collected
    report.discards = list(sampler.discards.entries)
    report.certify("germ_clean_tolerance", CLEAN_TOL)
    report.certify("cluster_tolerance", CLUSTER_TOL)
    return report
