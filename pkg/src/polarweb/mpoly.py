"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial is a map from exponent vectors to nonzero Fraction coefficients,
together with a sorted tuple of variable names.  The representation is kept
canonical at all times: no zero coefficients are stored, and variables that do
not occur in any term are dropped, so two MPoly values are equal exactly when
they represent the same polynomial.

Term order everywhere is graded lexicographic on the sorted variable names;
this fixes leading coefficients, canonical signs, and printing.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InternalInvariantError, PolynomialError

MAX_EXPONENT = 2**31

Rational = Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise PolynomialError(f"not an exact rational: {value!r}")


class MPoly:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, Fraction]):
        variables = tuple(variables)
        cleaned = {tuple(e): c for e, c in terms.items() if c != 0}
        for e in cleaned:
            if len(e) != len(variables):
                raise PolynomialError("exponent vector length mismatch")
            if any(k < 0 for k in e):
                raise PolynomialError("negative exponent")
            if any(k > MAX_EXPONENT for k in e):
                raise PolynomialError(f"exponent above cap {MAX_EXPONENT}")
        # drop unused variables, keep names sorted
        used = [i for i in range(len(variables)) if any(e[i] for e in cleaned)]
        names = [variables[i] for i in used]
        order = sorted(range(len(names)), key=lambda i: names[i])
        self.variables = tuple(names[i] for i in order)
        self.terms = {tuple(e[used[i]] for i in order): c for e, c in cleaned.items()}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "MPoly":
        return MPoly((), {})

    @staticmethod
    def constant(value) -> "MPoly":
        c = _as_fraction(value)
        return MPoly((), {(): c} if c else {})

    @staticmethod
    def variable(name: str) -> "MPoly":
        return MPoly((name,), {(1,): Fraction(1)})

    @staticmethod
    def monomial(coeff, powers: Mapping[str, int]) -> "MPoly":
        names = tuple(sorted(powers))
        exp = tuple(powers[n] for n in names)
        return MPoly(names, {exp: _as_fraction(coeff)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.variables

    def constant_value(self) -> Fraction:
        if self.variables:
            raise PolynomialError("not a constant polynomial")
        return self.terms.get((), Fraction(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        if var not in self.variables:
            return 0
        i = self.variables.index(var)
        return max((e[i] for e in self.terms), default=0)

    def leading_term(self) -> tuple[tuple, Fraction]:
        """Leading (exponent, coefficient) in graded-lex order."""
        if not self.terms:
            raise PolynomialError("zero polynomial has no leading term")
        e = max(self.terms, key=lambda t: (sum(t), t))
        return e, self.terms[e]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic --------------------------------------------------------

    def _aligned(self, other: "MPoly"):
        if self.variables == other.variables:
            return self.variables, self.terms, other.terms
        names = tuple(sorted(set(self.variables) | set(other.variables)))

        def rekey(poly: "MPoly"):
            pos = [names.index(v) for v in poly.variables]
            out = {}
            for e, c in poly.terms.items():
                full = [0] * len(names)
                for idx, p in enumerate(pos):
                    full[p] = e[idx]
                out[tuple(full)] = c
            return out

        return names, rekey(self), rekey(other)

    def __add__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        names, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MPoly(names, out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        return (-self) + other

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if c == 0:
                return MPoly.zero()
            return MPoly(self.variables, {e: c * v for e, v in self.terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        names, a, b = self._aligned(other)
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, Fraction(0)) + ca * cb
        return MPoly(names, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if not isinstance(n, int) or n < 0:
            raise PolynomialError(f"polynomial power must be a non-negative integer, got {n!r}")
        result = MPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- calculus and evaluation -------------------------------------------

    def derivative(self, var: str) -> "MPoly":
        if var not in self.variables:
            # a polynomial not involving var has derivative 0; constants too
            return MPoly.zero()
        i = self.variables.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            e2 = tuple(e2)
            out[e2] = out.get(e2, Fraction(0)) + c * e[i]
        return MPoly(self.variables, out)

    def substitute(self, assignments: Mapping[str, "MPoly | Fraction | int"]) -> "MPoly":
        """Simultaneous substitution; every assigned variable must occur."""
        for v in assignments:
            if v not in self.variables:
                raise PolynomialError(f"substitute: variable {v!r} does not occur")
        subs = {v: (p if isinstance(p, MPoly) else MPoly.constant(p)) for v, p in assignments.items()}
        idx = {v: self.variables.index(v) for v in subs}
        keep = [i for i, v in enumerate(self.variables) if v not in subs]
        powers: dict[str, list[MPoly]] = {v: [MPoly.constant(1)] for v in subs}

        def power(v: str, n: int) -> MPoly:
            cache = powers[v]
            while len(cache) <= n:
                cache.append(cache[-1] * subs[v])
            return cache[n]

        total = MPoly.zero()
        for e, c in self.terms.items():
            piece = MPoly((), {(): c}) if c else MPoly.zero()
            mono = {self.variables[i]: e[i] for i in keep if e[i]}
            if mono:
                piece = piece * MPoly.monomial(1, mono)
            for v, i in idx.items():
                if e[i]:
                    piece = piece * power(v, e[i])
            total = total + piece
        return total

    def evaluate(self, point: Mapping[str, "Fraction | int"]) -> Fraction:
        """Exact evaluation; the point must cover every variable."""
        vals = {}
        for v in self.variables:
            if v not in point:
                raise PolynomialError(f"evaluate: missing value for {v!r}")
            vals[v] = _as_fraction(point[v])
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for i, v in enumerate(self.variables):
                if e[i]:
                    t *= vals[v] ** e[i]
            total += t
        return total

    def evaluate_complex(self, point: Mapping[str, complex]) -> complex:
        total = 0j
        for e, c in self.terms.items():
            t = complex(c)
            for i, v in enumerate(self.variables):
                if e[i]:
                    t *= complex(point[v]) ** e[i]
            total += t
        return total

    # -- univariate views ---------------------------------------------------

    def coeffs_in(self, var: str) -> list["MPoly"]:
        """Coefficients by ascending power of var (length deg+1); [self] if absent."""
        if var not in self.variables:
            return [self]
        i = self.variables.index(var)
        deg = self.degree_in(var)
        buckets: list[dict] = [dict() for _ in range(deg + 1)]
        rest = tuple(v for j, v in enumerate(self.variables) if j != i)
        for e, c in self.terms.items():
            re = tuple(e[j] for j in range(len(e)) if j != i)
            buckets[e[i]][re] = c
        return [MPoly(rest, b) for b in buckets]

    @staticmethod
    def from_coeffs_in(var: str, coeffs: Iterable["MPoly"]) -> "MPoly":
        v = MPoly.variable(var)
        total = MPoly.zero()
        for k, c in enumerate(coeffs):
            if not c.is_zero():
                total = total + c * v**k
        return total

    def univariate_coeffs(self, var: str) -> list[Fraction]:
        """Fraction coefficients, ascending; requires no other variables."""
        others = set(self.variables) - {var}
        if others:
            raise PolynomialError(f"not univariate in {var!r}: also involves {sorted(others)}")
        return [c.constant_value() for c in self.coeffs_in(var)]

    # -- content, primitivity, canonical form -------------------------------

    def rational_content(self) -> Fraction:
        """Positive c with self/c integer-coefficient and coprime; 0 for 0."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def canonical(self) -> "MPoly":
        """Primitive integer-coefficient representative with positive leading
        coefficient in graded-lex order."""
        if not self.terms:
            return self
        c = self.rational_content()
        _, lead = self.leading_term()
        if lead < 0:
            c = -c
        return MPoly(self.variables, {e: v / c for e, v in self.terms.items()})

    # -- display -------------------------------------------------------------

    def __repr__(self):
        return f"MPoly({format_mpoly(self)})"

    def __str__(self):
        return format_mpoly(self)


def format_mpoly(f: MPoly) -> str:
    """Canonical text form, graded-lex descending; parseable back."""
    if f.is_zero():
        return "0"
    parts = []
    for e in sorted(f.terms, key=lambda t: (sum(t), t), reverse=True):
        c = f.terms[e]
        factors = []
        for name, k in zip(f.variables, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        mag = abs(c)
        coeff_txt = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        if factors and mag == 1:
            body = "*".join(factors)
        elif factors:
            body = coeff_txt + "*" + "*".join(factors)
        else:
            body = coeff_txt
        parts.append(("- " if c < 0 else "+ ") + body)
    out = " ".join(parts)
    return out[2:] if out.startswith("+ ") else ("-" + out[2:])


# ---------------------------------------------------------------------------
# division, gcd, square-free parts
# ---------------------------------------------------------------------------


def try_exact_div(f: MPoly, g: MPoly) -> MPoly | None:
    """Quotient f/g when g divides f exactly, else None."""
    if g.is_zero():
        raise PolynomialError("division by zero polynomial")
    if f.is_zero():
        return MPoly.zero()
    if g.is_constant():
        return f * (Fraction(1) / g.constant_value())
    names, a, b = f._aligned(g)
    rem = dict(a)
    ge = max(b, key=lambda t: (sum(t), t))
    gc = b[ge]
    q: dict = {}
    while rem:
        fe = max(rem, key=lambda t: (sum(t), t))
        fc = rem[fe]
        de = tuple(x - y for x, y in zip(fe, ge))
        if any(k < 0 for k in de):
            return None
        qc = fc / gc
        q[de] = q.get(de, Fraction(0)) + qc
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(de, eb))
            nc = rem.get(e, Fraction(0)) - qc * cb
            if nc:
                rem[e] = nc
            else:
                rem.pop(e, None)
    return MPoly(names, q)


def exact_div(f: MPoly, g: MPoly) -> MPoly:
    q = try_exact_div(f, g)
    if q is None:
        raise PolynomialError("exact division failed")
    return q


def divisibility_multiplicity(f: MPoly, g: MPoly, cap: int = 64) -> int:
    """Largest m with g^m | f (f nonzero)."""
    if f.is_zero():
        raise PolynomialError("multiplicity of factor in zero polynomial")
    m = 0
    while m < cap:
        q = try_exact_div(f, g)
        if q is None:
            return m
        f = q
        m += 1
    raise PolynomialError("divisibility multiplicity exceeded cap")


def _prem(a: MPoly, b: MPoly, var: str) -> MPoly:
    """Pseudo-remainder of a by b in var: lc(b)^(da-db+1) * a mod b."""
    db = b.degree_in(var)
    lcb = b.coeffs_in(var)[db]
    r = a
    e = a.degree_in(var) - db + 1
    while not r.is_zero() and r.degree_in(var) >= db:
        dr = r.degree_in(var)
        lcr = r.coeffs_in(var)[dr]
        shift = MPoly.variable(var) ** (dr - db)
        r = r * lcb - b * lcr * shift
        e -= 1
    if e > 0:
        r = r * lcb**e
    return r


def _content_in(f: MPoly, var: str) -> MPoly:
    coeffs = [c for c in f.coeffs_in(var) if not c.is_zero()]
    g = coeffs[0]
    for c in coeffs[1:]:
        if g.is_constant():
            break
        g = poly_gcd(g, c)
    return g.canonical() if not g.is_constant() else MPoly.constant(1)


def _univariate_gcd(f: MPoly, g: MPoly, var: str) -> MPoly:
    a = f.univariate_coeffs(var)
    b = g.univariate_coeffs(var)

    def strip(u):
        while u and u[-1] == 0:
            u.pop()
        return u

    a, b = strip(list(a)), strip(list(b))
    while b:
        if len(a) < len(b):
            a, b = b, a
            continue
        inv = Fraction(1) / b[-1]
        bb = [c * inv for c in b]
        r = list(a)
        while True:
            while r and r[-1] == 0:
                r.pop()
            if len(r) < len(bb):
                break
            q = r[-1]
            off = len(r) - len(bb)
            for i, c in enumerate(bb):
                r[off + i] -= q * c
            r.pop()
        a, b = b, r
    poly = MPoly.from_coeffs_in(var, [MPoly.constant(c) for c in a])
    return poly.canonical()


def poly_gcd(f: MPoly, g: MPoly) -> MPoly:
    """Primitive gcd with canonical sign; gcd(0,0) is an error."""
    if f.is_zero() and g.is_zero():
        raise PolynomialError("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.canonical()
    if g.is_zero():
        return f.canonical()
    if f.is_constant() or g.is_constant():
        return MPoly.constant(1)
    active = [v for v in f.variables if v in g.variables and f.degree_in(v) > 0 and g.degree_in(v) > 0]
    if not active:
        return MPoly.constant(1)
    var = min(active, key=lambda v: min(f.degree_in(v), g.degree_in(v)))
    if len(f.variables) == 1 and len(g.variables) == 1:
        return _univariate_gcd(f, g, var)
    cf = _content_in(f, var)
    cg = _content_in(g, var)
    c = poly_gcd(cf, cg) if not (cf.is_constant() and cg.is_constant()) else MPoly.constant(1)
    a = exact_div(f, cf)
    b = exact_div(g, cg)
    if a.degree_in(var) < b.degree_in(var):
        a, b = b, a
    while True:
        if b.degree_in(var) == 0:
            pp = MPoly.constant(1)
            break
        r = _prem(a, b, var)
        if r.is_zero():
            pp = exact_div(b, _content_in(b, var))
            break
        a, b = b, exact_div(r, _content_in(r, var))
    return (c * pp).canonical()


def squarefree_part(f: MPoly) -> MPoly:
    """f divided by its repeated factors; primitive, canonical sign."""
    if f.is_zero():
        raise PolynomialError("square-free part of zero")
    if f.is_constant():
        return MPoly.constant(1)
    rep = f
    for v in f.variables:
        d = f.derivative(v)
        if d.is_zero():
            continue
        rep = poly_gcd(rep, d)
        if rep.is_constant():
            return f.canonical()
    return exact_div(f, rep).canonical() if not rep.is_constant() else f.canonical()


def gcd_squarefree(f: MPoly, g: MPoly | None = None) -> tuple[MPoly, MPoly]:
    """(gcd, square-free part of f).

    With g omitted the gcd slot carries the repeated-factor multiplier of f
    (so f = gcd * squarefree up to content in that case).
    """
    if f.is_zero() and (g is None or g.is_zero()):
        raise PolynomialError("gcd_squarefree needs a nonzero input")
    sf = squarefree_part(f) if not f.is_zero() else MPoly.constant(1)
    if g is None:
        rep = try_exact_div(f.canonical(), sf)
        if rep is None:
            raise InternalInvariantError("square-free part does not divide input")
        return rep.canonical(), sf
    return poly_gcd(f, g), sf


# ---------------------------------------------------------------------------
# resultants and discriminants
# ---------------------------------------------------------------------------


def resultant(f: MPoly, g: MPoly, var: str) -> MPoly:
    """Sylvester resultant eliminating var, by subresultant PRS.

    Both inputs must have positive degree in var; degree-0 inputs are a
    reported degenerate case rather than silently extended.
    """
    m, n = f.degree_in(var), g.degree_in(var)
    if m == 0 or n == 0:
        raise PolynomialError(
            f"resultant: degree-0 case (deg_{var} f = {m}, deg_{var} g = {n}); "
            "the classical convention Res(f, c) = c^deg(f) is not applied implicitly"
        )
    sign = 1
    a, b = f, g
    if m < n:
        a, b = b, a
        if m % 2 == 1 and n % 2 == 1:
            sign = -sign
    gg = MPoly.constant(1)
    h = MPoly.constant(1)
    while b.degree_in(var) > 0:
        da, db = a.degree_in(var), b.degree_in(var)
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            sign = -sign
        r = _prem(a, b, var)
        if r.is_zero():
            return MPoly.zero()
        a = b
        b = exact_div(r, gg * h**delta)
        gg = a.coeffs_in(var)[a.degree_in(var)]
        if delta > 0:
            h = exact_div(gg**delta, h ** (delta - 1)) if delta > 1 else gg
    if b.is_zero():
        return MPoly.zero()
    da = a.degree_in(var)
    bb = b.coeffs_in(var)[0]
    res = exact_div(bb**da, h ** (da - 1)) if da > 1 else bb
    return res if sign == 1 else -res


def sylvester_matrix(f: MPoly, g: MPoly, var: str) -> list[list[MPoly]]:
    m, n = f.degree_in(var), g.degree_in(var)
    if m == 0 or n == 0:
        raise PolynomialError("sylvester_matrix needs positive degrees")
    fc = f.coeffs_in(var)
    gc = g.coeffs_in(var)
    size = m + n
    rows = []
    for i in range(n):
        row = [MPoly.zero()] * size
        for k, c in enumerate(reversed(fc)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [MPoly.zero()] * size
        for k, c in enumerate(reversed(gc)):
            row[i + k] = c
        rows.append(row)
    return rows


def sylvester_resultant(f: MPoly, g: MPoly, var: str) -> MPoly:
    """Resultant via fraction-free (Bareiss) elimination; cross-check route."""
    mat = [row[:] for row in sylvester_matrix(f, g, var)]
    n = len(mat)
    denom = MPoly.constant(1)
    sign = 1
    for k in range(n - 1):
        if mat[k][k].is_zero():
            pivot = next((i for i in range(k + 1, n) if not mat[i][k].is_zero()), None)
            if pivot is None:
                return MPoly.zero()
            mat[k], mat[pivot] = mat[pivot], mat[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]
                mat[i][j] = exact_div(num, denom)
            mat[i][k] = MPoly.zero()
        denom = mat[k][k]
    det = mat[n - 1][n - 1]
    return det if sign == 1 else -det


def binary_form_degree(f: MPoly, u: str = "dx", v: str = "dy") -> int:
    """Common total degree in (u, v) of a homogeneous binary form; errors if mixed."""
    if f.is_zero():
        raise PolynomialError("zero form")
    iu = f.variables.index(u) if u in f.variables else None
    iv = f.variables.index(v) if v in f.variables else None
    degs = set()
    for e in f.terms:
        d = (e[iu] if iu is not None else 0) + (e[iv] if iv is not None else 0)
        degs.add(d)
    if len(degs) != 1:
        raise PolynomialError(f"form is not homogeneous in ({u}, {v}): degrees {sorted(degs)}")
    return degs.pop()


def discriminant_binary(f: MPoly, u: str = "dx", v: str = "dy") -> MPoly:
    """Discriminant in (u:v) of a homogeneous binary form with MPoly coefficients.

    Normalization: Res_t(g, g') / lc with g the (shear-adjusted) dehomogenized
    form, returned primitive with canonical sign; degree-1 forms give 1.
    """
    k = binary_form_degree(f, u, v)
    if k == 0:
        raise PolynomialError("discriminant of a constant form")
    if k == 1:
        return MPoly.constant(1)
    shear = None
    for lam in (0, 1, -1, 2, -2, 3, -3, 4, -4, 5):
        subs = {}
        if u in f.variables:
            subs[u] = lam
        if v in f.variables:
            subs[v] = 1
        lc = f.substitute(subs) if subs else f
        if not lc.is_zero():
            shear = lam
            break
    if shear is None:
        raise PolynomialError("could not normalize binary form (is it zero?)")
    g = f
    if shear != 0 and u in f.variables:
        g = f.substitute({u: MPoly.variable(u) + MPoly.constant(shear) * MPoly.variable(v)})
    subs = {}
    if u in g.variables:
        subs[u] = 1
    gt = g.substitute(subs) if subs else g
    # gt is univariate of exact degree k in v with leading coefficient lc
    lead = gt.coeffs_in(v)[k]
    res = resultant(gt, gt.derivative(v), v)
    disc = exact_div(res, lead)
    return disc.canonical() if not disc.is_zero() else MPoly.zero()


def discriminant_univariate(f: MPoly, var: str) -> MPoly:
    """Res(f, f') / lc for a positive-degree polynomial in var."""
    d = f.degree_in(var)
    if d == 0:
        raise PolynomialError("discriminant of constant")
    if d == 1:
        return MPoly.constant(1)
    lead = f.coeffs_in(var)[d]
    return exact_div(resultant(f, f.derivative(var), var), lead)


# ---------------------------------------------------------------------------
# jets
# ---------------------------------------------------------------------------


def jet_decompose(f: MPoly, variables: Sequence[str] = ("x", "y"), about=(0, 0)) -> dict[int, MPoly]:
    """Translate f to the point and split by total degree in the given variables.

    Returns {degree: nonzero homogeneous component}; the components sum back to
    the translated polynomial exactly.
    """
    a = [_as_fraction(c) for c in about]
    if len(a) != len(variables):
        raise PolynomialError("point arity does not match variables")
    subs = {
        v: MPoly.variable(v) + MPoly.constant(c)
        for v, c in zip(variables, a)
        if v in f.variables and c != 0
    }
    g = f.substitute(subs) if subs else f
    idx = [g.variables.index(v) if v in g.variables else None for v in variables]
    parts: dict[int, dict] = {}
    for e, c in g.terms.items():
        d = sum(e[i] for i in idx if i is not None)
        parts.setdefault(d, {})[e] = c
    return {d: MPoly(g.variables, t) for d, t in sorted(parts.items())}


def lowest_jet(f: MPoly, variables: Sequence[str] = ("x", "y")) -> tuple[int, MPoly]:
    """(order, initial form) of f at the origin in the given variables."""
    jets = jet_decompose(f, variables, (0,) * len(variables))
    if not jets:
        raise PolynomialError("zero polynomial has no initial form")
    d = min(jets)
    return d, jets[d]
