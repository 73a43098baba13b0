"""Command-line front end.

Exit codes: 0 all assertions passed, 1 a mathematical assertion failed,
2 usage or parse error, 3 numeric abort.  Reports are deterministic for a
fixed (input, subcommand, seed); the timestamp is isolated on its own line so
byte comparison of the remainder is meaningful.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys

from . import localsing as localsing_mod
from . import numerics as numerics_mod
from . import solve as solve_mod
from .errors import (
    DegenerateSampleError,
    NumericAbortError,
    ParseError,
    PolarwebError,
    PolynomialError,
    WebValidationError,
)
from .foliation import (
    FoliationData,
    class_of_curve,
    classify_singularity,
    inflexion_divisor,
    inflexion_lemma_check,
    polar_sing_in_inflexion_check,
    quasi_radial_bound_check,
    tangent_cone_dichotomy,
    tangent_cone_dichotomy_numeric,
)
from .localsing import (
    CurveGerm,
    equisingularity_check,
    fingerprint,
    genus_constancy_check,
    genus_of_curve,
)
from .mpoly import MPoly, format_mpoly
from .parsing import parse_input, parse_point
from .polarops import (
    RadialProduct,
    base_points_check,
    branches_check,
    family_degree_check,
    family_dimension_check,
    generic_polar_irreducible,
    generic_polar_singularities_check,
    polar_curve,
    polar_degree_check,
    polar_equality_criterion,
    polar_family,
    radial_form,
)
from .reports import CheckReport
from .sampling import GenericSampler
from .webmodel import (
    AffinePoint,
    PlaneCurve,
    SymWeb,
    discriminant_curve,
    is_smooth_point,
    singular_set,
    tangent_directions,
    web_degree,
)

THEOREMS = (
    "polar-degree",
    "polar-equality",
    "k2",
    "family-dim",
    "base-points",
    "sing-locus",
    "branches",
    "irreducible",
    "inflexion-lemma",
    "sing-in-E",
    "qr-dichotomy",
    "qr-bound",
    "equising",
    "genus-constant",
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polarweb",
        description="Polar curves and polar families of plane webs and foliations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, center=False, point=False, seeded=True):
        p.add_argument("--in", dest="path", required=True, help="input file")
        if center:
            p.add_argument("--center", required=True, help="rational center a,b")
        if point:
            p.add_argument("--point", required=True, help="rational point a,b")
        if seeded:
            p.add_argument("--seed", type=int, default=0)
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--tol-residual", type=float, default=None,
                       help="numeric membership tolerance (default 1e-9)")
        p.add_argument("--tol-cluster", type=float, default=None,
                       help="numeric clustering tolerance (default 1e-5)")
        p.add_argument("--tol-root-residual", type=float, default=None,
                       help="root-finder residual tolerance (default 1e-9)")
        p.add_argument("--tol-step-guard", type=float, default=None,
                       help="tracking guard: max step as a fraction 1/g of the root separation (default 3)")

    common(sub.add_parser("polar", help="polar curve with a given center"), center=True)
    common(sub.add_parser("degree", help="degree of the web"))
    common(sub.add_parser("discriminant", help="discriminant curve"))
    common(sub.add_parser("singular", help="singular set"))
    common(sub.add_parser("directions", help="tangent directions at a point"), point=True)
    common(sub.add_parser("inflexion", help="inflexion divisor of a foliation"))
    common(sub.add_parser("classify-sing", help="quasi-radial classification"), point=True)
    fam = sub.add_parser("family", help="polar family: base points, degree, dimension")
    common(fam)
    group = fam.add_mutually_exclusive_group(required=True)
    group.add_argument("--base-points", action="store_true")
    group.add_argument("--degree", action="store_true")
    group.add_argument("--dimension", action="store_true")
    cls = sub.add_parser("class", help="class (degree of the dual) of a curve")
    common(cls)
    gen = sub.add_parser("genus", help="genus of an irreducible curve")
    common(gen)
    gen.add_argument("--affine-only", action="store_true",
                     help="ignore singular points on the line at infinity")
    common(sub.add_parser("localsing", help="fingerprint of a curve germ"), point=True)
    chk = sub.add_parser("check", help="run a theorem check")
    common(chk)
    chk.add_argument("--theorem", required=True, choices=THEOREMS)
    chk.add_argument("--samples", type=int, default=20)
    return parser


def _load(path: str):
    obj, warnings = parse_input(path)
    return obj, warnings


def _as_web(obj) -> SymWeb:
    if isinstance(obj, SymWeb):
        return obj
    if isinstance(obj, FoliationData):
        return obj.as_web
    raise ParseError("this subcommand needs a web or foliation input")


def _as_foliation(obj) -> FoliationData:
    if isinstance(obj, FoliationData):
        return obj
    if isinstance(obj, SymWeb) and obj.k == 1:
        coeffs = obj.coefficients()
        return FoliationData(coeffs[1], -coeffs[0])
    raise ParseError("this subcommand needs a foliation (k = 1) input")


def _as_curve(obj) -> PlaneCurve:
    if isinstance(obj, PlaneCurve):
        return obj
    raise ParseError("this subcommand needs a curve input (type: curve, f: ...)")


def _emit(args, lines: list[str], report: CheckReport | None, command: str) -> str:
    stamp = datetime.datetime.now(datetime.timezone.utc).isoformat()
    if getattr(args, "json", False):
        doc = {
            "command": command,
            "output": lines,
            "report": report.to_dict() if report is not None else None,
            "timestamp": stamp,
        }
        return json.dumps(doc, sort_keys=True, indent=1)
    out = [f"command: {command}", f"timestamp: {stamp}"]
    out.extend(lines)
    if report is not None:
        out.append(report.render_text())
    return "\n".join(out)


def run_command(argv: list[str]) -> tuple[int, str]:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return (0 if e.code in (0, None) else 2), ""
    if args.tol_residual is not None:
        solve_mod.NUMERIC_TOL = args.tol_residual
    if args.tol_cluster is not None:
        localsing_mod.CLUSTER_TOL = args.tol_cluster
    if args.tol_root_residual is not None:
        numerics_mod.RESIDUAL_TOL = args.tol_root_residual
    if args.tol_step_guard is not None:
        numerics_mod.STEP_GUARD = args.tol_step_guard
    command = "polarweb " + " ".join(argv)
    try:
        obj, warnings = _load(args.path)
        lines = [f"warning: {w}" for w in warnings]
        report: CheckReport | None = None
        if args.command == "polar":
            web = _as_web(obj)
            center = parse_point(args.center)
            result = polar_curve(web, center)
            if isinstance(result, RadialProduct):
                lines.append(
                    "polar is all of the plane: the web is the product of the radial "
                    f"foliation at {center} with [{format_mpoly(result.cofactor_form)}]"
                )
            else:
                lines.append(f"polar: {format_mpoly(result.raw)}")
                lines.append(f"degree: {result.raw_degree}")
        elif args.command == "degree":
            web = _as_web(obj)
            lines.append(f"degree: {web_degree(web, args.seed)}")
        elif args.command == "discriminant":
            web = _as_web(obj)
            curve = discriminant_curve(web)
            lines.append("discriminant: " + ("empty" if curve.is_empty else format_mpoly(curve.defining)))
        elif args.command == "singular":
            web = _as_web(obj)
            sing = singular_set(web, args.seed)
            for p in sing.points:
                lines.append(f"singular point: {p} [exact]")
            for q in sing.numeric_points:
                lines.append(f"singular point: ({q[0]:.9g}, {q[1]:.9g}) [numeric]")
            if sing.is_empty():
                lines.append("singular set: empty")
            if sing.elim_x is not None:
                lines.append(f"eliminant in x: {format_mpoly(sing.elim_x)}")
            if sing.elim_y is not None:
                lines.append(f"eliminant in y: {format_mpoly(sing.elim_y)}")
        elif args.command == "directions":
            web = _as_web(obj)
            p = parse_point(args.point)
            for d in tangent_directions(web, p):
                lines.append(f"direction: {d} [{'exact' if d.is_exact else 'numeric'}]")
        elif args.command == "inflexion":
            fol = _as_foliation(obj)
            e = inflexion_divisor(fol)
            if e is None:
                lines.append("inflexion divisor: identically zero (all leaves are lines)")
            elif e.is_empty:
                lines.append("inflexion divisor: empty (unit polynomial)")
            else:
                lines.append(f"inflexion divisor: {format_mpoly(e.defining)}")
        elif args.command == "classify-sing":
            fol = _as_foliation(obj)
            q = parse_point(args.point)
            cls = classify_singularity(fol, q)
            lines.append(f"classification: {cls}")
            if cls.radial_cofactor is not None:
                lines.append(f"radial cofactor: {format_mpoly(cls.radial_cofactor)}")
        elif args.command == "family":
            web = _as_web(obj)
            if args.base_points:
                report = base_points_check(web, args.seed)
            elif args.degree:
                report = family_degree_check(web, args.seed)
            else:
                report = family_dimension_check(web, args.seed)
            fam = polar_family(web, args.seed)
            lines.append(f"parametric polar: {format_mpoly(fam.parametric)}")
        elif args.command == "class":
            curve = _as_curve(obj)
            lines.append(f"class: {class_of_curve(curve, args.seed)}")
        elif args.command == "genus":
            curve = _as_curve(obj)
            g = genus_of_curve(curve, args.seed, include_infinity=not args.affine_only)
            lines.append(f"genus: {g}" + (" (affine singularities only)" if args.affine_only else ""))
        elif args.command == "localsing":
            curve = _as_curve(obj)
            p = parse_point(args.point)
            fp = fingerprint(CurveGerm.at_point(curve.defining, (p.a, p.b)))
            lines.append(f"fingerprint at {p}: {fp}")
        elif args.command == "check":
            report = _run_check(obj, args)
        text = _emit(args, lines, report, command)
        if report is not None and not report.passed:
            return 1, text
        return 0, text
    except (ParseError, WebValidationError, FileNotFoundError, PolynomialError) as e:
        return 2, f"error: {e}"
    except (NumericAbortError, DegenerateSampleError) as e:
        return 3, f"numeric abort: {e}"
    except PolarwebError as e:
        return 3, f"error: {e}"


def _run_check(obj, args) -> CheckReport:
    name = args.theorem
    seed, samples = args.seed, args.samples
    if name == "polar-degree":
        return polar_degree_check(_as_web(obj), seed, samples)
    if name == "polar-equality":
        return _equality_check(_as_web(obj), seed, max(samples // 4, 2))
    if name == "k2":
        return family_degree_check(_as_web(obj), seed, min(samples, 5))
    if name == "family-dim":
        return family_dimension_check(_as_web(obj), seed)
    if name == "base-points":
        return base_points_check(_as_web(obj), seed)
    if name == "sing-locus":
        return generic_polar_singularities_check(_as_web(obj), seed, samples)
    if name == "branches":
        return branches_check(_as_web(obj), seed, samples)
    if name == "irreducible":
        return generic_polar_irreducible(_as_web(obj), seed, min(samples, 5))
    if name == "inflexion-lemma":
        return inflexion_lemma_check(_as_foliation(obj), seed, on_curve=5, off_curve=max(samples - 5, 5))
    if name == "sing-in-E":
        return polar_sing_in_inflexion_check(_as_foliation(obj), seed, samples)
    if name == "qr-dichotomy":
        return _dichotomy_all_singularities(_as_foliation(obj), seed, samples)
    if name == "qr-bound":
        return quasi_radial_bound_check(_as_foliation(obj), seed, min(samples, 5))
    if name == "equising":
        return equisingularity_check(_as_foliation(obj), seed, min(samples, 10))
    if name == "genus-constant":
        return genus_constancy_check(_as_foliation(obj), seed, min(samples, 5))
    raise ParseError(f"unknown theorem {name!r}")


def _equality_check(web: SymWeb, seed: int, rounds: int) -> CheckReport:
    """Constructed pairs satisfy the radial-divisibility criterion and have the
    same polar; perturbed pairs fail both routes."""
    report = CheckReport("polar-equality", seed=seed, samples_requested=rounds)
    sampler = GenericSampler(seed)
    DXv, DYv = MPoly.variable("dx"), MPoly.variable("dy")
    done = 0
    attempts = 0
    while done < rounds and attempts < 50 * rounds:
        attempts += 1
        p = AffinePoint(*sampler.point())
        beta = DXv if sampler.rng.random() < 0.5 else DYv
        if web.k >= 2:
            beta = beta * MPoly.constant(sampler.nonzero_int())
        else:
            beta = MPoly.constant(sampler.nonzero_int())
        constructed = web.form + radial_form(p) * beta * DXv ** max(web.k - 2, 0)
        try:
            w2 = SymWeb(constructed)
        except WebValidationError:
            sampler.discards.add(str(p), "constructed form not primitive")
            continue
        if w2.k != web.k:
            sampler.discards.add(str(p), "constructed form changed k")
            continue
        verdict = polar_equality_criterion(web, w2, p)
        report.add(
            f"constructed pair at p={p}",
            verdict.polars_equal and verdict.divisible and verdict.routes_agree,
            f"divisible={verdict.divisible}, polars_equal={verdict.polars_equal}",
        )
        perturbed = web.form + DXv**web.k * MPoly.constant(sampler.nonzero_int())
        try:
            w3 = SymWeb(perturbed)
        except WebValidationError:
            done += 1
            continue
        verdict2 = polar_equality_criterion(web, w3, p)
        report.add(
            f"perturbed pair at p={p}",
            (not verdict2.polars_equal) and (not verdict2.divisible) and verdict2.routes_agree,
            f"divisible={verdict2.divisible}, polars_equal={verdict2.polars_equal}",
        )
        done += 1
    report.samples_used = done
    report.discards = list(sampler.discards.entries)
    return report


def _dichotomy_all_singularities(fol: FoliationData, seed: int, samples: int) -> CheckReport:
    sing = singular_set(fol.as_web, seed)
    merged = CheckReport("qr-dichotomy", seed=seed, samples_requested=samples)
    if sing.is_empty():
        merged.add("singular set", True, "foliation has no affine singular points; nothing to check")
        return merged
    total_points = len(sing.points) + len(sing.numeric_points)
    per_point = max(samples // max(total_points, 1), 1)
    for q in sing.points:
        sub = tangent_cone_dichotomy(fol, q, seed, per_point)
        merged.assertions.extend(sub.assertions)
        merged.notes.extend(sub.notes)
        merged.discards.extend(sub.discards)
        merged.samples_used += sub.samples_used
    for q in sing.numeric_points:
        sub = tangent_cone_dichotomy_numeric(fol, q, seed, per_point)
        merged.assertions.extend(sub.assertions)
        merged.notes.extend(sub.notes)
        merged.discards.extend(sub.discards)
        merged.samples_used += sub.samples_used
    return merged


def main(argv: list[str] | None = None) -> int:
    code, text = run_command(sys.argv[1:] if argv is None else argv)
    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
