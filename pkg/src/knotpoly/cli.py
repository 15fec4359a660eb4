"""Command line interface.

Subcommands compute Alexander polynomials and enhanced A-polynomials of
torus knots, Newton polygon data, torus knot detection, satellite
obstruction verdicts, exhaustive sweeps, and randomized gluing
verification.  Output is byte-deterministic: fixed key order, seeded
randomness, no timestamps.

``--format`` (or the KNOTPOLY_FORMAT environment variable) switches
alexander/apoly/newton/detect between text and JSON; obstruct, sweep,
and glue-verify always emit JSON records, one per line.  Exit codes:
0 success, 1 domain error (with a structured {"error": ...} record),
2 usage error.
"""

from __future__ import annotations

import functools
import json
import math
import sys
from random import Random

import click

from . import apolygon, repglue, satellite, torusknot
from .laurent import LaurentPoly

FORMAT_ENV = "KNOTPOLY_FORMAT"

_DOMAIN_ERRORS = (ValueError, ArithmeticError, RuntimeError)


def _domain_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except _DOMAIN_ERRORS as exc:
            click.echo(_dumps({"error": {"kind": type(exc).__name__, "detail": str(exc)}}))
            sys.exit(1)

    return wrapper


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _format_option(fn):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(["text", "json"]),
        default="text",
        envvar=FORMAT_ENV,
        show_default=True,
        help="Output format (defaults from KNOTPOLY_FORMAT).",
    )(fn)


def _spec_json(k: torusknot.TorusKnotSpec) -> dict:
    return {"a": k.a, "b": k.b}


def _slope_str(s) -> str:
    return "inf" if s == apolygon.INFINITE_SLOPE else str(s)


@click.group()
def main():
    """Exact knot polynomial computations and obstruction checks."""


@main.command()
@click.argument("knot")
@_format_option
@_domain_errors
def alexander(knot: str, fmt: str):
    """Symmetrized Alexander polynomial of a torus knot T(a,b)."""
    k = torusknot.parse_spec(knot)
    poly = torusknot.alexander(k)
    if fmt == "text":
        click.echo(str(poly))
    else:
        click.echo(
            _dumps(
                {
                    "knot": _spec_json(k),
                    "genus": torusknot.genus(k),
                    "alexander": str(poly),
                }
            )
        )


@main.command()
@click.argument("knot")
@_format_option
@_domain_errors
def apoly(knot: str, fmt: str):
    """Enhanced A-polynomial of a torus knot T(a,b)."""
    k = torusknot.parse_spec(knot)
    poly = torusknot.enhanced_apoly(k)
    if fmt == "text":
        click.echo(str(poly))
    else:
        click.echo(_dumps({"knot": _spec_json(k), "apoly": str(poly)}))


# ignore_unknown_options lets polynomial arguments start with a minus sign
@main.command(context_settings={"ignore_unknown_options": True})
@click.argument("poly")
@_format_option
@_domain_errors
def newton(poly: str, fmt: str):
    """Newton polygon, edge slopes, and thinness of an (L, M) polynomial."""
    f = apolygon.BiPoly.parse(poly)
    npg = apolygon.newton_polygon(f)
    thin = apolygon.thinness(f)
    if fmt == "text":
        click.echo("points: " + " ".join(f"({l},{m})" for l, m in npg.lattice_points))
        click.echo("hull: " + " ".join(f"({l},{m})" for l, m in npg.hull_vertices))
        click.echo("edge slopes: " + " ".join(_slope_str(s) for s in npg.edge_slopes))
        if thin.kind == "thin":
            click.echo(f"thinness: thin slope={thin.slope}")
        elif thin.infinite_slope:
            click.echo("thinness: not_thin (vertical support)")
        else:
            click.echo(f"thinness: {thin.kind}")
    else:
        click.echo(
            _dumps(
                {
                    "points": [list(p) for p in npg.lattice_points],
                    "hull": [list(p) for p in npg.hull_vertices],
                    "edge_slopes": [_slope_str(s) for s in npg.edge_slopes],
                    "thinness": {
                        "kind": thin.kind,
                        "slope": None if thin.slope is None else str(thin.slope),
                        "infinite_slope": thin.infinite_slope,
                    },
                }
            )
        )


@main.command(context_settings={"ignore_unknown_options": True})
@click.argument("poly")
@click.option("--degree", type=int, default=None, help="Alexander polynomial degree 2g filter.")
@_format_option
@_domain_errors
def detect(poly: str, degree: int | None, fmt: str):
    """Identify torus knots from an enhanced A-polynomial."""
    f = apolygon.BiPoly.parse(poly)
    if degree is None:
        result = apolygon.detect_torus_from_apoly(f)
    else:
        result = apolygon.detect_with_degree(f, degree)
    if fmt == "json":
        click.echo(
            _dumps(
                {
                    "unknot": result.is_unknot,
                    "unique": result.unique,
                    "candidates": [_spec_json(k) for k in result.candidates],
                }
            )
        )
        return
    if result.is_unknot:
        click.echo("unknot")
    elif not result.candidates:
        click.echo("no match")
    else:
        for k in result.candidates:
            click.echo(str(k))
        click.echo("unique" if result.unique else "ambiguous")


def _parse_companion(text: str) -> LaurentPoly:
    stripped = text.strip()
    if stripped.startswith("T(") or stripped.startswith("t("):
        return torusknot.alexander(torusknot.parse_spec(stripped))
    return LaurentPoly.parse(text)


def _witness_json(check: satellite.WindingCheck):
    if check.kind == "magnitude_violation":
        return {
            "kind": check.kind,
            "exponent": check.exponent,
            "coefficient": check.coefficient,
        }
    if check.kind == "same_sign_violation":
        return {
            "kind": check.kind,
            "exponents": list(check.exponent_pair),
            "coefficients": list(check.coefficients),
        }
    return None


def _obstruction_record(a: int, b: int, w: int, companion: LaurentPoly, label: str) -> tuple[dict, str]:
    result = satellite.torus_satellite_obstruction(a, b, w, companion)
    record = {"a": a, "b": b, "w": w, "companion": label, "verdict": result.verdict}
    if result.verdict == "obstructed":
        record["witness"] = _witness_json(result.violation)
    elif result.verdict == "config_impossible":
        record["reason"] = result.reason
    else:
        record["witness"] = None
    return record, result.verdict


@main.command()
@click.option("--a", "a", type=int, required=True, help="Pattern parameter a (a > b).")
@click.option("--b", "b", type=int, required=True, help="Pattern parameter b >= 2.")
@click.option("--w", "w", type=int, required=True, help="Winding number with w^2 | ab.")
@click.option(
    "--companion",
    required=True,
    help="Companion Alexander polynomial, or T(p,q) for a torus companion.",
)
@_domain_errors
def obstruct(a: int, b: int, w: int, companion: str):
    """L-space surgery obstruction for a torus-pattern satellite."""
    poly = _parse_companion(companion)
    record, verdict = _obstruction_record(a, b, w, poly, str(poly))
    click.echo(_dumps(record))
    if verdict == "not_obstructed":
        sys.exit(1)


@main.group()
def sweep():
    """Exhaustive and randomized verification sweeps (NDJSON records)."""


def _coprime_pairs(limit: int):
    # All canonical (big, small) with small >= 2, big <= limit.
    for big in range(3, limit + 1):
        for small in range(2, big):
            if math.gcd(big, small) == 1:
                yield big, small


@sweep.command("obstruct")
@click.option("--a-max", type=int, default=20, show_default=True)
@click.option("--companion-max", type=int, default=10, show_default=True)
@_domain_errors
def sweep_obstruct(a_max: int, companion_max: int):
    """Check every torus-pattern satellite with w^2 | ab in range."""
    companions = [
        (f"T({p},{q})", torusknot.alexander(torusknot.TorusKnotSpec(p, q)))
        for p, q in _coprime_pairs(companion_max)
    ]
    counts = {"obstructed": 0, "config_impossible": 0, "not_obstructed": 0}
    total = 0
    for a, b in _coprime_pairs(a_max):
        for w in range(1, a):
            if (a * b) % (w * w):
                continue
            for label, poly in companions:
                record, verdict = _obstruction_record(a, b, w, poly, label)
                click.echo(_dumps(record))
                counts[verdict] += 1
                total += 1
    click.echo(_dumps({"summary": {"total": total, **counts}}))
    if counts["not_obstructed"]:
        sys.exit(1)


@sweep.command("thinness")
@click.option("--max", "limit", type=int, default=40, show_default=True)
@_domain_errors
def sweep_thinness(limit: int):
    """Check the Newton polygon of every enhanced A-polynomial in range is
    a segment of slope ab."""
    total = mismatches = 0
    for big, small in _coprime_pairs(limit):
        for a in (big, -big):
            k = torusknot.TorusKnotSpec(a, small)
            thin = apolygon.thinness(torusknot.enhanced_apoly(k))
            expected = k.a * k.b
            ok = thin.kind == "thin" and thin.slope == expected
            click.echo(
                _dumps(
                    {
                        "a": k.a,
                        "b": k.b,
                        "kind": thin.kind,
                        "slope": None if thin.slope is None else str(thin.slope),
                        "expected": str(expected),
                        "ok": ok,
                    }
                )
            )
            total += 1
            mismatches += 0 if ok else 1
    click.echo(_dumps({"summary": {"total": total, "mismatches": mismatches}}))
    if mismatches:
        sys.exit(1)


def _glue_records(kinds, count: int, seed: int, tolerance: float):
    rng = Random(seed)
    records = []
    failures = 0
    for kind in kinds:
        for _ in range(count):
            inst = repglue.sample_instance(kind, rng, tolerance)
            ext = repglue.construct_extension(inst, tolerance)
            res = repglue.verify_extension(inst, ext, tolerance)
            record = {
                "case": kind,
                "p": inst.p,
                "q": inst.q,
                "w": inst.w,
                "d": inst.d,
                "k": ext.chosen_k,
                "central_twist": ext.central_twist_used,
                "residuals": list(res.residuals),
                "ok": res.ok,
            }
            if kind == "diagonal":
                polar = repglue.diagonal_polar_data(inst)
                record["polar"] = {
                    "s": polar["s"],
                    "t": polar["t"],
                    "theta": polar["theta"],
                    "phi": polar["phi"],
                    "m": polar["m"],
                }
            records.append(record)
            failures += 0 if res.ok else 1
    return records, failures


@sweep.command("glue")
@click.option("--per-case", type=int, default=200, show_default=True)
@click.option("--seed", type=int, default=7, show_default=True)
@click.option("--tolerance", type=float, default=repglue.DEFAULT_TOL, show_default=True)
@_domain_errors
def sweep_glue(per_case: int, seed: int, tolerance: float):
    """Randomized construct-and-verify sweep over all three gluing cases."""
    records, failures = _glue_records(repglue.CASE_KINDS, per_case, seed, tolerance)
    for record in records:
        click.echo(_dumps(record))
    click.echo(_dumps({"summary": {"total": len(records), "failed": failures}}))
    if failures:
        sys.exit(1)


@main.command("glue-verify")
@click.option(
    "--case",
    "case_kind",
    type=click.Choice(list(repglue.CASE_KINDS) + ["all"]),
    default="all",
    show_default=True,
)
@click.option("--count", type=int, default=200, show_default=True)
@click.option("--seed", type=int, default=7, show_default=True)
@click.option("--tolerance", type=float, default=repglue.DEFAULT_TOL, show_default=True)
@_domain_errors
def glue_verify(case_kind: str, count: int, seed: int, tolerance: float):
    """Construct and independently verify randomized gluing instances."""
    kinds = repglue.CASE_KINDS if case_kind == "all" else (case_kind,)
    records, failures = _glue_records(kinds, count, seed, tolerance)
    for record in records:
        click.echo(_dumps(record))
    click.echo(_dumps({"summary": {"total": len(records), "failed": failures}}))
    if failures:
        sys.exit(1)


if __name__ == "__main__":
    main()
