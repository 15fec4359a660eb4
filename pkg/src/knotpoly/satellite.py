"""Satellite Alexander polynomials and the coefficient obstructions that
keep torus-pattern satellites from admitting instanton L-space surgeries.

The polynomial of a satellite with pattern P, companion C and winding
number w is pattern(t) * companion(t^w); its genus is the pattern genus
plus w times the companion genus (fibered convention: genus = top
exponent of the symmetrized polynomial).

``lspace_admissible`` scans a symmetrized polynomial top-down against the
three necessary conditions satisfied by every knot with an instanton
L-space surgery: coefficients in {-1, 0, 1}, strictly alternating signs
on the nonzero coefficients, and nonzero opposite-sign coefficients in
the top two positions.  The scan is positional: the violation at the
highest exponent determines the verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .laurent import LaurentPoly
from .torusknot import TorusKnotSpec, alexander, genus


class PredictionMismatch(RuntimeError):
    """A coefficient the residue analysis predicts was absent from the
    actual product; indicates a bug, never expected on valid inputs."""


@dataclass(frozen=True)
class SatelliteSpec:
    """Pattern/companion data for a satellite knot.

    Genus fields default to the top exponents of the symmetrized
    polynomials and must match them when given explicitly.
    """

    pattern_poly: LaurentPoly
    companion_poly: LaurentPoly
    winding: int
    pattern_genus: int | None = None
    companion_genus: int | None = None

    def __post_init__(self):
        if not isinstance(self.winding, int) or isinstance(self.winding, bool) or self.winding < 1:
            raise ValueError(f"winding number must be an integer >= 1, got {self.winding!r}")
        for name in ("pattern", "companion"):
            poly = getattr(self, f"{name}_poly")
            _require_symmetrized(poly, f"{name} polynomial")
            top = poly.span()[1]
            stated = getattr(self, f"{name}_genus")
            if stated is None:
                object.__setattr__(self, f"{name}_genus", top)
            elif stated != top:
                raise ValueError(
                    f"{name} genus {stated} does not match top exponent {top}"
                )


def _require_symmetrized(poly: LaurentPoly, label: str) -> None:
    if not poly:
        raise ValueError(f"{label} must be nonzero")
    if poly != poly.mirror():
        raise ValueError(f"{label} must be symmetrized (equal to its mirror)")
    if sum(c for _, c in poly.items()) <= 0:
        raise ValueError(f"{label} must be positive at t = 1")


def satellite_alexander(spec: SatelliteSpec) -> LaurentPoly:
    """pattern(t) * companion(t^w), symmetrized."""
    product = spec.pattern_poly * spec.companion_poly.dilate(spec.winding)
    return product.symmetrize()


def satellite_genus(spec: SatelliteSpec) -> int:
    return spec.pattern_genus + spec.winding * spec.companion_genus


# ------- L-space coefficient test -------


@dataclass(frozen=True)
class AdmissibilityReport:
    """verdict is admissible, fails_magnitude, fails_alternation, or
    fails_top_two; failures carry the offending exponent(s) with their
    coefficients, highest exponent first."""

    verdict: str
    witness_exponent: int | None = None
    witness_coefficients: tuple[tuple[int, int], ...] = ()

    @property
    def ok(self) -> bool:
        return self.verdict == "admissible"


def lspace_admissible(f: LaurentPoly) -> AdmissibilityReport:
    """Scan a symmetrized polynomial against the three L-space coefficient
    conditions, reporting the first violation met going down from the top
    exponent."""
    _require_symmetrized(f, "input")
    g = f.span()[1]
    c_top = f.coefficient(g)
    if abs(c_top) >= 2:
        return AdmissibilityReport("fails_magnitude", g, ((g, c_top),))
    if g >= 1:
        c_next = f.coefficient(g - 1)
        if c_next == 0:
            return AdmissibilityReport("fails_top_two", g, ((g, c_top), (g - 1, 0)))
        if abs(c_next) >= 2:
            return AdmissibilityReport("fails_magnitude", g - 1, ((g - 1, c_next),))
        if (c_next > 0) == (c_top > 0):
            return AdmissibilityReport(
                "fails_alternation", g, ((g, c_top), (g - 1, c_next))
            )
        prev = (g - 1, c_next)
    else:
        prev = (g, c_top)
    for e, c in f.items():
        if e >= prev[0]:
            continue
        if abs(c) >= 2:
            return AdmissibilityReport("fails_magnitude", e, ((e, c),))
        if (c > 0) == (prev[1] > 0):
            return AdmissibilityReport("fails_alternation", prev[0], (prev, (e, c)))
        prev = (e, c)
    return AdmissibilityReport("admissible")


# ------- Residue-class violations for torus-pattern satellites -------


@dataclass(frozen=True)
class WindingCheck:
    """kind is no_violation, magnitude_violation (exponent, coefficient) or
    same_sign_violation (exponent pair, coefficients, higher first)."""

    kind: str
    exponent: int | None = None
    coefficient: int | None = None
    exponent_pair: tuple[int, int] | None = None
    coefficients: tuple[int, int] | None = None


def winding_violation(a: int, b: int, w: int, companion: LaurentPoly) -> WindingCheck:
    """Locate the admissibility violation that the residue of w mod b
    forces in alexander(T(a, b))(t) * companion(t^w).

    The classification is verified against the actual product coefficients;
    any disagreement raises PredictionMismatch.  Requires a > b >= 2
    coprime, 1 <= w < a, and an admissible companion of genus >= 1.
    """
    _check_pattern(a, b)
    if not isinstance(w, int) or isinstance(w, bool) or not 1 <= w < a:
        raise ValueError(f"winding number must satisfy 1 <= w < a, got {w!r}")
    h = _check_companion(companion)
    g = (a - 1) * (b - 1) // 2
    product = alexander(TorusKnotSpec(a, b)) * companion.dilate(w)

    r = w % b
    if r == 0:
        scan = lspace_admissible(product)
        if scan.verdict != "admissible":
            raise PredictionMismatch(
                f"w = {w} is a multiple of {b} but the product scans {scan.verdict}"
            )
        return WindingCheck("no_violation")
    if r == 1:
        e = g + h * w - w
        c = product.coefficient(e)
        if abs(c) != 2:
            raise PredictionMismatch(
                f"expected a coefficient of magnitude 2 at exponent {e}, found {c}"
            )
        return WindingCheck("magnitude_violation", exponent=e, coefficient=c)
    e1 = g + h * w - (w // b) * b - 1
    e2 = g + h * w - w
    c1 = product.coefficient(e1)
    c2 = product.coefficient(e2)
    if c1 == 0 or c2 == 0 or (c1 > 0) != (c2 > 0):
        raise PredictionMismatch(
            f"expected same-sign coefficients at exponents {e1}, {e2}; found {c1}, {c2}"
        )
    if any(product.coefficient(e) for e in range(e2 + 1, e1)):
        raise PredictionMismatch(
            f"expected no nonzero coefficients strictly between {e2} and {e1}"
        )
    return WindingCheck(
        "same_sign_violation", exponent_pair=(e1, e2), coefficients=(c1, c2)
    )


@dataclass(frozen=True)
class ObstructionResult:
    """verdict is obstructed (with the witnessing WindingCheck),
    config_impossible (the arithmetic preconditions cannot coexist), or
    not_obstructed."""

    verdict: str
    violation: WindingCheck | None = None
    reason: str | None = None


def torus_satellite_obstruction(
    a: int, b: int, w: int, companion: LaurentPoly
) -> ObstructionResult:
    """Decide whether a winding-w satellite with pattern T(a, b) and the
    given companion polynomial is obstructed from instanton L-space
    surgeries, under the divisibility hypothesis w^2 | ab."""
    _check_pattern(a, b)
    if not isinstance(w, int) or isinstance(w, bool) or w < 1:
        raise ValueError(f"winding number must be an integer >= 1, got {w!r}")
    if (a * b) % (w * w) != 0:
        raise ValueError(f"w^2 = {w * w} does not divide ab = {a * b}")
    _check_companion(companion)
    if w >= a:
        # w^2 | ab and w >= a would force ab >= w^2 >= a^2 > ab.
        return ObstructionResult(
            "config_impossible", reason=f"w = {w} >= a = {a} contradicts w^2 | ab"
        )
    if w % b == 0:
        # ab = k w^2 with b | w would force b | a against coprimality.
        return ObstructionResult(
            "config_impossible",
            reason=f"b = {b} divides w = {w}, which would force b | a",
        )
    check = winding_violation(a, b, w, companion)
    if check.kind == "no_violation":
        return ObstructionResult("not_obstructed")
    return ObstructionResult("obstructed", violation=check)


def _check_pattern(a: int, b: int) -> None:
    for v in (a, b):
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"pattern parameters must be integers, got {v!r}")
    if not a > b >= 2:
        raise ValueError(f"pattern needs a > b >= 2, got a = {a}, b = {b}")
    if math.gcd(a, b) != 1:
        raise ValueError(f"pattern parameters {a}, {b} are not coprime")


def _check_companion(companion: LaurentPoly) -> int:
    report = lspace_admissible(companion)
    if not report.ok:
        raise ValueError(
            f"companion polynomial must be admissible, but it {report.verdict}"
        )
    h = companion.span()[1]
    if h < 1:
        raise ValueError("companion genus must be >= 1")
    return h
