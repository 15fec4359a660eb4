"""Newton polygons of two-variable (L, M) polynomials and torus knot detection.

A ``BiPoly`` is a sparse (l_exp, m_exp) -> coefficient map over the integers,
normalized so the lexicographically smallest monomial has a positive
coefficient (these polynomials are only ever meaningful up to an overall
sign).  Each monomial L^a M^b contributes the lattice point (a, b): first
coordinate the L-exponent, second the M-exponent.  Slopes are M-exponent
change over L-exponent change.

All polygon arithmetic is exact: integer cross products decide orientation
and collinearity, ``fractions.Fraction`` carries the slopes.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

INFINITE_SLOPE = math.inf

_TERM = re.compile(
    r"([+-]?)(?:(\d+)\*?)?(?:M(?:\^(-?\d+))?\*?)?(?:L(?:\^(-?\d+))?)?\Z"
)


class BiPoly:
    """Immutable two-variable Laurent polynomial in M and L, up to sign."""

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, int], int] = {}
        for key, c in items:
            l_exp, m_exp = key
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in (l_exp, m_exp, c)):
                raise TypeError(f"exponents and coefficients must be integers: {key!r}: {c!r}")
            key = (l_exp, m_exp)
            c = clean.get(key, 0) + c
            if c:
                clean[key] = c
            else:
                clean.pop(key, None)
        if clean and clean[min(clean)] < 0:
            clean = {k: -c for k, c in clean.items()}
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def parse(cls, text: str) -> "BiPoly":
        """Parse terms like ``-1 + M^24*L^2`` (whitespace-insensitive)."""
        s = re.sub(r"\s+", "", text)
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return cls()
        chunks = []
        start = 0
        for i in range(1, len(s)):
            if s[i] in "+-" and s[i - 1] != "^":
                chunks.append(s[start:i])
                start = i
        chunks.append(s[start:])
        acc: dict[tuple[int, int], int] = {}
        for chunk in chunks:
            m = _TERM.match(chunk)
            if not m or chunk in ("", "+", "-") or chunk.endswith("*"):
                raise ValueError(f"cannot parse term {chunk!r}")
            sign, coeff, m_exp, l_exp = m.groups()
            has_m = "M" in chunk
            has_l = "L" in chunk
            if coeff is None and not has_m and not has_l:
                raise ValueError(f"cannot parse term {chunk!r}")
            c = int(coeff) if coeff else 1
            if sign == "-":
                c = -c
            me = (int(m_exp) if m_exp is not None else 1) if has_m else 0
            le = (int(l_exp) if l_exp is not None else 1) if has_l else 0
            key = (le, me)
            acc[key] = acc.get(key, 0) + c
        return cls(acc)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def coefficient(self, l_exp: int, m_exp: int) -> int:
        return self._terms.get((l_exp, m_exp), 0)

    def support(self) -> list[tuple[int, int]]:
        """Lattice points (l_exp, m_exp) with nonzero coefficient, sorted."""
        return sorted(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items())))

    def __neg__(self) -> "BiPoly":
        return self  # values are canonical up to sign

    def __add__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            c = out.get(k, 0) + c
            if c:
                out[k] = c
            else:
                out.pop(k, None)
        return BiPoly(out)

    def __sub__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            c = out.get(k, 0) - c
            if c:
                out[k] = c
            else:
                out.pop(k, None)
        return BiPoly(out)

    def __mul__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (l1, m1), c1 in self._terms.items():
            for (l2, m2), c2 in other._terms.items():
                k = (l1 + l2, m1 + m2)
                c = out.get(k, 0) + c1 * c2
                if c:
                    out[k] = c
                else:
                    out.pop(k, None)
        return BiPoly(out)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for key in sorted(self._terms):
            le, me = key
            c = self._terms[key]
            mag = abs(c)
            factors = []
            if me:
                factors.append("M" if me == 1 else f"M^{me}")
            if le:
                factors.append("L" if le == 1 else f"L^{le}")
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"BiPoly({dict(sorted(self._terms.items()))!r})"


# ------- Newton polygon -------


@dataclass(frozen=True)
class NewtonPolygon:
    """Convex hull data of a BiPoly's support.

    hull_vertices are the extreme points in counterclockwise order starting
    from the lexicographically smallest; edge_slopes are the deduplicated
    slopes (M-change over L-change), finite ones ascending, INFINITE_SLOPE
    last.
    """

    lattice_points: tuple[tuple[int, int], ...]
    hull_vertices: tuple[tuple[int, int], ...]
    edge_slopes: tuple[object, ...]


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _convex_hull(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list[tuple[int, int]] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[int, int]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _edge_slope(u: tuple[int, int], v: tuple[int, int]):
    dl = v[0] - u[0]
    dm = v[1] - u[1]
    if dl == 0:
        return INFINITE_SLOPE
    return Fraction(dm, dl)


def newton_polygon(f: BiPoly) -> NewtonPolygon:
    """Exact Newton polygon of a nonzero BiPoly."""
    if not f:
        raise ValueError("the zero polynomial has no Newton polygon")
    points = f.support()
    hull = _convex_hull(points)
    if len(hull) == 1:
        slopes: tuple = ()
    elif len(hull) == 2:
        slopes = (_edge_slope(hull[0], hull[1]),)
    else:
        seen = []
        for i, u in enumerate(hull):
            v = hull[(i + 1) % len(hull)]
            s = _edge_slope(u, v)
            if s not in seen:
                seen.append(s)
        finite = sorted(s for s in seen if s is not INFINITE_SLOPE)
        slopes = tuple(finite) + ((INFINITE_SLOPE,) if INFINITE_SLOPE in seen else ())
    return NewtonPolygon(tuple(points), tuple(hull), slopes)


@dataclass(frozen=True)
class ThinnessResult:
    """kind is one of "point", "thin", "not_thin".

    thin carries the common rational slope; a vertical collinear support is
    reported not_thin with infinite_slope set.
    """

    kind: str
    slope: Fraction | None = None
    infinite_slope: bool = False


def thinness(f: BiPoly) -> ThinnessResult:
    """Classify the support: single point, collinear (thin), or neither."""
    if not f:
        raise ValueError("the zero polynomial has no Newton polygon")
    points = f.support()
    if len(points) == 1:
        return ThinnessResult("point")
    o = points[0]
    anchor = points[-1]
    if any(_cross(o, anchor, p) != 0 for p in points[1:-1]):
        return ThinnessResult("not_thin")
    if anchor[0] == o[0]:
        return ThinnessResult("not_thin", infinite_slope=True)
    return ThinnessResult("thin", slope=Fraction(anchor[1] - o[1], anchor[0] - o[0]))


def edge_boundary_slopes(f: BiPoly) -> tuple:
    """Deduplicated Newton polygon edge slopes; each is a candidate strict
    boundary slope of the underlying knot."""
    return newton_polygon(f).edge_slopes


# ------- Torus knot detection -------


def coprime_factorizations(n: int) -> list[tuple[int, int]]:
    """All (p, q) with 2 <= p < q, p * q = n, gcd(p, q) = 1, p ascending."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 4:
        raise ValueError(f"need an integer n >= 4, got {n!r}")
    out = []
    for p in range(2, math.isqrt(n) + 1):
        if n % p == 0:
            q = n // p
            if q != p and math.gcd(p, q) == 1:
                out.append((p, q))
    return out


@dataclass(frozen=True)
class DetectionResult:
    """candidates lists every torus knot whose enhanced A-polynomial matches;
    unique means the input pins down one knot (or the unknot)."""

    candidates: tuple
    unique: bool
    is_unknot: bool


def detect_torus_from_apoly(f: BiPoly) -> DetectionResult:
    """Match a BiPoly against the enhanced A-polynomial templates of torus
    knots (and the unknot's trivial polynomial)."""
    from .torusknot import TorusKnotSpec  # deferred: torusknot imports this module

    terms = f.as_dict()
    if terms == {(0, 0): 1}:
        return DetectionResult((), True, True)
    if len(terms) != 2:
        return DetectionResult((), False, False)
    (k1, k2) = sorted(terms)
    c1, c2 = terms[k1], terms[k2]

    # Two-strand templates pin the knot down completely.
    if k1 == (0, 0) and c1 == 1 and k2[0] == 1 and c2 == 1:
        a = _half_odd(k2[1])
        if a is not None:
            return DetectionResult((TorusKnotSpec(a, 2),), True, False)
        return DetectionResult((), False, False)
    if k1[0] == 0 and c1 == 1 and k2 == (1, 0) and c2 == 1:
        a = _half_odd(k1[1])
        if a is not None:
            return DetectionResult((TorusKnotSpec(-a, 2),), True, False)
        return DetectionResult((), False, False)

    # Higher templates only determine the product of the parameters.
    if k1 == (0, 0) and c1 == 1 and k2[0] == 2 and c2 == -1:
        prod = _half_positive(k2[1])
        if prod is not None:
            cands = tuple(
                TorusKnotSpec(q, p) for p, q in coprime_factorizations(prod) if p >= 3
            ) if prod >= 4 else ()
            return DetectionResult(cands, len(cands) == 1, False)
        return DetectionResult((), False, False)
    if k1[0] == 0 and c1 == 1 and k2 == (2, 0) and c2 == -1:
        prod = _half_positive(k1[1])
        if prod is not None:
            cands = tuple(
                TorusKnotSpec(-q, p) for p, q in coprime_factorizations(prod) if p >= 3
            ) if prod >= 4 else ()
            return DetectionResult(cands, len(cands) == 1, False)
        return DetectionResult((), False, False)
    return DetectionResult((), False, False)


def _half_odd(m: int) -> int | None:
    # M-exponent 2a of a two-strand template: a must be odd and > 2.
    if m > 4 and m % 2 == 0 and (m // 2) % 2 == 1:
        return m // 2
    return None


def _half_positive(m: int) -> int | None:
    if m > 0 and m % 2 == 0:
        return m // 2
    return None


def detect_with_degree(f: BiPoly, alexander_degree: int) -> DetectionResult:
    """Detection refined by the Alexander polynomial degree 2g; the answer
    is always unique or empty because (|a|-1)(b-1) determines the pair."""
    if alexander_degree < 0:
        raise ValueError("degree must be nonnegative")
    base = detect_torus_from_apoly(f)
    if base.is_unknot:
        ok = alexander_degree == 0
        return DetectionResult((), ok, ok)
    kept = tuple(
        k for k in base.candidates if (abs(k.a) - 1) * (k.b - 1) == alexander_degree
    )
    return DetectionResult(kept, len(kept) == 1, False)


def detectability(k) -> bool:
    """Whether the enhanced A-polynomial alone pins down this torus knot:
    true for two-strand knots and whenever both parameters are prime powers."""
    a, b = abs(k.a), k.b
    if b == 2 or a == 2:
        return True
    return _is_prime_power(a) and _is_prime_power(b)


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = _smallest_prime_factor(n)
    while n % p == 0:
        n //= p
    return n == 1


def _smallest_prime_factor(n: int) -> int:
    for p in range(2, math.isqrt(n) + 1):
        if n % p == 0:
            return p
    return n
