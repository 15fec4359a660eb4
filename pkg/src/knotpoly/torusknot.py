"""Torus knot invariants: Alexander polynomials, genus, enhanced
A-polynomials, and the family of lens-space surgery slopes.

Specs are canonical with |a| > b >= 2 and the orientation sign carried on
a, so T(a, b), T(b, a), and sign-scattered inputs all collapse to one
value; the mirror of T(a, b) is T(-a, b).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .apolygon import BiPoly
from .laurent import ONE, LaurentPoly


@dataclass(frozen=True)
class TorusKnotSpec:
    """A nontrivial torus knot; parameters are canonicalized on construction.

    >>> TorusKnotSpec(2, 3) == TorusKnotSpec(3, 2)
    True
    >>> TorusKnotSpec(2, -3).a
    -3
    """

    a: int
    b: int

    def __post_init__(self):
        a, b = self.a, self.b
        for v in (a, b):
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"torus knot parameters must be integers, got {v!r}")
        if a == 0 or b == 0:
            raise ValueError("torus knot parameters must be nonzero")
        sign = 1 if a * b > 0 else -1
        p, q = max(abs(a), abs(b)), min(abs(a), abs(b))
        if math.gcd(p, q) != 1:
            raise ValueError(f"parameters {a}, {b} are not coprime")
        if q < 2:
            raise ValueError("T(a, 1) is the unknot; both parameters need magnitude >= 2")
        object.__setattr__(self, "a", sign * p)
        object.__setattr__(self, "b", q)

    @property
    def is_canonical(self) -> bool:
        return abs(self.a) > self.b >= 2

    def __str__(self) -> str:
        return f"T({self.a},{self.b})"


def parse_spec(text: str) -> TorusKnotSpec:
    """Parse the command line syntax ``T(a,b)``."""
    m = re.fullmatch(r"\s*T\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*", text)
    if not m:
        raise ValueError(f"cannot parse torus knot spec {text!r}; expected T(a,b)")
    return TorusKnotSpec(int(m.group(1)), int(m.group(2)))


def genus(k: TorusKnotSpec) -> int:
    """Seifert genus (|a| - 1)(b - 1) / 2."""
    return (abs(k.a) - 1) * (k.b - 1) // 2


def alexander(k: TorusKnotSpec) -> LaurentPoly:
    """Symmetrized Alexander polynomial, computed by exact division of
    (t^{pq} - 1)(t - 1) by (t^p - 1)(t^q - 1); mirrors share it."""
    p, q = abs(k.a), k.b
    t = LaurentPoly.monomial
    numerator = (t(p * q) - ONE) * (t(1) - ONE)
    denominator = (t(p) - ONE) * (t(q) - ONE)
    return numerator.exact_divide(denominator).symmetrize()


def leading_form(k: TorusKnotSpec) -> LaurentPoly:
    """Partial expansion sum_{i=0}^{floor(p/q)} (t^{g-iq} - t^{g-iq-1}).

    Agrees with the full Alexander polynomial on every exponent above g - p
    (p = |a|, q = b, g the genus).
    """
    p, q = abs(k.a), k.b
    g = genus(k)
    terms: dict[int, int] = {}
    for i in range(p // q + 1):
        terms[g - i * q] = 1
        terms[g - i * q - 1] = -1
    return LaurentPoly(terms)


def enhanced_apoly(k: TorusKnotSpec) -> BiPoly:
    """Enhanced A-polynomial template: degree one in L for two-strand
    knots, degree two otherwise, with the mirror moving the M-power to the
    other monomial."""
    a, b = k.a, k.b
    if b == 2:
        if a > 0:
            return BiPoly({(0, 0): 1, (1, 2 * a): 1})
        return BiPoly({(0, -2 * a): 1, (1, 0): 1})
    if a > 0:
        return BiPoly({(0, 0): -1, (2, 2 * a * b): 1})
    return BiPoly({(0, -2 * a * b): -1, (2, 0): 1})


def abelian_slope_family(k: TorusKnotSpec, n_max: int) -> tuple[list[Fraction], int]:
    """Surgery slopes (n*ab + 1)/n for 1 <= n <= n_max, in lowest terms,
    plus the limiting slope ab they accumulate at."""
    if not isinstance(n_max, int) or isinstance(n_max, bool) or n_max < 1:
        raise ValueError(f"n_max must be an integer >= 1, got {n_max!r}")
    ab = k.a * k.b
    slopes = [Fraction(n * ab + 1, n) for n in range(1, n_max + 1)]
    return slopes, ab
