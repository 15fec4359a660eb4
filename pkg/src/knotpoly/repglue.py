"""Numerical verification that abelian SL(2,C) representations of a
companion knot group extend over satellite peripheral tori.

Given a representation sending the companion's meridian/longitude pair to
commuting matrices (mu, lam) in Jordan normal form, a surgery slope p/q,
and a winding number w, the construction produces peripheral images
(mu_P, lam_P) for the satellite with three defining equations:

    (1) mu_P^w = mu          (sign-twisted in the jordan_minus case)
    (2) lam_P  = lam^w
    (3) mu_P^(p w^2 / d) * lam_P^(q / d) = identity,   d = gcd(q, w^2)

Three construction cases, keyed by the Jordan shape of mu and the parity
of w: diagonal (eigenvalue not +-1), jordan_plus (unipotent up to a sign
eps with eps^w = eps), jordan_minus (eigenvalue -1 with even w, which
needs a central character twist).  Everything is double precision; checks
compare max-norm residuals against a configurable tolerance.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from random import Random

DEFAULT_TOL = 1e-9
_ANGLE_TOL = 1e-6


@dataclass(frozen=True)
class Mat2C:
    """2x2 complex matrix with exact-shape helpers for SL(2,C) work."""

    a: complex
    b: complex
    c: complex
    d: complex

    @staticmethod
    def identity() -> "Mat2C":
        return Mat2C(1, 0, 0, 1)

    @staticmethod
    def diagonal(x: complex, y: complex) -> "Mat2C":
        return Mat2C(x, 0, 0, y)

    @staticmethod
    def upper(scale: complex, off: complex) -> "Mat2C":
        """scale * [[1, off], [0, 1]]"""
        return Mat2C(scale, scale * off, 0, scale)

    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def scaled(self, z: complex) -> "Mat2C":
        return Mat2C(z * self.a, z * self.b, z * self.c, z * self.d)

    def __mul__(self, other: "Mat2C") -> "Mat2C":
        return Mat2C(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "Mat2C":
        det = self.det()
        return Mat2C(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def __pow__(self, n: int) -> "Mat2C":
        if n < 0:
            return self.inverse() ** (-n)
        result = Mat2C.identity()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def dist(self, other: "Mat2C") -> float:
        return max(
            abs(self.a - other.a),
            abs(self.b - other.b),
            abs(self.c - other.c),
            abs(self.d - other.d),
        )


@dataclass(frozen=True)
class PeripheralCase:
    """Classification of the companion peripheral pair.

    kind "diagonal" carries the eigenvalues alpha, beta of mu, lam;
    the jordan kinds carry the signs eps, eta and the off-diagonal
    parameters a_off, b_off of mu = eps*[[1, a], [0, 1]],
    lam = eta*[[1, b], [0, 1]].
    """

    kind: str
    alpha: complex = 0j
    beta: complex = 0j
    eps: int = 1
    eta: int = 1
    a_off: complex = 0j
    b_off: complex = 0j


@dataclass(frozen=True)
class PeripheralPair:
    mu: Mat2C
    lam: Mat2C
    case: PeripheralCase


@dataclass(frozen=True)
class GlueInstance:
    """A classified peripheral pair with surgery slope p/q and winding w;
    d = gcd(q, w^2) is the denominator of the surgered satellite slope."""

    p: int
    q: int
    w: int
    d: int
    pair: PeripheralPair


@dataclass(frozen=True)
class Extension:
    """Constructed satellite peripheral images with the residuals of the
    three defining equations (root, longitude power, surgery relation)."""

    mu_p: Mat2C
    lam_p: Mat2C
    central_twist_used: bool
    chosen_k: int | None
    residuals: tuple[float, float, float]


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    residuals: tuple[float, float, float]
    failed_equation: int | None = None
    residual: float | None = None


def classify_case(mu: Mat2C, lam: Mat2C, w: int, tol: float = DEFAULT_TOL) -> PeripheralCase:
    """Route a Jordan-form peripheral pair to its construction case.

    diagonal: mu diagonal with eigenvalue away from +-1 (lam must be
    diagonal too).  jordan_plus: mu a Jordan block of eigenvalue +1, or of
    eigenvalue -1 with odd w.  jordan_minus: eigenvalue -1 with even w.
    Anything else (mu = +-identity, lower-triangular or non-Jordan input,
    determinant away from 1) is rejected.
    """
    for m, label in ((mu, "mu"), (lam, "lam")):
        if abs(m.det() - 1) > tol:
            raise ValueError(f"{label} must lie in SL(2,C); determinant is {m.det()}")
    if abs(mu.c) > tol:
        raise ValueError("mu must be in (upper triangular) Jordan normal form")
    if abs(mu.b) <= tol:
        alpha = mu.a
        if abs(alpha - 1) <= tol or abs(alpha + 1) <= tol:
            raise ValueError("mu must not be the identity up to sign")
        if abs(lam.b) > tol or abs(lam.c) > tol:
            raise ValueError("lam must be diagonal when mu is diagonal")
        return PeripheralCase("diagonal", alpha=alpha, beta=lam.a)
    if abs(mu.a - 1) <= tol:
        eps = 1
    elif abs(mu.a + 1) <= tol:
        eps = -1
    else:
        raise ValueError("a Jordan block in SL(2,C) must have eigenvalue +-1")
    if abs(mu.a - mu.d) > tol:
        raise ValueError("mu must be in Jordan normal form")
    if abs(lam.c) > tol or abs(lam.a - lam.d) > tol:
        raise ValueError("lam must share mu's triangular Jordan shape")
    if abs(lam.a - 1) <= tol:
        eta = 1
    elif abs(lam.a + 1) <= tol:
        eta = -1
    else:
        raise ValueError("lam must have eigenvalue +-1 when mu is a Jordan block")
    a_off = mu.b / eps
    b_off = lam.b / eta
    if eps == 1 or w % 2 == 1:
        return PeripheralCase("jordan_plus", eps=eps, eta=eta, a_off=a_off, b_off=b_off)
    return PeripheralCase("jordan_minus", eps=eps, eta=eta, a_off=a_off, b_off=b_off)


def peripheral_pair(mu: Mat2C, lam: Mat2C, w: int, tol: float = DEFAULT_TOL) -> PeripheralPair:
    """Validate and classify a commuting Jordan-form pair."""
    case = classify_case(mu, lam, w, tol)
    if (mu * lam).dist(lam * mu) > tol:
        raise ValueError("mu and lam must commute")
    return PeripheralPair(mu, lam, case)


def glue_instance(
    p: int, q: int, w: int, mu: Mat2C, lam: Mat2C, tol: float = DEFAULT_TOL
) -> GlueInstance:
    """Bundle slope, winding, and peripheral pair, checking the defining
    relation mu^p * lam^q = identity."""
    if q < 1:
        raise ValueError(f"slope denominator must be positive, got {q!r}")
    if math.gcd(p, q) != 1:
        raise ValueError(f"slope {p}/{q} is not in lowest terms")
    if not isinstance(w, int) or isinstance(w, bool) or w < 1:
        raise ValueError(f"winding number must be an integer >= 1, got {w!r}")
    pair = peripheral_pair(mu, lam, w, tol)
    relation = (mu ** p) * (lam ** q)
    err = relation.dist(Mat2C.identity())
    if err > tol:
        raise ValueError(f"peripheral relation mu^p lam^q = 1 fails (residual {err:g})")
    return GlueInstance(p, q, w, math.gcd(q, w * w), pair)


def choose_k(m: int, p: int, d: int) -> int:
    """Smallest k >= 0 with m + p k = 0 (mod d); needs gcd(p, d) = 1."""
    if d < 1:
        raise ValueError(f"modulus must be positive, got {d!r}")
    if math.gcd(p, d) != 1:
        raise ValueError(f"p = {p} is not invertible modulo d = {d}")
    if d == 1:
        return 0
    return (-m * pow(p, -1, d)) % d


def diagonal_polar_data(g: GlueInstance) -> dict:
    """Polar form (s, t, theta, phi), winding integer m of the relation
    angle, and the chosen root index k for a diagonal-case instance."""
    case = g.pair.case
    if case.kind != "diagonal":
        raise ValueError("polar data only exists for the diagonal case")
    s, theta = abs(case.alpha), cmath.phase(case.alpha)
    t, phi = abs(case.beta), cmath.phase(case.beta)
    m_real = (g.p * theta + g.q * phi) / (2 * math.pi)
    m = round(m_real)
    if abs(m_real - m) > _ANGLE_TOL:
        raise ArithmeticError(
            f"relation angle is off an integer multiple of 2 pi by {abs(m_real - m):g}"
        )
    return {
        "s": s,
        "t": t,
        "theta": theta,
        "phi": phi,
        "m": m,
        "k": choose_k(m, g.p, g.d),
    }


def construct_extension(g: GlueInstance, tol: float = DEFAULT_TOL) -> Extension:
    """Build the satellite peripheral images for a classified instance and
    check the three defining equations against the tolerance."""
    case = g.pair.case
    if case.kind == "diagonal":
        data = diagonal_polar_data(g)
        k = data["k"]
        eta_root = data["s"] ** (1 / g.w) * cmath.exp(1j * (data["theta"] + 2 * math.pi * k) / g.w)
        mu_p = Mat2C.diagonal(eta_root, 1 / eta_root)
        lam_w = case.beta ** g.w
        lam_p = Mat2C.diagonal(lam_w, 1 / lam_w)
        twist = False
    elif case.kind == "jordan_plus":
        mu_p = Mat2C.upper(case.eps, case.a_off / g.w)
        lam_p = Mat2C.upper(case.eta ** g.w, case.b_off * g.w)
        k = None
        twist = False
    elif case.kind == "jordan_minus":
        mu_p = Mat2C.upper(1, case.a_off / g.w)
        lam_p = Mat2C.upper(1, case.b_off * g.w)
        k = None
        twist = True
    else:
        raise ValueError(f"unknown case kind {case.kind!r}")
    residuals = _equation_residuals(g, mu_p, lam_p, twist)
    if max(residuals) > tol:
        raise ArithmeticError(
            f"construction residuals {residuals} exceed tolerance {tol:g}"
        )
    return Extension(mu_p, lam_p, twist, k, residuals)


def _equation_residuals(
    g: GlueInstance, mu_p: Mat2C, lam_p: Mat2C, twist: bool
) -> tuple[float, float, float]:
    mu_target = g.pair.mu.scaled(-1) if twist else g.pair.mu
    r1 = (mu_p ** g.w).dist(mu_target)
    r2 = lam_p.dist(g.pair.lam ** g.w)
    e1 = g.p * (g.w * g.w // g.d)
    e2 = g.q // g.d
    r3 = ((mu_p ** e1) * (lam_p ** e2)).dist(Mat2C.identity())
    return (r1, r2, r3)


def verify_extension(
    g: GlueInstance, e: Extension, tol: float = DEFAULT_TOL
) -> VerifyResult:
    """Recompute the three defining equations from the emitted matrices
    alone (fresh binary-exponentiation powers) and compare to tol."""
    residuals = _equation_residuals(g, e.mu_p, e.lam_p, e.central_twist_used)
    for i, r in enumerate(residuals, start=1):
        if r > tol:
            return VerifyResult(False, residuals, failed_equation=i, residual=r)
    return VerifyResult(True, residuals)


# ------- Randomized instance samplers -------

CASE_KINDS = ("diagonal", "jordan_plus", "jordan_minus")


def sample_instance(kind: str, rng: Random, tol: float = DEFAULT_TOL) -> GlueInstance:
    """Draw a random valid instance of the given construction case.

    Magnitudes and exponents are kept small enough that double precision
    holds the equation residuals far below the default tolerance.
    """
    if kind == "diagonal":
        return _sample_diagonal(rng, tol)
    if kind == "jordan_plus":
        return _sample_jordan_plus(rng, tol)
    if kind == "jordan_minus":
        return _sample_jordan_minus(rng, tol)
    raise ValueError(f"unknown case kind {kind!r}")


def _sample_slope(rng: Random) -> tuple[int, int]:
    while True:
        p = rng.randint(-9, 9)
        q = rng.randint(1, 9)
        if math.gcd(p, q) == 1:
            return p, q


def _sample_diagonal(rng: Random, tol: float) -> GlueInstance:
    while True:
        p, q = _sample_slope(rng)
        w = rng.randint(1, 6)
        s = 1.0 if rng.random() < 0.25 else math.exp(rng.uniform(-0.3, 0.3))
        theta = rng.uniform(-math.pi, math.pi)
        alpha = cmath.rect(s, theta)
        if abs(alpha - 1) < 0.05 or abs(alpha + 1) < 0.05:
            continue
        j = rng.randrange(q)
        log_alpha = complex(math.log(s), theta)
        beta = cmath.exp((-p * log_alpha + 2j * math.pi * j) / q)
        mu = Mat2C.diagonal(alpha, 1 / alpha)
        lam = Mat2C.diagonal(beta, 1 / beta)
        return glue_instance(p, q, w, mu, lam, tol)


def _valid_etas(eps: int, p: int, q: int) -> list[int]:
    # Solutions eta of eps^p * eta^q = 1 over {1, -1}.
    target = eps if p % 2 else 1
    return [eta for eta in (1, -1) if (eta if q % 2 else 1) == target]


def _sample_off_diagonal(rng: Random) -> complex:
    return cmath.rect(rng.uniform(0.5, 2.0), rng.uniform(-math.pi, math.pi))


def _sample_jordan_plus(rng: Random, tol: float) -> GlueInstance:
    while True:
        p, q = _sample_slope(rng)
        eps = rng.choice((1, -1))
        w = rng.randint(1, 6) if eps == 1 else rng.choice((1, 3, 5))
        etas = _valid_etas(eps, p, q)
        if not etas:
            continue
        eta = rng.choice(etas)
        a_off = _sample_off_diagonal(rng)
        b_off = -a_off * p / q
        mu = Mat2C.upper(eps, a_off)
        lam = Mat2C.upper(eta, b_off)
        return glue_instance(p, q, w, mu, lam, tol)


def _sample_jordan_minus(rng: Random, tol: float) -> GlueInstance:
    while True:
        p, q = _sample_slope(rng)
        eps = -1
        w = rng.choice((2, 4, 6))
        etas = _valid_etas(eps, p, q)
        if not etas:
            continue
        eta = rng.choice(etas)
        a_off = _sample_off_diagonal(rng)
        b_off = -a_off * p / q
        mu = Mat2C.upper(eps, a_off)
        lam = Mat2C.upper(eta, b_off)
        return glue_instance(p, q, w, mu, lam, tol)
