"""
Invariants of poristic Steiner chains.

Signed curvatures of the Soddy pair, the poristic range, the neighbour
quadratic, the axial and lateral bend quadruples, closed-form moments for
n = 3 and n = 4, numeric moments for any n, and the axial 6-chain.
"""

import math
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from .geometry import DEFAULT_TOL, Gauge, construct_chain
from ..utils.logger import get_logger
from ..utils.validators import InputError, NumericError, RangeError, ensure_positive

logger = get_logger(__name__)

# Corrections to printed formulas that the closed forms below follow.
ERRATA = (
    "n=3: I1 = (A+a)/2 = (R-r)/(2Rr); the inline value (R-r)/(Rr) is off by a factor 2",
    "n=3: I2 = (A^2 + 6Aa + a^2)/8; an earlier published form of I2 is incorrect",
    "n=4: A^2 + 6Aa + a^2 = d^2/(R^2 r^2), not d/(Rr)",
    "worked examples are rounded to about four digits; exact values govern",
)


@dataclass(frozen=True)
class SignedCurvatures:
    """Bends of the Soddy pair: a = 1/r > 0, A = -1/R < 0"""
    a: float
    A: float

    @property
    def total(self) -> float:
        return self.a + self.A


@dataclass(frozen=True)
class PoristicRange:
    """Extreme radii and bends of the poristic family"""
    r_lo: float
    r_hi: float
    b_lo: float
    b_hi: float

    def contains_radius(self, u: float, tol: float = DEFAULT_TOL) -> bool:
        return self.r_lo - tol * self.r_hi <= u <= self.r_hi + tol * self.r_hi

    def contains_bend(self, t: float, tol: float = DEFAULT_TOL) -> bool:
        return self.b_lo - tol * self.b_hi <= t <= self.b_hi + tol * self.b_hi


@dataclass(frozen=True)
class YiuQuadratic:
    """alpha x^2 + beta x + gamma, whose roots are the neighbour bends of a circle"""
    alpha: float
    beta: float
    gamma: float

    @property
    def discriminant(self) -> float:
        return self.beta ** 2 - 4.0 * self.alpha * self.gamma

    @property
    def root_sum(self) -> float:
        return -self.beta / self.alpha

    def evaluate(self, x: float) -> float:
        return (self.alpha * x + self.beta) * x + self.gamma

    @property
    def root_product(self) -> float:
        return self.gamma / self.alpha

    def roots(self, tol: float = DEFAULT_TOL) -> Tuple[float, float]:
        """Real roots, ascending.

        A discriminant within tol * max(beta^2, |4 alpha gamma|) of zero, on
        either side, counts as a double root (circles at the ends of the
        poristic range).
        """
        disc = self.discriminant
        scale = max(self.beta ** 2, abs(4.0 * self.alpha * self.gamma))
        if abs(disc) <= tol * scale:
            if disc != 0.0:
                logger.debug(f"Clamped discriminant {disc:.3e} to zero")
            double = -self.beta / (2.0 * self.alpha)
            return double, double
        if disc < 0:
            raise NumericError(f"Neighbour quadratic has no real roots (discriminant {disc!r})")
        root = math.sqrt(disc)
        # Stable form: avoid cancellation between -beta and the square root
        w = -0.5 * (self.beta + math.copysign(root, self.beta))
        x1, x2 = w / self.alpha, self.gamma / w
        return (x1, x2) if x1 <= x2 else (x2, x1)


@dataclass(frozen=True)
class Moments:
    """Power sums I_1..I_k of the bends of an n-chain"""
    values: Tuple[float, ...]
    n: int

    @property
    def k(self) -> int:
        return len(self.values)

    @property
    def is_invariant(self) -> bool:
        """Whether every stored moment is constant over the poristic family"""
        return self.k <= self.n - 1

    def __iter__(self) -> Iterator[float]:
        return iter(self.values)

    def __getitem__(self, index: int) -> float:
        return self.values[index]

    def __len__(self) -> int:
        return len(self.values)


def signed_curvatures(g: Gauge) -> SignedCurvatures:
    return SignedCurvatures(1.0 / g.r, -1.0 / g.R)


def poristic_range(g: Gauge) -> PoristicRange:
    """Extreme radii (R -/+ d - r)/2 and their bends"""
    r_lo, r_hi = g.radius_range()
    return PoristicRange(r_lo, r_hi, 1.0 / r_hi, 1.0 / r_lo)


def _require_n(g: Gauge, n: int) -> None:
    if g.n != n:
        raise InputError(f"Operation requires an n={n} gauge, got n={g.n}")


def yiu_quadratic(g: Gauge, u: float, tol: float = DEFAULT_TOL) -> YiuQuadratic:
    """Quadratic whose roots are the bends of the two neighbours of a circle of radius u"""
    rng = poristic_range(g)
    if not rng.contains_radius(u, tol):
        raise RangeError(f"Radius {u!r} outside poristic range [{rng.r_lo!r}, {rng.r_hi!r}]")
    q1 = g.q + 1.0
    rr = g.R * g.r
    alpha = (q1 * rr * u) ** 2
    beta = 2.0 * q1 * rr * u * ((g.q - 1.0) * rr - (g.R - g.r) * u)
    gamma = (q1 * rr - (g.R - g.r) * u) ** 2 + 4.0 * rr * u * u
    return YiuQuadratic(alpha, beta, gamma)


def neighbor_curvatures(
    g: Gauge, u: float, tol: float = DEFAULT_TOL, discriminant_tol: float = DEFAULT_TOL
) -> Tuple[float, float]:
    """(v_minus, v_plus): bends of the neighbours of the circle of radius u.

    tol bounds how far u may sit outside the poristic range; discriminant_tol
    is the relative band around zero treated as a double root.
    """
    return yiu_quadratic(g, u, tol).roots(discriminant_tol)


def axial_bends4(g: Gauge) -> Tuple[float, float, float, float]:
    """Bends of the axial 4-chain, smallest circle first: (b^*, m, b_*, m)"""
    _require_n(g, 4)
    middle = (g.R - g.r) / (2.0 * g.R * g.r)
    return 2.0 / (g.R - g.r - g.d), middle, 2.0 / (g.R - g.r + g.d), middle


def lateral_bends4(g: Gauge) -> Tuple[float, float, float, float]:
    _require_n(g, 4)
    rr = g.R * g.r
    m = (g.R - g.r) / (2.0 * rr)
    e = g.d / (2.0 * math.sqrt(2.0) * rr)
    return m - e, m + e, m + e, m - e


def lateral_quadratic(g: Gauge) -> Tuple[float, float, float]:
    """Ascending coefficients of x^2 - (A+a)x + (A-a)^2/8, rooted at the lateral bends"""
    _require_n(g, 4)
    k = signed_curvatures(g)
    return (k.A - k.a) ** 2 / 8.0, -k.total, 1.0


def moments_from_bends(bends: Sequence[float], k_max: int, n: int = 0) -> Moments:
    """Power sums sum(b^k) for k = 1..k_max"""
    if k_max < 1:
        raise InputError(f"k_max must be >= 1, got {k_max}")
    ensure_positive("bends", bends)
    values = tuple(math.fsum(b ** k for b in bends) for k in range(1, k_max + 1))
    return Moments(values, n or len(bends))


def moments3(g: Gauge) -> Moments:
    _require_n(g, 3)
    k = signed_curvatures(g)
    a, A = k.a, k.A
    return Moments(((A + a) / 2.0, (A * A + 6.0 * A * a + a * a) / 8.0), 3)


def moments4(g: Gauge) -> Moments:
    _require_n(g, 4)
    k = signed_curvatures(g)
    a, A = k.a, k.A
    i1 = 2.0 * (A + a)
    i2 = (3.0 * A * A + 10.0 * A * a + 3.0 * a * a) / 2.0
    i3 = (5.0 * A ** 3 + 27.0 * A * A * a + 27.0 * A * a * a + 5.0 * a ** 3) / 4.0
    return Moments((i1, i2, i3), 4)


def moments_numeric(g: Gauge, k_max: int, phase: float = 0.0) -> Moments:
    """Power sums of the bends of the chain constructed at phase"""
    chain = construct_chain(g, phase)
    return moments_from_bends(chain.bends, k_max, g.n)


def axial_bends6(g: Gauge) -> Tuple[float, ...]:
    """Bends of the axial 6-chain in cyclic order (max, v, w, min, w, v).

    v neighbours the largest bend, w the smallest; both are double roots of
    the neighbour quadratic at the extreme radii.
    """
    _require_n(g, 6)
    rng = poristic_range(g)
    v = sum(neighbor_curvatures(g, rng.r_lo)) / 2.0
    w = sum(neighbor_curvatures(g, rng.r_hi)) / 2.0
    return rng.b_hi, v, w, rng.b_lo, w, v


def moments6(g: Gauge) -> Moments:
    """First five invariant moments of a 6-chain, from the axial chain"""
    return moments_from_bends(axial_bends6(g), 5, 6)
