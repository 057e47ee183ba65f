"""
Planar circle geometry for Steiner chains.

Circles, gauges (Soddy pairs supporting a porism), the limiting-point inversion
that turns a Soddy pair into a concentric annulus, explicit chain construction
and verification, socle recovery, and the reduced socle quartic.

All functions are pure; values are immutable dataclasses.
"""

import cmath
import enum
import itertools
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..utils.logger import get_logger
from ..utils.validators import (
    DomainError,
    InputError,
    NoSocle,
    NumericError,
    RangeError,
    SingularSystem,
    ensure_chain_length,
    ensure_non_empty_sequence,
    ensure_positive,
)

logger = get_logger(__name__)

DEFAULT_TOL = 1e-9

# Below this relative offset the Soddy pair is treated as concentric.
_CONCENTRIC_EPS = 1e-12
_ROUNDING = 1e-14
_BISECTION_STEPS = 200


@dataclass(frozen=True)
class Circle:
    """Planar circle"""
    cx: float
    cy: float
    radius: float

    def __post_init__(self):
        if not math.isfinite(self.radius) or self.radius <= 0:
            raise InputError(f"Circle radius must be positive, got {self.radius!r}")

    @property
    def center(self) -> complex:
        return complex(self.cx, self.cy)

    @property
    def bend(self) -> float:
        """Unsigned curvature 1/radius"""
        return 1.0 / self.radius

    def distance_to(self, other: "Circle") -> float:
        return math.hypot(self.cx - other.cx, self.cy - other.cy)

    def to_dict(self) -> Dict[str, float]:
        return {"cx": self.cx, "cy": self.cy, "radius": self.radius}


class TangencyClass(str, enum.Enum):
    EXTERNAL = "external"
    INTERNAL = "internal"
    DISJOINT = "disjoint"
    NESTED = "nested"
    OVERLAPPING = "overlapping"


@dataclass(frozen=True)
class Gauge:
    """Soddy pair (R, r, d) supporting a porism of n-chains.

    Canonical frame: the outer Soddy circle is centred at the origin and the
    inner one at (d, 0), so the x axis is the axis of porism.
    """
    R: float
    r: float
    d: float
    n: int

    def __post_init__(self):
        ensure_chain_length(self.n)
        ensure_positive("gauge radii", (self.R, self.r))
        if not validate_gauge(self.R, self.r, self.d, self.n, DEFAULT_TOL):
            raise DomainError(
                f"({self.R!r}, {self.r!r}, {self.d!r}) does not support a porism of {self.n}-chains"
            )

    @property
    def q(self) -> float:
        return math.tan(math.pi / self.n) ** 2

    @property
    def ratio(self) -> float:
        return self.R / self.r

    @property
    def pedoe_residual(self) -> float:
        return self.d ** 2 - ((self.R - self.r) ** 2 - 4.0 * self.q * self.R * self.r)

    @property
    def is_concentric(self) -> bool:
        return self.d <= _CONCENTRIC_EPS * self.R

    def radius_range(self) -> Tuple[float, float]:
        """Smallest and largest radius of a circle in the poristic family"""
        return (self.R - self.d - self.r) / 2.0, (self.R + self.d - self.r) / 2.0

    def outer_circle(self) -> Circle:
        return Circle(0.0, 0.0, self.R)

    def inner_circle(self) -> Circle:
        return Circle(self.d, 0.0, self.r)

    def to_dict(self) -> Dict[str, float]:
        return {"R": self.R, "r": self.r, "d": self.d, "n": self.n}


def _pedoe_d_squared(R: float, r: float, n: int) -> float:
    return (R - r) ** 2 - 4.0 * math.tan(math.pi / n) ** 2 * R * r


def _pedoe_scale(R: float, r: float, n: int) -> float:
    """Magnitude of the terms of the Pedoe relation; tolerances are relative to it"""
    return (R - r) ** 2 + 4.0 * math.tan(math.pi / n) ** 2 * R * r


def make_gauge(R: float, r: float, n: int) -> Gauge:
    """Gauge with d fixed by the Pedoe relation d^2 = (R-r)^2 - 4 tan^2(pi/n) R r"""
    ensure_chain_length(n)
    ensure_positive("Soddy radii", (R, r))
    if R <= r:
        raise DomainError(f"Outer radius {R!r} must exceed inner radius {r!r}")

    d_squared = _pedoe_d_squared(R, r, n)
    scale = _pedoe_scale(R, r, n)
    if abs(d_squared) <= _ROUNDING * scale:
        # Cancellation noise at the concentric root
        d_squared = 0.0
    elif d_squared < -DEFAULT_TOL * scale:
        raise DomainError(f"No porism of {n}-chains for R={R!r}, r={r!r} (d^2 = {d_squared!r})")
    elif d_squared < 0:
        logger.info(f"Pedoe d^2 = {d_squared!r} within tolerance of zero; using a concentric gauge")
        d_squared = 0.0
    return Gauge(R, r, math.sqrt(d_squared), n)


def validate_gauge(R: float, r: float, d: float, n: int, tol: float = DEFAULT_TOL) -> bool:
    """Whether (R, r, d) satisfies the Pedoe relation for n within tol, relative to its scale"""
    if not all(math.isfinite(v) for v in (R, r, d)) or n < 3:
        return False
    if r <= 0 or R <= r or d < 0 or d >= R - r:
        return False
    return abs(d * d - _pedoe_d_squared(R, r, n)) <= tol * _pedoe_scale(R, r, n)


def gauge_from_curvatures(a: float, A: float, n: int) -> Gauge:
    """Gauge from signed curvatures a = 1/r > 0 and A = -1/R < 0"""
    if not (a > 0 > A):
        raise InputError(f"Signed curvatures must satisfy a > 0 > A, got a={a!r}, A={A!r}")
    return make_gauge(-1.0 / A, 1.0 / a, n)


def concentric_ratio(n: int) -> float:
    """R/r of the concentric Soddy pair carrying n-chains"""
    ensure_chain_length(n)
    s = math.sin(math.pi / n)
    return (1.0 + s) / (1.0 - s)


def tangency_class(c1: Circle, c2: Circle, tol: float = DEFAULT_TOL) -> TangencyClass:
    """Classify the relative position of two circles"""
    dist = c1.distance_to(c2)
    scale = max(c1.radius, c2.radius)
    outer_sum = c1.radius + c2.radius
    inner_gap = abs(c1.radius - c2.radius)

    if abs(dist - outer_sum) <= tol * scale:
        return TangencyClass.EXTERNAL
    if abs(dist - inner_gap) <= tol * scale:
        return TangencyClass.INTERNAL
    if dist > outer_sum:
        return TangencyClass.DISJOINT
    if dist < inner_gap:
        return TangencyClass.NESTED
    return TangencyClass.OVERLAPPING


def _invert_circle(center: complex, radius: float, pole: complex, power: float) -> Tuple[complex, float]:
    """Image of a circle under inversion about pole; the circle must avoid the pole"""
    delta = center - pole
    pw = abs(delta) ** 2 - radius ** 2
    if abs(pw) <= 1e-14 * (abs(delta) ** 2 + radius ** 2):
        raise NumericError("Circle passes through the inversion pole")
    return pole + power * delta / pw, power * radius / abs(pw)


@dataclass(frozen=True)
class AnnulusMap:
    """Inversion about a limiting point followed by a similarity.

    Forward: w = scale * exp(i*rotation) * (inv(z) - offset). With power == 0
    the inversion is skipped (concentric Soddy pair).
    """
    pole: complex
    power: float
    offset: complex
    rho_inner: float
    rho_outer: float
    scale: float = 1.0
    rotation: float = 0.0

    @property
    def is_identity(self) -> bool:
        return self.power == 0.0

    @property
    def _turn(self) -> complex:
        return self.scale * cmath.exp(1j * self.rotation)

    def map_point(self, z: complex) -> complex:
        if not self.is_identity:
            z = self.pole + self.power / (z - self.pole).conjugate()
        return self._turn * (z - self.offset)

    def unmap_point(self, w: complex) -> complex:
        z = w / self._turn + self.offset
        if not self.is_identity:
            z = self.pole + self.power / (z - self.pole).conjugate()
        return z

    def map_circle(self, circle: Circle) -> Circle:
        center, radius = circle.center, circle.radius
        if not self.is_identity:
            center, radius = _invert_circle(center, radius, self.pole, self.power)
        image = self._turn * (center - self.offset)
        return Circle(image.real, image.imag, radius * self.scale)

    def unmap_circle(self, circle: Circle) -> Circle:
        center = circle.center / self._turn + self.offset
        radius = circle.radius / self.scale
        if not self.is_identity:
            center, radius = _invert_circle(center, radius, self.pole, self.power)
        return Circle(center.real, center.imag, radius)

    def ratio_residual(self, n: int) -> float:
        """Deviation from sin(pi/n) = (rho2 - rho1)/(rho2 + rho1)"""
        return (self.rho_outer - self.rho_inner) / (self.rho_outer + self.rho_inner) - math.sin(math.pi / n)


def limiting_map(g: Gauge) -> AnnulusMap:
    """Map sending the gauge's Soddy circles to concentric circles about the origin"""
    if not validate_gauge(g.R, g.r, g.d, g.n):
        raise DomainError(f"Invalid gauge {g}")
    if g.is_concentric:
        return AnnulusMap(pole=0j, power=0.0, offset=0j, rho_inner=g.r, rho_outer=g.R)

    R, r, d = g.R, g.r, g.d
    # Limiting points x solve d x^2 - (R^2 + d^2 - r^2) x + d R^2 = 0; take the one inside the inner circle
    s = R * R + d * d - r * r
    x = 2.0 * d * R * R / (s + math.sqrt(s * s - 4.0 * d * d * R * R))
    pole = complex(x, 0.0)
    power = r * r - (x - d) ** 2

    inner_img, inner_rho = _invert_circle(complex(d, 0.0), r, pole, power)
    outer_img, outer_rho = _invert_circle(0j, R, pole, power)
    logger.debug(
        f"Limiting map: pole={x:.17g}, power={power:.17g}, "
        f"centre mismatch={abs(inner_img - outer_img):.3e}"
    )
    annulus = AnnulusMap(
        pole=pole,
        power=power,
        offset=(inner_img + outer_img) / 2.0,
        rho_inner=min(inner_rho, outer_rho),
        rho_outer=max(inner_rho, outer_rho),
    )
    residual = annulus.ratio_residual(g.n)
    if abs(residual) > 1e-6:
        logger.warning(f"Annulus ratio off by {residual:.3e} for {g}")
    return annulus


@dataclass(frozen=True)
class Chain:
    """Cyclic sequence of n circles of a poristic family"""
    circles: Tuple[Circle, ...]
    gauge: Gauge
    phase: float = 0.0

    @property
    def n(self) -> int:
        return len(self.circles)

    @property
    def radii(self) -> Tuple[float, ...]:
        return tuple(c.radius for c in self.circles)

    @property
    def bends(self) -> Tuple[float, ...]:
        return tuple(c.bend for c in self.circles)

    def soddy_circles(self) -> Tuple[Circle, Circle]:
        """(inner, outer) Soddy circles"""
        return self.gauge.inner_circle(), self.gauge.outer_circle()


def axial_phase(n: int) -> float:
    """Phase of the axial chain: circle 0 centred on the axis, for every n.

    For odd n the chain at phase pi/n is also centred on the axis (at the
    opposite extreme), so both symmetric chains are axial.
    """
    ensure_chain_length(n)
    return 0.0


def lateral_phase(n: int) -> float:
    """Phase of a lateral chain (tangent to the axis, no centre on it); even n only"""
    ensure_chain_length(n)
    if n % 2:
        raise InputError(f"Lateral chains exist for even n only, got n={n}")
    return math.pi / n


def _annulus_circle(annulus: AnnulusMap, angle: float) -> Circle:
    width = (annulus.rho_outer - annulus.rho_inner) / 2.0
    mid = (annulus.rho_outer + annulus.rho_inner) / 2.0
    return Circle(mid * math.cos(angle), mid * math.sin(angle), width)


def construct_chain(g: Gauge, phase: float = 0.0) -> Chain:
    """Build the chain of the poristic family at the given annulus phase.

    Circles are ordered counterclockwise in the annulus frame starting at phase.
    """
    annulus = limiting_map(g)
    step = 2.0 * math.pi / g.n
    circles = tuple(
        annulus.unmap_circle(_annulus_circle(annulus, phase + k * step)) for k in range(g.n)
    )
    return Chain(circles=circles, gauge=g, phase=phase)


def phase_for_radius(g: Gauge, u: float, tol: float = DEFAULT_TOL) -> float:
    """Phase in [0, pi] at which circle 0 of the constructed chain has radius u"""
    r_lo, r_hi = g.radius_range()
    if u < r_lo - tol * r_hi or u > r_hi + tol * r_hi:
        raise RangeError(f"Radius {u!r} outside poristic range [{r_lo!r}, {r_hi!r}]")
    annulus = limiting_map(g)
    if annulus.is_identity:
        return 0.0

    def radius_at(angle: float) -> float:
        return annulus.unmap_circle(_annulus_circle(annulus, angle)).radius

    lo, hi = 0.0, math.pi
    f_lo = radius_at(lo) - u
    if f_lo * (radius_at(hi) - u) > 0:
        # u sits at an endpoint within tolerance
        return lo if abs(f_lo) <= abs(radius_at(hi) - u) else hi
    for _ in range(_BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        f_mid = radius_at(mid) - u
        if f_mid == 0.0 or hi - lo < 1e-15:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class TangencyResidual:
    """Signed tangency defect of one pair"""
    kind: str            # adjacent | inner | outer
    i: int
    j: Optional[int]     # neighbour index for adjacent pairs
    residual: float
    classification: TangencyClass


@dataclass(frozen=True)
class ChainReport:
    """Outcome of verify_chain"""
    residuals: Tuple[TangencyResidual, ...]
    in_range: Tuple[bool, ...]
    max_residual: float
    tolerance: float
    passed: bool

    def to_dict(self) -> Dict:
        return {
            "passed": self.passed,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "in_range": list(self.in_range),
            "residuals": [
                {
                    "kind": res.kind,
                    "i": res.i,
                    "j": res.j,
                    "residual": res.residual,
                    "class": res.classification.value,
                }
                for res in self.residuals
            ],
        }


def verify_chain(chain: Chain, tol: float = DEFAULT_TOL) -> ChainReport:
    """Measure every tangency the chain must satisfy"""
    ensure_non_empty_sequence("chain circles", chain.circles)
    g = chain.gauge
    if chain.n != g.n:
        raise InputError(f"Chain has {chain.n} circles but its gauge is for n={g.n}")

    inner, outer = chain.soddy_circles()
    residuals: List[TangencyResidual] = []
    for i, circle in enumerate(chain.circles):
        j = (i + 1) % chain.n
        nxt = chain.circles[j]
        residuals.append(TangencyResidual(
            "adjacent", i, j,
            circle.distance_to(nxt) - (circle.radius + nxt.radius),
            tangency_class(circle, nxt, tol),
        ))
    for i, circle in enumerate(chain.circles):
        residuals.append(TangencyResidual(
            "inner", i, None,
            circle.distance_to(inner) - (circle.radius + inner.radius),
            tangency_class(circle, inner, tol),
        ))
        residuals.append(TangencyResidual(
            "outer", i, None,
            circle.distance_to(outer) - (outer.radius - circle.radius),
            tangency_class(circle, outer, tol),
        ))

    r_lo, r_hi = g.radius_range()
    slack = tol * g.R
    in_range = tuple(r_lo - slack <= c.radius <= r_hi + slack for c in chain.circles)
    max_residual = max(abs(res.residual) for res in residuals)
    passed = max_residual <= tol * g.R and all(in_range)
    if not passed:
        logger.info(f"Chain verification failed: max residual {max_residual:.3e}")
    return ChainReport(tuple(residuals), in_range, max_residual, tol, passed)


@dataclass(frozen=True)
class QuarticCoeffs:
    """Reduced quartic c4 x^4 + c2 x^2 + c1 x + c0 (no cubic term)"""
    c4: float
    c2: float
    c1: float
    c0: float

    def as_array(self) -> np.ndarray:
        """Coefficients in ascending powers"""
        return np.array([self.c0, self.c1, self.c2, 0.0, self.c4])

    def evaluate(self, x: float) -> float:
        return float(np.polynomial.polynomial.polyval(x, self.as_array()))

    def scale_at(self, x: float) -> float:
        """Sum of term magnitudes at x, the natural yardstick for evaluate(x)"""
        return float(np.polynomial.polynomial.polyval(abs(x), np.abs(self.as_array())))

    def real_roots(self, tol: float = 1e-9) -> Tuple[float, ...]:
        roots = np.polynomial.polynomial.polyroots(self.as_array())
        return tuple(sorted(float(z.real) for z in roots if abs(z.imag) <= tol * max(1.0, abs(z))))


def socle_quartic(b: Sequence[float]) -> QuarticCoeffs:
    """Quartic whose roots include the signed curvatures of both socles of a 4-chain"""
    if len(b) != 4:
        raise InputError(f"socle_quartic takes four bends, got {len(b)}")
    ensure_positive("bends", b)
    b1, b2, b3, b4 = b
    c2 = -8.0 * (b1 * b2 + b2 * b3 + b3 * b4 + b4 * b1 + 2 * b1 * b3 + 2 * b2 * b4)
    c1 = -16.0 * (b1 * b2 * b3 + b2 * b3 * b4 + b3 * b4 * b1 + b4 * b1 * b2)
    c0 = (
        -12.0 * b1 * b2 * b3 * b4
        - 2.0 * (b1 * b2 + b3 * b4) * (b2 * b3 + b4 * b1)
        + (b1 ** 2 + b3 ** 2) * (b2 ** 2 + b4 ** 2)
    )
    return QuarticCoeffs(16.0, c2, c1, c0)


def _triangle_spread(circles: Sequence[Circle]) -> float:
    p, q, s = (c.center for c in circles)
    u, v = q - p, s - p
    return abs(u.real * v.imag - u.imag * v.real)


def _solve_socle(circles: Sequence[Circle], sign: int, tol: float) -> Circle:
    """Circle with |centre - c_i| = rho + sign * r_i for all four circles"""
    scale = max(c.radius for c in circles)
    triples = list(itertools.combinations(range(4), 3))
    best = max(triples, key=lambda idx: _triangle_spread([circles[i] for i in idx]))
    spread = _triangle_spread([circles[i] for i in best])
    logger.debug(f"Socle triple {best}, spread {spread:.3e}")

    # Pairwise differences of the quadratic conditions are linear in (x, y, rho)
    c0, c1, c2 = (circles[i] for i in best)
    power = [c.cx ** 2 + c.cy ** 2 - c.radius ** 2 for c in (c0, c1, c2)]
    matrix = np.array([
        [2.0 * (c1.cx - c0.cx), 2.0 * (c1.cy - c0.cy)],
        [2.0 * (c2.cx - c0.cx), 2.0 * (c2.cy - c0.cy)],
    ])
    fixed = np.array([power[1] - power[0], power[2] - power[0]])
    per_rho = np.array([
        -2.0 * sign * (c1.radius - c0.radius),
        -2.0 * sign * (c2.radius - c0.radius),
    ])
    extent = max(abs(p.center - q.center) for p, q in itertools.combinations((c0, c1, c2), 2))
    if spread <= tol * extent * extent:
        raise SingularSystem("Socle system is rank-deficient (collinear centres)")
    try:
        (x0, y0), (xr, yr) = np.linalg.solve(matrix, np.column_stack([fixed, per_rho])).T
    except np.linalg.LinAlgError as e:
        raise SingularSystem(f"Socle system is singular: {e}") from e

    # Back-substitute into the first condition: quadratic in rho
    ex, ey = x0 - c0.cx, y0 - c0.cy
    coeffs = [
        xr * xr + yr * yr - 1.0,
        2.0 * (ex * xr + ey * yr - sign * c0.radius),
        ex * ex + ey * ey - c0.radius ** 2,
    ]
    candidates = [
        float(z.real) for z in np.roots(coeffs)
        if abs(z.imag) <= 1e-9 * max(1.0, abs(z)) and z.real > 0
    ]
    if not candidates:
        raise NoSocle("Tangency conditions have no positive real solution")

    def worst(rho: float) -> float:
        cx, cy = x0 + xr * rho, y0 + yr * rho
        return max(abs(math.hypot(cx - c.cx, cy - c.cy) - (rho + sign * c.radius)) for c in circles)

    rho = min(candidates, key=worst)
    residual = worst(rho)
    if residual > tol * max(scale, rho):
        raise NoSocle(f"Fourth-circle residual {residual:.3e} exceeds tolerance")
    return Circle(x0 + xr * rho, y0 + yr * rho, rho)


def find_socles(circles: Sequence[Circle], tol: float = DEFAULT_TOL) -> Tuple[Circle, Circle]:
    """Recover (inner, outer) socles of four cyclically tangent circles"""
    if len(circles) != 4:
        raise InputError(f"find_socles takes four circles, got {len(circles)}")
    inner = _solve_socle(circles, +1, tol)
    outer = _solve_socle(circles, -1, tol)
    return inner, outer
