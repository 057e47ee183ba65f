"""
Extremal area and perimeter of poristic Steiner 4-chains.

Every symmetric function of the four bends is determined by one bend t once
the invariant moments are fixed. S(t) = sum r_i^2 and L(t) = sum r_i are
evaluated in closed form; their critical points come from the factors P1, P2
(symmetric chains) and P4 (no real roots on the poristic interval).
"""

import concurrent.futures
import enum
import math
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from .geometry import DEFAULT_TOL, Gauge
from .invariants import (
    axial_bends4,
    lateral_bends4,
    moments4,
    poristic_range,
    signed_curvatures,
)
from ..utils.logger import get_logger
from ..utils.validators import InputError, PoleError, RangeError

logger = get_logger(__name__)

_ISOLATION_SAMPLES = 512
_BISECTION_STEPS = 200
_CONFIRMATION_POINTS = 257


class ExtremalUnit(str, enum.Enum):
    SUM_OF_RADII = "sum-of-radii"
    AREA_WITH_PI = "area-with-pi"


class ChainKind(str, enum.Enum):
    AXIAL = "axial"
    LATERAL = "lateral"


@dataclass(frozen=True)
class SymmetricChain:
    kind: ChainKind
    bends: Tuple[float, float, float, float]


@dataclass(frozen=True)
class ExtremalResult:
    max_value: float
    min_value: float
    argmax: SymmetricChain
    argmin: SymmetricChain
    unit: ExtremalUnit

    @property
    def factor(self) -> float:
        return math.pi if self.unit is ExtremalUnit.AREA_WITH_PI else 1.0

    @property
    def raw_max(self) -> float:
        """Maximum without the factor pi (sum of squared radii for area)"""
        return self.max_value / self.factor

    @property
    def raw_min(self) -> float:
        return self.min_value / self.factor

    def to_dict(self) -> Dict:
        return {
            "unit": self.unit.value,
            "max": self.max_value,
            "min": self.min_value,
            "raw_max": self.raw_max,
            "raw_min": self.raw_min,
            "argmax": {"kind": self.argmax.kind.value, "bends": list(self.argmax.bends)},
            "argmin": {"kind": self.argmin.kind.value, "bends": list(self.argmin.bends)},
        }


@dataclass(frozen=True)
class CriticalPolys:
    """Factors of the numerator of dS/dt, coefficients in ascending powers of t"""
    p1: Tuple[float, ...]
    p2: Tuple[float, ...]
    p4: Tuple[float, ...]
    w: float

    def evaluate(self, name: str, t):
        coeffs = {"P1": self.p1, "P2": self.p2, "P4": self.p4}.get(name)
        if coeffs is None:
            raise InputError(f"Unknown critical polynomial {name!r}")
        return P.polyval(t, coeffs)

    def roots_in(self, name: str, lo: float, hi: float) -> Tuple[float, ...]:
        """Real roots in [lo, hi] by sign-change isolation and bisection"""
        if hi <= lo:
            return ()
        grid = np.linspace(lo, hi, _ISOLATION_SAMPLES + 1)
        values = self.evaluate(name, grid)
        roots: List[float] = []
        for k in range(_ISOLATION_SAMPLES):
            f_a, f_b = values[k], values[k + 1]
            if f_a == 0.0:
                roots.append(float(grid[k]))
            elif f_a * f_b < 0:
                roots.append(self._bisect(name, float(grid[k]), float(grid[k + 1]), float(f_a)))
        if values[-1] == 0.0:
            roots.append(float(grid[-1]))
        return tuple(roots)

    def _bisect(self, name: str, a: float, b: float, f_a: float) -> float:
        for _ in range(_BISECTION_STEPS):
            mid = 0.5 * (a + b)
            f_mid = float(self.evaluate(name, mid))
            if f_mid == 0.0 or b - a <= 1e-15 * max(1.0, abs(mid)):
                return mid
            if (f_mid > 0) == (f_a > 0):
                a, f_a = mid, f_mid
            else:
                b = mid
        return 0.5 * (a + b)


def _require_four(g: Gauge) -> None:
    if g.n != 4:
        raise InputError(f"Extremal problems are solved for n=4, got n={g.n}")


def _check_bend(g: Gauge, t: float, tol: float) -> None:
    rng = poristic_range(g)
    if not rng.contains_bend(t, tol):
        raise RangeError(f"Bend {t!r} outside poristic range [{rng.b_lo!r}, {rng.b_hi!r}]")


def _area_values(g: Gauge, t):
    """S(t) through the elementary symmetric functions of the other three bends"""
    i1, i2, i3 = moments4(g)
    e1 = i1 - t
    p2 = i2 - t * t
    p3 = i3 - t * t * t
    e2 = (e1 * e1 - p2) / 2.0
    e3 = (e1 * e1 * e1 - 3.0 * e1 * p2 + 2.0 * p3) / 6.0
    if np.any(np.abs(e3) <= 1e-14 * np.abs(e1 * e1 * e1)):
        raise PoleError("Product of the remaining bends vanishes")
    return 1.0 / (t * t) + (e2 * e2 - 2.0 * e1 * e3) / (e3 * e3)


def _quadratic_factor(g: Gauge, t):
    """Q(t) = (a-A)^2 - 4(a+A)t + 4t^2, positive for every t"""
    k = signed_curvatures(g)
    return (k.a - k.A) ** 2 - 4.0 * k.total * t + 4.0 * t * t


def _perimeter_values(g: Gauge, t):
    k = signed_curvatures(g)
    s = k.total
    denominator = t * (s - t) * _quadratic_factor(g, t)
    if np.any(np.abs(denominator) <= 1e-14 * s ** 4):
        raise PoleError("Denominator of L(t) vanishes")
    return s * (k.A - k.a) ** 2 / denominator


def sum_area_S(g: Gauge, t: float, tol: float = DEFAULT_TOL) -> float:
    """Sum of squared radii of the chain containing a circle of bend t"""
    _require_four(g)
    _check_bend(g, t, tol)
    return float(_area_values(g, t))


def sum_radii_L(g: Gauge, t: float, tol: float = DEFAULT_TOL) -> float:
    """Sum of radii of the chain containing a circle of bend t"""
    _require_four(g)
    _check_bend(g, t, tol)
    return float(_perimeter_values(g, t))


def critical_polynomials(g: Gauge) -> CriticalPolys:
    _require_four(g)
    k = signed_curvatures(g)
    a, A = k.a, k.A
    s = a + A
    m = (a - A) ** 2
    c = 5.0 * a * a + 6.0 * a * A + 5.0 * A * A
    p1 = (s, -2.0)
    p2 = (m, -8.0 * s, 8.0)
    p4 = (m * m * s * s, -m * s * c, c * c, -8.0 * s * c, 4.0 * c)
    w = -55.0 * A ** 4 + 196.0 * A ** 3 * a + 266.0 * A * A * a * a + 196.0 * A * a ** 3 + 55.0 * a ** 4
    return CriticalPolys(p1, p2, p4, w)


def area_derivative(g: Gauge, t: float) -> float:
    """dS/dt = -2 P1 P2 P4 / [t (a+A-t) Q(t)]^3"""
    polys = critical_polynomials(g)
    s = signed_curvatures(g).total
    numerator = polys.evaluate("P1", t) * polys.evaluate("P2", t) * polys.evaluate("P4", t)
    return float(-2.0 * numerator / (t * (s - t) * _quadratic_factor(g, t)) ** 3)


def perimeter_critical_cubic(g: Gauge) -> Tuple[float, float, float, float]:
    """Ascending coefficients of the cubic factor of dL/dt; equals P1 * P2"""
    _require_four(g)
    k = signed_curvatures(g)
    a, A = k.a, k.A
    return (
        A ** 3 - A * A * a - A * a * a + a ** 3,
        -(10.0 * A * A + 12.0 * A * a + 10.0 * a * a),
        24.0 * (A + a),
        -16.0,
    )


def perimeter_derivative(g: Gauge, t: float) -> float:
    """dL/dt = -(A+a)(A-a)^2 C(t) / [t (a+A-t) Q(t)]^2"""
    k = signed_curvatures(g)
    s = k.total
    cubic = P.polyval(t, perimeter_critical_cubic(g))
    return float(-s * (k.A - k.a) ** 2 * cubic / (t * (s - t) * _quadratic_factor(g, t)) ** 2)


def _confirm(g: Gauge, result: ExtremalResult, values_fn) -> None:
    rng = poristic_range(g)
    grid = np.linspace(rng.b_lo, rng.b_hi, _CONFIRMATION_POINTS)
    values = result.factor * values_fn(g, grid)
    slack = 1e-9 * result.max_value
    if values.max() > result.max_value + slack or values.min() < result.min_value - slack:
        logger.warning(
            f"Sweep leaves closed-form bounds: [{values.min():.17g}, {values.max():.17g}] "
            f"vs [{result.min_value:.17g}, {result.max_value:.17g}]"
        )


def extremal_area(g: Gauge) -> ExtremalResult:
    """Maximal (axial) and minimal (lateral) area of the poristic 4-chains"""
    _require_four(g)
    k = signed_curvatures(g)
    a, A = k.a, k.A
    area_max = math.pi * (
        (A ** 4 + 6 * A ** 3 * a + 18 * A * A * a * a + 6 * A * a ** 3 + a ** 4)
        / (A * A * a * a * (a + A) ** 2)
    )
    area_min = math.pi * 32.0 * (3 * a + A) * (a + 3 * A) / (A - a) ** 4
    result = ExtremalResult(
        max_value=area_max,
        min_value=area_min,
        argmax=SymmetricChain(ChainKind.AXIAL, axial_bends4(g)),
        argmin=SymmetricChain(ChainKind.LATERAL, lateral_bends4(g)),
        unit=ExtremalUnit.AREA_WITH_PI,
    )
    _confirm(g, result, _area_values)
    return result


def extremal_perimeter(g: Gauge) -> ExtremalResult:
    """Maximal (axial) and minimal (lateral) sum of radii of the poristic 4-chains"""
    _require_four(g)
    k = signed_curvatures(g)
    a, A = k.a, k.A
    result = ExtremalResult(
        max_value=-(A - a) ** 2 / (A * a * (a + A)),
        min_value=16.0 * (A + a) / (A - a) ** 2,
        argmax=SymmetricChain(ChainKind.AXIAL, axial_bends4(g)),
        argmin=SymmetricChain(ChainKind.LATERAL, lateral_bends4(g)),
        unit=ExtremalUnit.SUM_OF_RADII,
    )
    _confirm(g, result, _perimeter_values)
    return result


@dataclass(frozen=True)
class SweepTable:
    """Grid of (t, S(t), L(t)) over the poristic bend range"""
    t: np.ndarray
    S: np.ndarray
    L: np.ndarray

    def __len__(self) -> int:
        return len(self.t)

    def rows(self):
        return zip(self.t.tolist(), self.S.tolist(), self.L.tolist())

    def to_csv(self, digits: int = 17) -> str:
        lines = ["t,S,L"]
        lines.extend(",".join(format(v, f".{digits}g") for v in row) for row in self.rows())
        return "\n".join(lines) + "\n"


def sweep(g: Gauge, m: int, workers: int = 1) -> SweepTable:
    """Evaluate S and L at m uniform bends in [b_*, b^*]; chunks may run concurrently"""
    _require_four(g)
    if m < 2:
        raise InputError(f"Sweep needs at least 2 points, got {m}")
    rng = poristic_range(g)
    grid = np.linspace(rng.b_lo, rng.b_hi, m)
    chunks = np.array_split(grid, max(1, min(workers, m)))

    def evaluate(chunk: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        return _area_values(g, chunk), _perimeter_values(g, chunk)

    if workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
            parts = list(executor.map(evaluate, chunks))
    else:
        parts = [evaluate(chunk) for chunk in chunks]
    logger.debug(f"Sweep of {m} points over [{rng.b_lo:.6g}, {rng.b_hi:.6g}] in {len(chunks)} chunks")
    return SweepTable(
        t=grid,
        S=np.concatenate([part[0] for part in parts]),
        L=np.concatenate([part[1] for part in parts]),
    )
