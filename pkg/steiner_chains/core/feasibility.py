"""
Feasibility of an ordered radius quadruple as a Steiner 4-chain.

Pipeline: actual moments -> virtual Soddy pair from the first two moments ->
Pedoe positivity -> poristic range -> third moment -> neighbour radii of r1.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .geometry import DEFAULT_TOL, Chain, Gauge, construct_chain, phase_for_radius
from .invariants import Moments, moments4, moments_from_bends, poristic_range, yiu_quadratic
from ..utils.logger import get_logger
from ..utils.validators import (
    Infeasible,
    InfeasibleReason,
    NumericError,
    RangeError,
    ensure_quadruple,
)

logger = get_logger(__name__)

DEFAULT_FEASIBILITY_TOL = 1e-6
# Pedoe values this close to zero, relative to (a - A)^2, are rounding noise
_ROUNDING = 1e-14

STAGES = (
    "moment-inversion",
    "pedoe-positivity",
    "range-check",
    "third-moment-check",
    "neighbor-check",
)


@dataclass(frozen=True)
class SoddyCandidate:
    """Virtual Soddy pair recovered from moments"""
    a: float
    A: float
    R: float
    r: float
    d: float

    def to_gauge(self) -> Gauge:
        return Gauge(self.R, self.r, self.d, 4)

    def to_dict(self) -> Dict[str, float]:
        return {"R": self.R, "r": self.r, "d": self.d}


@dataclass(frozen=True)
class FeasibilityStage:
    name: str
    passed: bool
    values: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {"name": self.name, "pass": self.passed, "values": dict(self.values)}


@dataclass(frozen=True)
class FeasibilityReport:
    """Staged verdict; stages stop at the first failure"""
    verdict: bool
    stages: Tuple[FeasibilityStage, ...]
    candidate: Optional[SoddyCandidate] = None
    chain: Optional[Chain] = None

    @property
    def failed_stage(self) -> Optional[str]:
        for stage in self.stages:
            if not stage.passed:
                return stage.name
        return None

    def to_dict(self) -> Dict:
        doc = {
            "verdict": self.verdict,
            "stages": [stage.to_dict() for stage in self.stages],
            "candidate": self.candidate.to_dict() if self.candidate else None,
        }
        if self.chain is not None:
            doc["chain"] = {
                "phase": self.chain.phase,
                "circles": [c.to_dict() for c in self.chain.circles],
            }
        return doc


def actual_moments(radii: Sequence[float]) -> Moments:
    """(I1, I2, I3) of the bends 1/r_i"""
    ensure_quadruple("radii", radii)
    return moments_from_bends([1.0 / r for r in radii], 3, 4)


def _virtual_roots(i1: float, i2: float) -> Tuple[float, float]:
    """Roots (a, A) of 16a^2 - 8 I1 a + (8 I2 - 3 I1^2) = 0; they sum to I1/2"""
    disc = 4.0 * i1 * i1 - 8.0 * i2
    if disc < 0:
        raise Infeasible(InfeasibleReason.NO_REAL_ROOTS, f"4*I1^2 - 8*I2 = {disc!r}")
    root = math.sqrt(disc)
    a, A = (i1 + root) / 4.0, (i1 - root) / 4.0
    if not (a > 0 > A):
        raise Infeasible(InfeasibleReason.SIGN_PATTERN, f"roots a={a!r}, A={A!r}")
    return a, A


def _pedoe(a: float, A: float) -> float:
    return a * a + 6.0 * a * A + A * A


def _pedoe_admissible(a: float, A: float, tol: float = DEFAULT_TOL) -> bool:
    """a^2 + 6aA + A^2 >= 0 up to tol * (a - A)^2; zero is the concentric pair"""
    return _pedoe(a, A) >= -tol * (a - A) ** 2


def _candidate(a: float, A: float) -> SoddyCandidate:
    pedoe = _pedoe(a, A)
    if abs(pedoe) <= _ROUNDING * (a - A) ** 2:
        pedoe = 0.0
    if not _pedoe_admissible(a, A):
        raise Infeasible(InfeasibleReason.PEDOE_NEGATIVE, f"a^2 + 6aA + A^2 = {pedoe!r}")
    R, r = -1.0 / A, 1.0 / a
    # d^2 = R^2 - 6Rr + r^2 = R^2 r^2 (a^2 + 6aA + A^2)
    return SoddyCandidate(a, A, R, r, R * r * math.sqrt(max(pedoe, 0.0)))


def solve_virtual_soddy(i1: float, i2: float) -> SoddyCandidate:
    """Virtual Soddy pair whose n=4 moments are I1, I2"""
    a, A = _virtual_roots(i1, i2)
    return _candidate(a, A)


def virtual_third_moment(candidate: SoddyCandidate) -> float:
    return moments4(candidate.to_gauge())[2]


def _close(x: float, y: float, tol: float) -> bool:
    return abs(x - y) <= tol * max(abs(x), abs(y))


def _exhibit(gauge: Gauge, radii: Sequence[float], tol: float) -> Chain:
    """Chain of the family whose radii follow the given order"""
    phase = phase_for_radius(gauge, radii[0], tol)
    options = [construct_chain(gauge, phase), construct_chain(gauge, -phase)]

    def mismatch(chain: Chain) -> float:
        return max(abs(x - y) / y for x, y in zip(chain.radii, radii))

    return min(options, key=mismatch)


def feasibility_test(
    radii: Sequence[float],
    tol: float = DEFAULT_FEASIBILITY_TOL,
    exhibit: bool = False,
    discriminant_tol: float = DEFAULT_TOL,
) -> FeasibilityReport:
    """Decide whether (r1, r2, r3, r4) in this order are the radii of a Steiner 4-chain"""
    ensure_quadruple("radii", radii)
    i1, i2, i3 = actual_moments(radii)
    stages: List[FeasibilityStage] = []

    def finish(verdict: bool, candidate: Optional[SoddyCandidate] = None, chain: Optional[Chain] = None):
        report = FeasibilityReport(verdict, tuple(stages), candidate, chain)
        logger.info(f"Feasibility of {tuple(radii)}: {verdict} (failed at {report.failed_stage})")
        return report

    # 1. moment inversion
    inversion_values: Dict[str, Any] = {"I1": i1, "I2": i2, "I3": i3}
    try:
        a, A = _virtual_roots(i1, i2)
    except Infeasible as e:
        inversion_values["reason"] = e.reason.value
        stages.append(FeasibilityStage(STAGES[0], False, inversion_values))
        return finish(False)
    inversion_values.update({"a": a, "A": A})
    stages.append(FeasibilityStage(STAGES[0], True, inversion_values))

    # 2. Pedoe positivity; equal radii give exactly zero (concentric pair)
    pedoe = _pedoe(a, A)
    try:
        candidate = _candidate(a, A)
    except Infeasible:
        stages.append(FeasibilityStage(STAGES[1], False, {"pedoe": pedoe}))
        return finish(False)
    stages.append(FeasibilityStage(STAGES[1], True, {
        "pedoe": pedoe, "R": candidate.R, "r": candidate.r, "d_squared": candidate.d ** 2,
    }))
    gauge = candidate.to_gauge()

    # 3. poristic range
    rng = poristic_range(gauge)
    in_range = all(rng.contains_radius(u, tol) for u in radii)
    stages.append(FeasibilityStage(STAGES[2], in_range, {
        "r_lo": rng.r_lo, "r_hi": rng.r_hi, "min_radius": min(radii), "max_radius": max(radii),
    }))
    if not in_range:
        return finish(False, candidate)

    # 4. third moment
    virtual_i3 = virtual_third_moment(candidate)
    third_ok = abs(i3 - virtual_i3) <= tol * abs(i3)
    stages.append(FeasibilityStage(STAGES[3], third_ok, {"I3": i3, "virtual_I3": virtual_i3}))
    if not third_ok:
        return finish(False, candidate)

    # 5. neighbours of r1 must be {r4, r2}
    expected = sorted((1.0 / radii[3], 1.0 / radii[1]))
    neighbor_values = {"expected_low": expected[0], "expected_high": expected[1]}
    try:
        quadratic = yiu_quadratic(gauge, radii[0], tol)
        v_minus, v_plus = quadratic.roots(discriminant_tol)
    except (RangeError, NumericError) as e:
        logger.debug(f"Neighbour check failed to evaluate: {e}")
        stages.append(FeasibilityStage(STAGES[4], False, neighbor_values))
        return finish(False, candidate)
    # Neighbours compared through the root sum and product of the quadratic
    neighbor_ok = (
        _close(quadratic.root_sum, expected[0] + expected[1], tol)
        and _close(quadratic.root_product, expected[0] * expected[1], tol)
    )
    neighbor_values.update({"v_minus": v_minus, "v_plus": v_plus})
    stages.append(FeasibilityStage(STAGES[4], neighbor_ok, neighbor_values))
    if not neighbor_ok:
        return finish(False, candidate)

    chain = _exhibit(gauge, radii, tol) if exhibit else None
    return finish(True, candidate, chain)
