"""
Core module

Contains the mathematics of poristic Steiner chains:
- Circle geometry, gauges, chain construction and verification
- Invariant moments and neighbour curvatures
- Feasibility of radius quadruples
- Extremal area and perimeter of 4-chains
- JSON serialization
"""

from .geometry import (
    Circle,
    Gauge,
    Chain,
    ChainReport,
    AnnulusMap,
    QuarticCoeffs,
    TangencyClass,
    make_gauge,
    validate_gauge,
    gauge_from_curvatures,
    concentric_ratio,
    limiting_map,
    construct_chain,
    axial_phase,
    lateral_phase,
    phase_for_radius,
    verify_chain,
    socle_quartic,
    find_socles,
)
from .invariants import (
    ERRATA,
    Moments,
    PoristicRange,
    SignedCurvatures,
    YiuQuadratic,
    signed_curvatures,
    poristic_range,
    yiu_quadratic,
    neighbor_curvatures,
    axial_bends4,
    lateral_bends4,
    lateral_quadratic,
    moments_from_bends,
    moments3,
    moments4,
    moments_numeric,
    axial_bends6,
    moments6,
)
from .feasibility import (
    FeasibilityReport,
    FeasibilityStage,
    SoddyCandidate,
    actual_moments,
    solve_virtual_soddy,
    virtual_third_moment,
    feasibility_test,
)
from .extremal import (
    CriticalPolys,
    ExtremalResult,
    ExtremalUnit,
    ChainKind,
    SweepTable,
    SymmetricChain,
    sum_area_S,
    sum_radii_L,
    critical_polynomials,
    area_derivative,
    perimeter_derivative,
    perimeter_critical_cubic,
    extremal_area,
    extremal_perimeter,
    sweep,
)
from .serialization import dumps, chain_to_dict, chain_from_dict, loads_chain

__all__ = [
    'Circle', 'Gauge', 'Chain', 'ChainReport', 'AnnulusMap', 'QuarticCoeffs', 'TangencyClass',
    'make_gauge', 'validate_gauge', 'gauge_from_curvatures', 'concentric_ratio', 'limiting_map',
    'construct_chain', 'axial_phase', 'lateral_phase', 'phase_for_radius', 'verify_chain',
    'socle_quartic', 'find_socles',
    'ERRATA', 'Moments', 'PoristicRange', 'SignedCurvatures', 'YiuQuadratic',
    'signed_curvatures', 'poristic_range', 'yiu_quadratic', 'neighbor_curvatures',
    'axial_bends4', 'lateral_bends4', 'lateral_quadratic', 'moments_from_bends',
    'moments3', 'moments4', 'moments_numeric', 'axial_bends6', 'moments6',
    'FeasibilityReport', 'FeasibilityStage', 'SoddyCandidate', 'actual_moments',
    'solve_virtual_soddy', 'virtual_third_moment', 'feasibility_test',
    'ChainKind', 'CriticalPolys', 'ExtremalResult', 'ExtremalUnit', 'SweepTable', 'SymmetricChain',
    'sum_area_S', 'sum_radii_L', 'critical_polynomials', 'area_derivative',
    'perimeter_derivative', 'perimeter_critical_cubic', 'extremal_area', 'extremal_perimeter', 'sweep',
    'dumps', 'chain_to_dict', 'chain_from_dict', 'loads_chain',
]
