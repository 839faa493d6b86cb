"""Exact and certified-approximate diameters of finite point sets."""

from ._fastdiam import (
    CertifiedBounds,
    DegenerateInputError,
    DiameterEstimate,
    ExactResult,
    FarthestResult,
    IoError,
    ParseError,
    PointSet,
    UsageError,
    brute_force_diameter,
    c_star,
    c_star_estimate_2d,
    convex_hull_2d,
    distance,
    double_sweep,
    farthest,
    generate,
    iterative_approx,
    load_points,
    randomized_approx,
    rho_star,
    rotating_calipers_diameter_2d,
    run_cli,
    save_points,
    worst_case_five_points,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
