"""Locally invariant orderings of torsion-free groups."""

from ._ordo import (
    ExtensionError,
    alpha_witness,
    backtrack_solve,
    ball,
    check_axioms,
    compare_alpha,
    compose,
    diffuse_scan,
    extreme_points,
    invert,
    is_extreme,
    peel_solve,
    run,
    tower_solve,
)

__all__ = [
    "ExtensionError",
    "alpha_witness",
    "backtrack_solve",
    "ball",
    "check_axioms",
    "compare_alpha",
    "compose",
    "diffuse_scan",
    "extreme_points",
    "invert",
    "is_extreme",
    "peel_solve",
    "run",
    "tower_solve",
]
