"""Data-driven inference of qubit measurements.

POVMs are ``n x 4`` arrays with rows ``(a, bx, by, bz)``: the effect
``a I + b . sigma`` yields probability ``a + b . r`` on Bloch vector ``r``.
"""

from ._core import (
    InversionError,
    SolverError,
    born_table,
    ddi_spherical,
    ellipsoid_volume,
    gauge_align,
    gauge_equivalent,
    gen_platonic,
    gen_regular_simplex,
    ideal_mub_povm,
    is_informationally_complete,
    is_observationally_complete,
    min_area_enclosing_triangle,
    mvee,
    nonuniqueness_witness,
    povm_range,
    projective_povm,
    range_invert,
    run_cli,
    simulate_counts,
)

__all__ = [
    "InversionError",
    "SolverError",
    "born_table",
    "ddi_spherical",
    "ellipsoid_volume",
    "gauge_align",
    "gauge_equivalent",
    "gen_platonic",
    "gen_regular_simplex",
    "ideal_mub_povm",
    "is_informationally_complete",
    "is_observationally_complete",
    "min_area_enclosing_triangle",
    "mvee",
    "nonuniqueness_witness",
    "povm_range",
    "projective_povm",
    "range_invert",
    "run_cli",
    "simulate_counts",
]
