"""Verification lab for constant mean curvature hypersurfaces of spheres.

The heavy lifting lives in the C++ core; this package re-exports the
pybind11 module.
"""

from cmclab._core import (  # noqa: F401
    Surface,
    make_clifford,
    make_umbilical,
    make_base_surface,
    make_counterexample,
    curvature,
    point,
    normal,
    support_sample,
    proportionality,
    gram_dimensions,
    clifford_spectrum,
    index_counts,
    index_test_constants,
    circle_point,
    transport_curvature,
    partition_obstruction,
    partial_fraction_rejects,
    mesh_crosscheck,
    sample_params,
)

__all__ = [
    "Surface",
    "make_clifford",
    "make_umbilical",
    "make_base_surface",
    "make_counterexample",
    "curvature",
    "point",
    "normal",
    "support_sample",
    "proportionality",
    "gram_dimensions",
    "clifford_spectrum",
    "index_counts",
    "index_test_constants",
    "circle_point",
    "transport_curvature",
    "partition_obstruction",
    "partial_fraction_rejects",
    "mesh_crosscheck",
    "sample_params",
]

__version__ = "0.1.0"
