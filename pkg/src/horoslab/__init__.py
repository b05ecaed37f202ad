"""Isoperimetric regions between two parallel horocycles in the hyperbolic plane.

The slab is the strip ``1 <= y <= c`` of the upper half-plane model.  The
package computes closed-form perimeter/area of every candidate region,
locates the thresholds where the minimizing family changes, classifies the
minimizer for a prescribed area and samples the isoperimetric profile.
Every closed form has an independent quadrature or polyline oracle in
:mod:`horoslab.oracle`.
"""

from horoslab.analysis import Thresholds, compute_thresholds
from horoslab.errors import ConvergenceError, DomainError
from horoslab.profile import Classification, ProfileSample, classify, minimal_perimeter, profile_curve
from horoslab.regions import (
    EquidistantHalfdisk,
    GeodesicDisk,
    GeodesicHalfdiskLower,
    GeodesicHalfdiskUpper,
    HorocycleHalfdisk,
    Measures,
    Section,
    SlabConfig,
    region_measures,
)

__all__ = [
    "Classification",
    "ConvergenceError",
    "DomainError",
    "EquidistantHalfdisk",
    "GeodesicDisk",
    "GeodesicHalfdiskLower",
    "GeodesicHalfdiskUpper",
    "HorocycleHalfdisk",
    "Measures",
    "ProfileSample",
    "Section",
    "SlabConfig",
    "Thresholds",
    "classify",
    "compute_thresholds",
    "minimal_perimeter",
    "profile_curve",
    "region_measures",
]

__version__ = "0.1.0"
