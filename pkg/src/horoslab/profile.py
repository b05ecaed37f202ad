"""Minimizer classification and the isoperimetric profile of the slab.

Only connected candidates are considered.  Upper geodesic halfdisks and
full geodesic disks are never minimizers; they remain available to callers
as comparison candidates through :mod:`horoslab.regions`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from horoslab import analysis
from horoslab.analysis import Regime, RootSettings, Thresholds, compute_thresholds
from horoslab.errors import DomainError
from horoslab.regions import (
    HOROCYCLE_AREA,
    EquidistantHalfdisk,
    GeodesicDisk,
    GeodesicHalfdiskLower,
    GeodesicHalfdiskUpper,
    HorocycleHalfdisk,
    Region,
    Section,
    SlabConfig,
    region_measures,
)

TIE_TOL = 1e-9

PROFILE_KINDS = {
    GeodesicHalfdiskLower: "geodesic",
    HorocycleHalfdisk: "horocycle",
    EquidistantHalfdisk: "equidistant",
    Section: "section",
}


@dataclass(frozen=True)
class Classification:
    minimizers: tuple[Region, ...]
    minimal_perimeter: float
    tie: bool
    regime: Regime


@dataclass(frozen=True)
class ProfileSample:
    area: float
    min_perimeter: float
    region_kind: str


def section_for_area(slab: SlabConfig, A: float) -> Section:
    return Section(A / (1.0 - 1.0 / slab.c))


def halfdisk_for_area(A: float, settings: RootSettings = analysis.DEFAULT_ROOT) -> Region:
    """The halfdisk above ``{y = 1}`` with area ``A``; the family is fixed by ``A`` vs ``4 - pi``."""
    if A < HOROCYCLE_AREA:
        return GeodesicHalfdiskLower(analysis.solve_theta1_from_area(A, settings))
    if A == HOROCYCLE_AREA:
        return HorocycleHalfdisk()
    return EquidistantHalfdisk(analysis.solve_alpha_from_area(A, settings))


def classify(
    slab: SlabConfig,
    A: float,
    *,
    tie_tol: float = TIE_TOL,
    thresholds: Thresholds | None = None,
) -> Classification:
    """Minimizing region(s) of area ``A`` in the slab.

    Areas within ``tie_tol`` of a threshold resolve to that threshold's
    outcome: a tie, or for wide slabs the horocycle halfdisk at ``4 - pi``.
    """
    if not (math.isfinite(A) and A > 0.0):
        raise DomainError(f"area must be positive, got {A!r}")
    th = thresholds if thresholds is not None else compute_thresholds(slab)
    section = section_for_area(slab, A)

    if th.regime is Regime.NARROW:
        if A < th.A0 - tie_tol:
            regions = (halfdisk_for_area(A),)
        elif A <= th.A0 + tie_tol:
            regions = (halfdisk_for_area(A), section)
        else:
            regions = (section,)
    elif th.regime is Regime.CRITICAL:
        if A < th.A0 - tie_tol:
            regions = (halfdisk_for_area(A),)
        elif A <= th.A0 + tie_tol:
            regions = (HorocycleHalfdisk(), section)
        else:
            regions = (section,)
    else:
        assert th.A1 is not None
        if A < HOROCYCLE_AREA - tie_tol:
            regions = (halfdisk_for_area(A),)
        elif A <= HOROCYCLE_AREA + tie_tol:
            regions = (HorocycleHalfdisk(),)
        elif A < th.A1 - tie_tol:
            regions = (halfdisk_for_area(A),)
        elif A <= th.A1 + tie_tol:
            regions = (halfdisk_for_area(A), section)
        else:
            regions = (section,)

    perimeter = min(region_measures(slab, r).perimeter for r in regions)
    return Classification(regions, perimeter, len(regions) == 2, th.regime)


def minimal_perimeter(slab: SlabConfig, A: float) -> float:
    return classify(slab, A).minimal_perimeter


def profile_curve(slab: SlabConfig, A_min: float, A_max: float, n: int) -> list[ProfileSample]:
    """Sample the profile at ``n`` uniformly spaced areas in ``[A_min, A_max]``."""
    if n < 2:
        raise DomainError(f"need at least 2 samples, got {n!r}")
    if not 0.0 < A_min < A_max:
        raise DomainError(f"need 0 < A_min < A_max, got [{A_min!r}, {A_max!r}]")
    th = compute_thresholds(slab)
    step = (A_max - A_min) / (n - 1)
    samples = []
    for i in range(n):
        area = A_max if i == n - 1 else A_min + i * step
        cls = classify(slab, area, thresholds=th)
        samples.append(ProfileSample(area, cls.minimal_perimeter, PROFILE_KINDS[type(cls.minimizers[0])]))
    return samples


@dataclass(frozen=True)
class Realization:
    """Euclidean picture of a region.

    Disks and halfdisks carry ``euclid_center`` and a radius in
    ``euclid_radius_or_width``; sections carry their width there and
    ``euclid_center`` is ``None``.  ``x_interval``/``y_interval`` bound the
    region's part inside the slab.
    """

    kind: str
    parameter: float | None
    euclid_center: tuple[float, float] | None
    euclid_radius_or_width: float
    x_interval: tuple[float, float]
    y_interval: tuple[float, float]


def realize_region(slab: SlabConfig, r: Region) -> Realization:
    c = slab.c
    if isinstance(r, Section):
        return Realization(r.kind, r.width, None, r.width, (0.0, r.width), (1.0, c))
    if isinstance(r, (GeodesicHalfdiskLower, HorocycleHalfdisk, EquidistantHalfdisk)):
        rad = r.euclid_radius
        param = getattr(r, "theta1", None) if isinstance(r, GeodesicHalfdiskLower) else getattr(r, "alpha", None)
        return Realization(r.kind, param, (0.0, 1.0), rad, (-rad, rad), (1.0, 1.0 + rad))
    if isinstance(r, GeodesicHalfdiskUpper):
        rad = r.euclid_radius(c)
        return Realization(r.kind, r.theta2, (0.0, c), rad, (-rad, rad), (c - rad, c))
    if isinstance(r, GeodesicDisk):
        # hyperbolic center placed on the middle horocycle y = sqrt(c)
        rho = r.hyper_radius
        h = math.sqrt(c)
        y0, rad = h * math.cosh(rho), h * math.sinh(rho)
        return Realization(r.kind, r.theta, (0.0, y0), rad, (-rad, rad), (y0 - rad, y0 + rad))
    raise TypeError(f"not a region: {r!r}")


def realize(slab: SlabConfig, cls: Classification) -> list[Realization]:
    return [realize_region(slab, r) for r in cls.minimizers]
